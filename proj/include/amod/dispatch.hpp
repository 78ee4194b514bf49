#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "amod/grid_network.hpp"
#include "amod/model.hpp"
#include "amod/sched.hpp"

namespace amod {

inline constexpr SimTime kInfiniteCost = std::numeric_limits<SimTime>::max();

/// Where and at what marginal cost a request fits into one vehicle's schedule.
/// `dropoff_index` refers to the sequence after the pickup insertion, so it is
/// always > pickup_index.
struct AssignmentDecision {
    int vehicle = -1;
    int pickup_index = 0;
    int dropoff_index = 0;
    SimTime marginal_cost = kInfiniteCost;
};

enum class StrategyMode {
    InsertionHeuristic,  // any (k, k') with k' > k
    RadioTaxi            // contiguous pairs at pair boundaries: one passenger at a time
};

/// Best feasible placement of the request's pickup/drop-off pair in this
/// vehicle's schedule: exhaustive over the mode's candidate positions, keeping
/// the (k, k')-lexicographically first minimum of c(modified) - c(original).
/// Candidates violating any stop's time constraint or the seat capacity are
/// infeasible; absent result means none was feasible.
///
/// `prune_bound` lets a caller running an argmin across vehicles skip
/// candidates that are provably worse than a bound it already holds;
/// candidates costing exactly the bound are still returned.
std::optional<AssignmentDecision> best_insertion(const Vehicle& vehicle,
                                                 const TripRequest& request,
                                                 const VehicleSituation& sit,
                                                 const GridNetwork& net, SimTime stop_overhead,
                                                 StrategyMode mode,
                                                 SimTime prune_bound = kInfiniteCost);

/// Fleet-wide argmin of best_insertion. Ties go to the lowest vehicle id,
/// then the lowest (k, k') pair. On success the chosen vehicle's schedule is
/// mutated via insert_pair and the request becomes Assigned; otherwise the
/// request becomes Rejected.
///
/// With threads > 1 the per-vehicle searches run in an OpenMP parallel-for;
/// the reduction compares (cost, vehicle, k, k') as a total order, so the
/// result is identical to the serial reference for any thread count.
std::optional<AssignmentDecision> assign(std::vector<Vehicle>& fleet, TripRequest& request,
                                         const std::vector<VehicleSituation>& situations,
                                         const GridNetwork& net, SimTime stop_overhead,
                                         StrategyMode mode, int threads = 1);

/// Serial reference implementation of assign (no OpenMP), kept as the
/// comparison baseline for tests and the dispatch benchmark.
std::optional<AssignmentDecision> assign_serial(std::vector<Vehicle>& fleet, TripRequest& request,
                                                const std::vector<VehicleSituation>& situations,
                                                const GridNetwork& net, SimTime stop_overhead,
                                                StrategyMode mode);

/// A dispatch strategy is anything that implements assign's contract.
class DispatchStrategy {
public:
    virtual ~DispatchStrategy() = default;
    virtual std::optional<AssignmentDecision> assign(std::vector<Vehicle>& fleet,
                                                     TripRequest& request,
                                                     const std::vector<VehicleSituation>& situations,
                                                     const GridNetwork& net, SimTime stop_overhead,
                                                     int threads) const = 0;
};

using StrategyFactory = std::function<std::unique_ptr<DispatchStrategy>()>;

/// Registers a strategy under a configuration name. The built-ins
/// "insertion_heuristic" and "radio_taxi" are pre-registered.
void register_strategy(const std::string& name, StrategyFactory factory);

/// Instantiates a registered strategy; throws std::invalid_argument naming the
/// unknown strategy otherwise.
std::unique_ptr<DispatchStrategy> make_strategy(const std::string& name);

std::vector<std::string> registered_strategies();

} // namespace amod
