#include "amod/dispatch.hpp"

#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace amod {

namespace {

inline SimTime clamp0(SimTime d) { return d > 0 ? d : 0; }

/// Candidate ordering: cost, then vehicle id, then (k, k') lexicographically.
struct Candidate {
    SimTime cost = kInfiniteCost;
    int vehicle = std::numeric_limits<int>::max();
    int k = std::numeric_limits<int>::max();
    int kprime = std::numeric_limits<int>::max();

    bool better_than(const Candidate& o) const {
        if (cost != o.cost) return cost < o.cost;
        if (vehicle != o.vehicle) return vehicle < o.vehicle;
        if (k != o.k) return k < o.k;
        return kprime < o.kprime;
    }
};

} // namespace

std::optional<AssignmentDecision> best_insertion(const Vehicle& vehicle,
                                                 const TripRequest& request,
                                                 const VehicleSituation& sit,
                                                 const GridNetwork& net, SimTime stop_overhead,
                                                 StrategyMode mode, SimTime prune_bound) {
    const auto& stops = vehicle.schedule.stops;
    const int n = static_cast<int>(stops.size());

    const StopPoint& pick = request.pickup;
    const StopPoint& drop = request.dropoff;
    const SimTime s_p = effective_service_time(pick, stop_overhead);
    const SimTime s_d = effective_service_time(drop, stop_overhead);

    const ScheduleEvaluation base = evaluate(vehicle.schedule, sit, net, stop_overhead);

    // Prefix passenger counts: onboard[i] = passengers before serving stop i.
    // slack[i] = max_extra_time_i - d_i; suffix structures support O(1)
    // feasibility and cost bounds for deltas applied from a position onward.
    std::vector<int> onboard(static_cast<size_t>(n) + 1);
    std::vector<SimTime> suffix_min_slack(static_cast<size_t>(n) + 1, kInfiniteCost);
    std::vector<int> suffix_nonneg(static_cast<size_t>(n) + 1, 0);
    onboard[0] = vehicle.onboard_count();
    for (int i = 0; i < n; ++i) {
        onboard[i + 1] = onboard[i] + (stops[static_cast<size_t>(i)].kind == StopKind::PickUp ? 1 : -1);
        if (onboard[i + 1] < 0)
            throw std::logic_error("best_insertion: corrupted schedule on vehicle " +
                                   std::to_string(vehicle.id));
    }
    for (int i = n - 1; i >= 0; --i) {
        const auto ui = static_cast<size_t>(i);
        const SimTime slack = stops[ui].max_extra_time - base.delays[ui];
        suffix_min_slack[ui] = std::min(slack, suffix_min_slack[ui + 1]);
        suffix_nonneg[ui] = suffix_nonneg[ui + 1] + (base.delays[ui] >= 0 ? 1 : 0);
    }

    Candidate best;
    best.vehicle = vehicle.id;
    SimTime limit = prune_bound;

    for (int k = 0; k <= n; ++k) {
        const SimTime t_prev = (k == 0) ? sit.now + sit.time_to_position
                                        : base.etas[static_cast<size_t>(k - 1)];
        // t_prev is non-decreasing in k: once even a zero-detour pickup is
        // late, every later position is too.
        if (t_prev + s_p - pick.preferred_time > pick.max_extra_time)
            break;
        if (mode == StrategyMode::RadioTaxi && onboard[static_cast<size_t>(k)] != 0)
            continue;
        if (onboard[static_cast<size_t>(k)] + 1 > vehicle.seats)
            continue;

        const NodeId prev_node = (k == 0) ? sit.position : stops[static_cast<size_t>(k - 1)].location;
        const SimTime tau_prev_p = net.travel_time(prev_node, pick.location);
        const SimTime eta_p = t_prev + tau_prev_p + s_p;
        const SimTime d_p = eta_p - pick.preferred_time;
        if (d_p > pick.max_extra_time)
            continue;

        SimTime delta1 = tau_prev_p + s_p;
        if (k < n) {
            const NodeId next = stops[static_cast<size_t>(k)].location;
            delta1 += net.travel_time(pick.location, next) - net.travel_time(prev_node, next);
        }

        // Lower bound on any candidate with this k: the drop-off completes no
        // earlier than d_p + s_d past its preferred time, and delta1 delays
        // every already-late downstream stop.
        const SimTime lb_k = clamp0(d_p) + clamp0(d_p + s_d) +
                             delta1 * suffix_nonneg[static_cast<size_t>(k)];
        if (lb_k > limit)
            continue;

        const int kprime_last = (mode == StrategyMode::RadioTaxi) ? k + 1 : n + 1;
        SimTime mid_cost = 0;  // cost increase of stops riding along, [k, k'-2]
        for (int kprime = k + 1; kprime <= kprime_last; ++kprime) {
            NodeId pred_node;
            SimTime t_pred;
            if (kprime == k + 1) {
                pred_node = pick.location;
                t_pred = eta_p;
            } else {
                const auto j = static_cast<size_t>(kprime - 2);
                if (base.delays[j] + delta1 > stops[j].max_extra_time)
                    break;  // stop j stays delayed by delta1 for every later k'
                if (onboard[j + 1] + 1 > vehicle.seats)
                    break;  // the new passenger would still be aboard past j
                mid_cost += clamp0(base.delays[j] + delta1) - clamp0(base.delays[j]);
                pred_node = stops[j].location;
                t_pred = base.etas[j] + delta1;
            }
            if (t_pred + s_d - drop.preferred_time > drop.max_extra_time)
                break;  // t_pred is non-decreasing in k'

            const SimTime tau_pred_d = net.travel_time(pred_node, drop.location);
            const SimTime eta_d = t_pred + tau_pred_d + s_d;
            const SimTime d_d = eta_d - drop.preferred_time;
            if (d_d > drop.max_extra_time)
                continue;

            SimTime delta2 = tau_pred_d + s_d;
            if (kprime <= n) {
                const NodeId next = stops[static_cast<size_t>(kprime - 1)].location;
                delta2 += net.travel_time(drop.location, next) - net.travel_time(pred_node, next);
            }
            const SimTime delta12 = delta1 + delta2;
            if (kprime <= n && delta12 > suffix_min_slack[static_cast<size_t>(kprime - 1)])
                continue;

            SimTime tail_cost = 0;
            if (kprime <= n) {
                const int j0 = kprime - 1;
                if (suffix_nonneg[static_cast<size_t>(j0)] == n - j0) {
                    tail_cost = delta12 * (n - j0);
                } else {
                    for (int j = j0; j < n; ++j) {
                        const auto uj = static_cast<size_t>(j);
                        tail_cost += clamp0(base.delays[uj] + delta12) - clamp0(base.delays[uj]);
                    }
                }
            }

            const SimTime marginal = clamp0(d_p) + clamp0(d_d) + mid_cost + tail_cost;
            if (marginal <= limit && marginal < best.cost) {
                best.cost = marginal;
                best.k = k;
                best.kprime = kprime;
                if (marginal < limit)
                    limit = marginal;
            }
        }
    }

    if (best.k == std::numeric_limits<int>::max())
        return std::nullopt;
    return AssignmentDecision{vehicle.id, best.k, best.kprime, best.cost};
}

namespace {

Candidate search_fleet_range(const std::vector<Vehicle>& fleet,
                             const std::vector<VehicleSituation>& situations,
                             const TripRequest& request, const GridNetwork& net,
                             SimTime stop_overhead, StrategyMode mode, int lo, int hi,
                             SimTime initial_limit) {
    const StopPoint& pick = request.pickup;
    const SimTime s_p = effective_service_time(pick, stop_overhead);
    const SimTime s_d = effective_service_time(request.dropoff, stop_overhead);

    Candidate best;
    SimTime limit = initial_limit;
    for (int v = lo; v < hi; ++v) {
        const Vehicle& veh = fleet[static_cast<size_t>(v)];
        const VehicleSituation& sit = situations[static_cast<size_t>(v)];

        // By the triangle inequality the pickup cannot complete before the
        // vehicle has covered its direct distance to it, whatever the
        // insertion position; prune distant vehicles in O(1).
        const SimTime dp_lb = sit.now + sit.time_to_position +
                              net.travel_time(sit.position, pick.location) + s_p -
                              pick.preferred_time;
        if (clamp0(dp_lb) + clamp0(dp_lb + s_d) > limit)
            continue;

        const auto cand = best_insertion(veh, request, sit, net, stop_overhead, mode, limit);
        if (!cand)
            continue;
        Candidate c{cand->marginal_cost, veh.id, cand->pickup_index, cand->dropoff_index};
        if (c.better_than(best)) {
            best = c;
            if (best.cost < limit)
                limit = best.cost;
        }
    }
    return best;
}

void apply_decision(std::vector<Vehicle>& fleet, TripRequest& request, const Candidate& best) {
    Vehicle& chosen = fleet[static_cast<size_t>(best.vehicle)];
    chosen.schedule = insert_pair(chosen.schedule, static_cast<size_t>(best.k),
                                  static_cast<size_t>(best.kprime), request.pickup,
                                  request.dropoff);
    request.status = RequestStatus::Assigned;
}

} // namespace

std::optional<AssignmentDecision> assign_serial(std::vector<Vehicle>& fleet, TripRequest& request,
                                                const std::vector<VehicleSituation>& situations,
                                                const GridNetwork& net, SimTime stop_overhead,
                                                StrategyMode mode) {
    const Candidate best =
        search_fleet_range(fleet, situations, request, net, stop_overhead, mode, 0,
                           static_cast<int>(fleet.size()), kInfiniteCost);
    if (best.cost == kInfiniteCost) {
        request.status = RequestStatus::Rejected;
        return std::nullopt;
    }
    apply_decision(fleet, request, best);
    return AssignmentDecision{best.vehicle, best.k, best.kprime, best.cost};
}

std::optional<AssignmentDecision> assign(std::vector<Vehicle>& fleet, TripRequest& request,
                                         const std::vector<VehicleSituation>& situations,
                                         const GridNetwork& net, SimTime stop_overhead,
                                         StrategyMode mode, int threads) {
    if (situations.size() != fleet.size())
        throw std::invalid_argument("assign: one situation per vehicle required");

#ifdef _OPENMP
    if (threads > 1 && fleet.size() > 1) {
        const int nv = static_cast<int>(fleet.size());
        Candidate best;
#pragma omp parallel num_threads(threads)
        {
            const int tid = omp_get_thread_num();
            const int nt = omp_get_num_threads();
            const int chunk = (nv + nt - 1) / nt;
            const int lo = std::min(tid * chunk, nv);
            const int hi = std::min(lo + chunk, nv);
            // Contiguous ascending ranges keep the per-thread pruning
            // tie-safe; the merge below is a total-order reduction.
            Candidate local = search_fleet_range(fleet, situations, request, net, stop_overhead,
                                                 mode, lo, hi, kInfiniteCost);
#pragma omp critical
            {
                if (local.better_than(best))
                    best = local;
            }
        }
        if (best.cost == kInfiniteCost) {
            request.status = RequestStatus::Rejected;
            return std::nullopt;
        }
        apply_decision(fleet, request, best);
        return AssignmentDecision{best.vehicle, best.k, best.kprime, best.cost};
    }
#else
    (void)threads;
#endif
    return assign_serial(fleet, request, situations, net, stop_overhead, mode);
}

namespace {

class ModeStrategy final : public DispatchStrategy {
public:
    explicit ModeStrategy(StrategyMode mode) : mode_(mode) {}
    std::optional<AssignmentDecision> assign(std::vector<Vehicle>& fleet, TripRequest& request,
                                             const std::vector<VehicleSituation>& situations,
                                             const GridNetwork& net, SimTime stop_overhead,
                                             int threads) const override {
        return amod::assign(fleet, request, situations, net, stop_overhead, mode_, threads);
    }

private:
    StrategyMode mode_;
};

std::map<std::string, StrategyFactory>& registry() {
    static std::map<std::string, StrategyFactory> reg = {
        {"insertion_heuristic",
         [] { return std::make_unique<ModeStrategy>(StrategyMode::InsertionHeuristic); }},
        {"radio_taxi", [] { return std::make_unique<ModeStrategy>(StrategyMode::RadioTaxi); }},
    };
    return reg;
}

} // namespace

void register_strategy(const std::string& name, StrategyFactory factory) {
    registry()[name] = std::move(factory);
}

std::unique_ptr<DispatchStrategy> make_strategy(const std::string& name) {
    const auto& reg = registry();
    const auto it = reg.find(name);
    if (it == reg.end())
        throw std::invalid_argument("unknown dispatch strategy '" + name + "'");
    return it->second();
}

std::vector<std::string> registered_strategies() {
    std::vector<std::string> names;
    for (const auto& [name, _] : registry())
        names.push_back(name);
    return names;
}

} // namespace amod
