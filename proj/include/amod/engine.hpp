#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "amod/grid_network.hpp"
#include "amod/metrics.hpp"
#include "amod/model.hpp"
#include "amod/sim_time.hpp"

namespace amod {

/// Full parameterization of one run. Defaults are the reference scenario:
/// a 60 km2 Manhattan grid, 35 km/h cruising, 11.5 s acceleration/
/// deceleration dwell overhead, 5 s boarding / 10 s alighting, 4 h horizon.
struct SimConfig {
    int rows = 33;
    int cols = 31;
    double link_length_m = 250.0;
    double cruise_speed_kmph = 35.0;
    int fleet_size = 2000;
    int seats = 4;
    double request_rate = 320.0;  // requests per hour per km2
    double max_extra_time = 900.0;  // seconds
    double boarding_s = 5.0;
    double alighting_s = 10.0;
    double stop_overhead_s = 11.5;  // t_a + t_d
    double horizon = 14400.0;           // seconds
    double snapshot_interval = 60.0;    // seconds
    std::uint64_t rng_seed = 1;
    std::string strategy = "insertion_heuristic";
    int dispatch_threads = 1;

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;

    GridNetwork build_network() const;

    /// Fleet-wide Poisson arrival rate in requests per second.
    double arrival_rate_per_s() const;
};

struct RunMeta {
    double wall_clock_s = 0.0;
    std::size_t peak_queue_depth = 0;
    std::uint64_t events_processed = 0;
};

/// Everything one run produces.
struct SimOutput {
    SimConfig config;
    std::vector<RequestRecord> requests;
    std::vector<VehicleRecord> vehicles;
    std::vector<SnapshotRow> snapshots;
    RunMeta meta;

    std::int64_t generated_count() const { return static_cast<std::int64_t>(requests.size()); }
    std::int64_t count_status(RequestStatus s) const;
    int max_onboard_observed() const;
    double total_distance_m() const;
};

/// Time-ordered Poisson request stream: exponential inter-arrival times with
/// rate request_rate x covered area, origin/destination uniform over distinct
/// nodes, arrivals beyond the horizon discarded.
std::vector<TripRequest> generate_arrivals(const SimConfig& config, const GridNetwork& net,
                                           std::mt19937_64& gen);

/// Uniform random starting node per vehicle.
std::vector<NodeId> initial_placement(const SimConfig& config, const GridNetwork& net,
                                      std::mt19937_64& gen);

/// Runs one complete simulation: seeded placement and arrivals, then the
/// event loop. Identical configs (including seed) produce identical outputs.
SimOutput run(const SimConfig& config);

/// Runs the event loop on externally supplied requests and starting nodes
/// (testing and benchmarking hook; `run` is this plus the seeded generators).
SimOutput run_scenario(const SimConfig& config, std::vector<TripRequest> requests,
                       std::vector<NodeId> placement);

} // namespace amod
