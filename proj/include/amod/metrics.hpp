#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amod/model.hpp"
#include "amod/sim_time.hpp"

namespace amod {

/// Cumulative request counters plus fleet state at one snapshot instant.
struct SnapshotRow {
    SimTime time = 0;
    double submitted_trip_length_mean_m = 0.0;  // mean direct length of all submitted requests
    std::int64_t assigned = 0;                  // received and assigned (cumulative)
    std::int64_t rejected = 0;                  // cumulative
    std::int64_t in_progress = 0;               // picked up, not yet dropped off
    std::int64_t completed = 0;                 // cumulative
    std::int64_t idle_vehicles = 0;             // empty schedule and nobody aboard
};

struct VehicleRecord {
    int id = -1;
    std::int64_t links_traversed = 0;
    double distance_m = 0.0;
    int total_assigned = 0;       // requests ever assigned to this vehicle
    int pickups_pending = 0;      // assigned but not picked up at the end
    int onboard_final = 0;
    int max_onboard_observed = 0;
    std::vector<SimTime> time_at_occupancy;  // levels 0..seats; sums to the horizon
};

struct RequestRecord {
    int id = -1;
    NodeId origin = 0;
    NodeId destination = 0;
    SimTime submission_time = 0;
    SimTime direct_travel_time = 0;  // tau(origin, destination)
    int direct_hops = 0;
    RequestStatus status = RequestStatus::Pending;
    std::optional<SimTime> actual_pickup_time;
    std::optional<SimTime> actual_dropoff_time;
    int assigned_vehicle = -1;
    // ETAs evaluated when the request was placed, and whether a later
    // insertion touched the schedule before this request completed.
    SimTime predicted_pickup_time = 0;
    SimTime predicted_dropoff_time = 0;
    bool schedule_touched_after_assign = false;

    std::optional<SimTime> waiting_time() const {
        if (!actual_pickup_time) return std::nullopt;
        return *actual_pickup_time - submission_time;
    }
    std::optional<SimTime> ride_time() const {
        if (!actual_pickup_time || !actual_dropoff_time) return std::nullopt;
        return *actual_dropoff_time - *actual_pickup_time;
    }
};

/// sum/min/max/mean/std/median/p95 of one metric over the fleet or the users.
/// std is the population standard deviation; median is the lower middle for
/// even counts; p95 is nearest-rank (the ceil(0.95 n)-th smallest).
struct AggregateRow {
    std::string metric;
    double sum = 0, min = 0, max = 0, mean = 0, std_dev = 0, median = 0, p95 = 0;
};

/// Aggregates a non-empty sequence; throws std::invalid_argument when empty.
AggregateRow aggregate(std::string metric, std::span<const double> values);

/// Ratio of the realized door-to-door trip time to the preferred (direct)
/// one. Defined only for completed requests with preferred_duration > 0.
double stretch(const RequestRecord& req, SimTime preferred_duration);

} // namespace amod
