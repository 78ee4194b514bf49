#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "amod/grid_network.hpp"
#include "amod/sim_time.hpp"

namespace amod {

enum class StopKind : std::uint8_t { PickUp, DropOff };

/// One pick-up or drop-off commitment.
struct StopPoint {
    int request_id = -1;
    StopKind kind = StopKind::PickUp;
    NodeId location = 0;
    SimTime preferred_time = 0;  // t
    SimTime max_extra_time = 0;  // delta t, >= 0
    SimTime service_time = 0;    // b: boarding or alighting duration
};

enum class RequestStatus : std::uint8_t { Pending, Assigned, PickedUp, Completed, Rejected };

const char* to_string(RequestStatus s);

struct TripRequest {
    int id = -1;
    SimTime submission_time = 0;
    StopPoint pickup;
    StopPoint dropoff;
    RequestStatus status = RequestStatus::Pending;
    std::optional<SimTime> actual_pickup_time;
    std::optional<SimTime> actual_dropoff_time;
};

/// Builds a request whose user wants to be picked up immediately and dropped
/// off as if a vehicle were at her disposal on the direct route:
/// pickup.preferred_time = t_now, dropoff.preferred_time = t_now + tau(o, d).
/// Rejects origin == destination.
TripRequest make_request(int id, NodeId origin, NodeId destination, SimTime t_now,
                         SimTime max_extra_time, const GridNetwork& net,
                         SimTime boarding, SimTime alighting);

/// Ordered sequence of stop-points served by one vehicle.
///
/// Invariant: for every request id present, the pick-up precedes the drop-off
/// when both are present, and each (id, kind) appears at most once.
struct Schedule {
    std::vector<StopPoint> stops;

    bool empty() const { return stops.empty(); }
    std::size_t size() const { return stops.size(); }
};

struct Kinematics {
    enum class Mode : std::uint8_t { AtNode, OnLink };
    Mode mode = Mode::AtNode;
    NodeId node = 0;       // AtNode: where the vehicle is parked/dwelling
    SimTime since = 0;     // AtNode: when it got there
    NodeId from = 0;       // OnLink
    NodeId to = 0;         // OnLink
    SimTime arrival = 0;   // OnLink: when it reaches `to`
};

struct Vehicle {
    int id = -1;
    int seats = 1;
    Kinematics kinematics;
    std::vector<int> onboard;  // request ids currently riding
    Schedule schedule;
    std::int64_t links_traversed = 0;

    /// Seconds spent at each occupancy level, level 0 (idle/deadheading)
    /// through level `seats`. Sums to the elapsed simulation time.
    std::vector<SimTime> occupancy_clock;

    int onboard_count() const { return static_cast<int>(onboard.size()); }
    double odometer_m(double link_length_m) const {
        return static_cast<double>(links_traversed) * link_length_m;
    }
};

} // namespace amod
