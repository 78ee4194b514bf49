#include "amod/model.hpp"

#include <stdexcept>
#include <string>

namespace amod {

const char* to_string(RequestStatus s) {
    switch (s) {
        case RequestStatus::Pending: return "pending";
        case RequestStatus::Assigned: return "assigned";
        case RequestStatus::PickedUp: return "picked_up";
        case RequestStatus::Completed: return "completed";
        case RequestStatus::Rejected: return "rejected";
    }
    return "unknown";
}

TripRequest make_request(int id, NodeId origin, NodeId destination, SimTime t_now,
                         SimTime max_extra_time, const GridNetwork& net,
                         SimTime boarding, SimTime alighting) {
    if (origin == destination)
        throw std::invalid_argument("make_request: origin == destination (node " +
                                    std::to_string(origin) + ")");
    if (max_extra_time < 0)
        throw std::invalid_argument("make_request: max_extra_time must be >= 0");

    TripRequest req;
    req.id = id;
    req.submission_time = t_now;
    req.pickup = {id, StopKind::PickUp, origin, t_now, max_extra_time, boarding};
    req.dropoff = {id, StopKind::DropOff, destination,
                   t_now + net.travel_time(origin, destination), max_extra_time, alighting};
    req.status = RequestStatus::Pending;
    return req;
}

} // namespace amod
