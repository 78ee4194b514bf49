#pragma once

#include <cstddef>
#include <vector>

#include "amod/grid_network.hpp"
#include "amod/model.hpp"
#include "amod/sim_time.hpp"

namespace amod {

/// Where a vehicle effectively is for planning purposes.
///
/// `position` is the node the vehicle is at or will next reach;
/// `time_to_position` is 0 at a node, the residual link time while driving,
/// or the residual dwell while servicing a stop.
struct VehicleSituation {
    NodeId position = 0;
    SimTime time_to_position = 0;
    SimTime now = 0;
};

struct ScheduleEvaluation {
    std::vector<SimTime> etas;    // per stop: estimated completion time t_hat_i
    std::vector<SimTime> delays;  // per stop: d_i = t_hat_i - t_i
    bool feasible = true;         // all d_i <= max_extra_time_i
    SimTime cost = 0;             // sum of max(0, d_i)
};

/// Full dwell per stop: service (board/alight) plus the lumped
/// acceleration/deceleration overhead t_a + t_d.
SimTime effective_service_time(const StopPoint& sp, SimTime stop_overhead);

/// Chained ETA evaluation of a whole schedule:
///
///   t_hat_0 = now + time_to_position + tau(position, q_0) + s_0
///   t_hat_i = t_hat_{i-1} + tau(q_{i-1}, q_i) + s_i
///
/// with s_i = b_i + stop_overhead, so planner ETAs coincide exactly with the
/// movement model. An empty schedule evaluates to cost 0, feasible.
ScheduleEvaluation evaluate(const Schedule& schedule, const VehicleSituation& sit,
                            const GridNetwork& net, SimTime stop_overhead);

/// Closed-form extra delay imposed on stops at positions >= k by inserting
/// `sp` at position k (0 <= k <= schedule length):
///
///   delta = tau(q_{k-1}, q) + s + tau(q, q_k) - tau(q_{k-1}, q_k)
///
/// where q_{k-1} is the situation's position for k = 0. For k = length the
/// detour term vanishes and the result is tau(q_{k-1}, q) + s, the increment
/// the appended stop itself inherits.
SimTime insertion_delay(const Schedule& schedule, std::size_t k, const StopPoint& sp,
                        const VehicleSituation& sit, const GridNetwork& net,
                        SimTime stop_overhead);

/// New schedule with `pickup` at index k and `dropoff` at index kprime, where
/// kprime indexes the sequence after the pickup insertion (so kprime > k).
/// Relative order of existing stops is preserved.
Schedule insert_pair(const Schedule& schedule, std::size_t k, std::size_t kprime,
                     const StopPoint& pickup, const StopPoint& dropoff);

/// Running maximum of the passenger count while serving the schedule, starting
/// from `currently_onboard` (+1 per pick-up, -1 per drop-off). Throws if the
/// running count goes negative, which signals a corrupted schedule.
int max_onboard(const Schedule& schedule, int currently_onboard);

} // namespace amod
