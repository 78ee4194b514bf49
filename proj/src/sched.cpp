#include "amod/sched.hpp"

#include <stdexcept>
#include <string>

namespace amod {

SimTime effective_service_time(const StopPoint& sp, SimTime stop_overhead) {
    if (stop_overhead < 0)
        throw std::invalid_argument("effective_service_time: stop_overhead must be >= 0");
    return sp.service_time + stop_overhead;
}

ScheduleEvaluation evaluate(const Schedule& schedule, const VehicleSituation& sit,
                            const GridNetwork& net, SimTime stop_overhead) {
    ScheduleEvaluation ev;
    ev.etas.reserve(schedule.size());
    ev.delays.reserve(schedule.size());

    SimTime t = sit.now + sit.time_to_position;
    NodeId pos = sit.position;
    for (const StopPoint& sp : schedule.stops) {
        t += net.travel_time(pos, sp.location) + effective_service_time(sp, stop_overhead);
        pos = sp.location;
        const SimTime delay = t - sp.preferred_time;
        ev.etas.push_back(t);
        ev.delays.push_back(delay);
        if (delay > sp.max_extra_time)
            ev.feasible = false;
        if (delay > 0)
            ev.cost += delay;
    }
    return ev;
}

SimTime insertion_delay(const Schedule& schedule, std::size_t k, const StopPoint& sp,
                        const VehicleSituation& sit, const GridNetwork& net,
                        SimTime stop_overhead) {
    const std::size_t n = schedule.size();
    if (k > n)
        throw std::invalid_argument("insertion_delay: position " + std::to_string(k) +
                                    " out of range for schedule of length " + std::to_string(n));
    const NodeId prev = (k == 0) ? sit.position : schedule.stops[k - 1].location;
    const SimTime s = effective_service_time(sp, stop_overhead);
    SimTime delta = net.travel_time(prev, sp.location) + s;
    if (k < n) {
        const NodeId next = schedule.stops[k].location;
        delta += net.travel_time(sp.location, next) - net.travel_time(prev, next);
    }
    return delta;
}

Schedule insert_pair(const Schedule& schedule, std::size_t k, std::size_t kprime,
                     const StopPoint& pickup, const StopPoint& dropoff) {
    const std::size_t n = schedule.size();
    if (k > n || kprime > n + 1 || kprime <= k)
        throw std::invalid_argument("insert_pair: invalid positions (k=" + std::to_string(k) +
                                    ", k'=" + std::to_string(kprime) + ", length=" +
                                    std::to_string(n) + ")");
    Schedule out;
    out.stops.reserve(n + 2);
    out.stops.insert(out.stops.end(), schedule.stops.begin(), schedule.stops.end());
    out.stops.insert(out.stops.begin() + static_cast<std::ptrdiff_t>(k), pickup);
    out.stops.insert(out.stops.begin() + static_cast<std::ptrdiff_t>(kprime), dropoff);
    return out;
}

int max_onboard(const Schedule& schedule, int currently_onboard) {
    if (currently_onboard < 0)
        throw std::invalid_argument("max_onboard: currently_onboard must be >= 0");
    int count = currently_onboard;
    int peak = count;
    for (const StopPoint& sp : schedule.stops) {
        count += (sp.kind == StopKind::PickUp) ? 1 : -1;
        if (count < 0)
            throw std::logic_error("max_onboard: drop-off without matching passenger at request " +
                                   std::to_string(sp.request_id));
        if (count > peak)
            peak = count;
    }
    return peak;
}

} // namespace amod
