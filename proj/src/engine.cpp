#include "amod/engine.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <stdexcept>

#include "amod/dispatch.hpp"
#include "amod/rng.hpp"
#include "amod/sched.hpp"

namespace amod {

namespace {

[[noreturn]] void fail_invariant(const std::string& what) {
    throw std::logic_error("simulation invariant violated: " + what);
}

} // namespace

void SimConfig::validate() const {
    if (rows < 1) throw std::invalid_argument("rows: must be >= 1");
    if (cols < 1) throw std::invalid_argument("cols: must be >= 1");
    if (!(link_length_m > 0)) throw std::invalid_argument("link_length_m: must be > 0");
    if (!(cruise_speed_kmph > 0)) throw std::invalid_argument("cruise_speed_kmph: must be > 0");
    if (fleet_size < 1) throw std::invalid_argument("fleet_size: must be >= 1");
    if (seats < 1) throw std::invalid_argument("seats: must be >= 1");
    if (!(request_rate > 0)) throw std::invalid_argument("request_rate: must be > 0");
    if (max_extra_time < 0) throw std::invalid_argument("max_extra_time: must be >= 0");
    if (boarding_s < 0) throw std::invalid_argument("boarding_s: must be >= 0");
    if (alighting_s < 0) throw std::invalid_argument("alighting_s: must be >= 0");
    if (stop_overhead_s < 0) throw std::invalid_argument("stop_overhead_s: must be >= 0");
    if (!(horizon > 0)) throw std::invalid_argument("horizon: must be > 0");
    if (!(snapshot_interval > 0)) throw std::invalid_argument("snapshot_interval: must be > 0");
    if (dispatch_threads < 1) throw std::invalid_argument("dispatch_threads: must be >= 1");
    make_strategy(strategy);  // throws naming an unknown strategy
}

GridNetwork SimConfig::build_network() const {
    return GridNetwork(rows, cols, link_length_m, cruise_speed_kmph / 3.6);
}

double SimConfig::arrival_rate_per_s() const {
    const double side_km = link_length_m / 1000.0;
    const double area_km2 = (rows - 1) * (cols - 1) * side_km * side_km;
    return request_rate * area_km2 / 3600.0;
}

std::int64_t SimOutput::count_status(RequestStatus s) const {
    return std::count_if(requests.begin(), requests.end(),
                         [s](const RequestRecord& r) { return r.status == s; });
}

int SimOutput::max_onboard_observed() const {
    int peak = 0;
    for (const auto& v : vehicles)
        peak = std::max(peak, v.max_onboard_observed);
    return peak;
}

double SimOutput::total_distance_m() const {
    double sum = 0.0;
    for (const auto& v : vehicles)
        sum += v.distance_m;
    return sum;
}

std::vector<TripRequest> generate_arrivals(const SimConfig& config, const GridNetwork& net,
                                           std::mt19937_64& gen) {
    const double lambda = config.arrival_rate_per_s();
    std::vector<TripRequest> requests;
    if (!(lambda > 0.0))
        return requests;
    if (net.node_count() < 2)
        throw std::invalid_argument("generate_arrivals: need at least 2 nodes for distinct "
                                    "origin/destination pairs");

    const SimTime horizon = from_seconds(config.horizon);
    const SimTime max_extra = from_seconds(config.max_extra_time);
    const SimTime boarding = from_seconds(config.boarding_s);
    const SimTime alighting = from_seconds(config.alighting_s);
    const auto nodes = static_cast<std::uint64_t>(net.node_count());

    SimTime t = 0;
    int id = 0;
    for (;;) {
        t += from_seconds(exponential(gen, lambda));
        if (t >= horizon)
            break;
        const auto origin = static_cast<NodeId>(uniform_below(gen, nodes));
        auto destination = static_cast<NodeId>(uniform_below(gen, nodes - 1));
        if (destination >= origin)
            ++destination;
        requests.push_back(
            make_request(id++, origin, destination, t, max_extra, net, boarding, alighting));
    }
    return requests;
}

std::vector<NodeId> initial_placement(const SimConfig& config, const GridNetwork& net,
                                      std::mt19937_64& gen) {
    std::vector<NodeId> placement(static_cast<size_t>(config.fleet_size));
    const auto nodes = static_cast<std::uint64_t>(net.node_count());
    for (auto& node : placement)
        node = static_cast<NodeId>(uniform_below(gen, nodes));
    return placement;
}

namespace {

struct Event {
    SimTime time = 0;
    std::uint64_t seq = 0;
    enum class Kind : std::uint8_t { RequestArrival, NodeArrival, ServiceComplete, Snapshot } kind;
    int subject = -1;  // vehicle id or request index

    bool operator>(const Event& o) const {
        if (time != o.time) return time > o.time;
        return seq > o.seq;
    }
};

class Simulation {
public:
    Simulation(const SimConfig& config, const GridNetwork& net, std::vector<TripRequest> requests,
               const std::vector<NodeId>& placement)
        : config_(config),
          net_(net),
          requests_(std::move(requests)),
          horizon_(from_seconds(config.horizon)),
          snapshot_interval_(from_seconds(config.snapshot_interval)),
          stop_overhead_(from_seconds(config.stop_overhead_s)),
          strategy_(make_strategy(config.strategy)) {
        if (placement.size() != static_cast<size_t>(config.fleet_size))
            throw std::invalid_argument("run_scenario: one starting node per vehicle required");
        fleet_.resize(placement.size());
        for (size_t i = 0; i < fleet_.size(); ++i) {
            Vehicle& v = fleet_[i];
            v.id = static_cast<int>(i);
            v.seats = config.seats;
            if (!net_.valid(placement[i]))
                throw std::invalid_argument("run_scenario: invalid starting node " +
                                            std::to_string(placement[i]));
            v.kinematics.mode = Kinematics::Mode::AtNode;
            v.kinematics.node = placement[i];
            v.kinematics.since = 0;
            v.occupancy_clock.assign(static_cast<size_t>(config.seats) + 1, 0);
        }
        state_.resize(fleet_.size());
        records_.resize(requests_.size());
        assign_version_.assign(requests_.size(), 0);
        for (size_t i = 0; i < requests_.size(); ++i) {
            const TripRequest& r = requests_[i];
            RequestRecord& rec = records_[i];
            rec.id = r.id;
            rec.origin = r.pickup.location;
            rec.destination = r.dropoff.location;
            rec.submission_time = r.submission_time;
            rec.direct_travel_time = r.dropoff.preferred_time - r.submission_time;
            rec.direct_hops = net_.hop_distance(r.pickup.location, r.dropoff.location);
        }
    }

    SimOutput run() {
        const auto t0 = std::chrono::steady_clock::now();
        push({0, 0, Event::Kind::Snapshot, -1});
        if (!requests_.empty())
            push({requests_[0].submission_time, 0, Event::Kind::RequestArrival, 0});

        while (!queue_.empty()) {
            const Event ev = queue_.top();
            queue_.pop();
            if (ev.time > horizon_)
                fail_invariant("event past horizon was enqueued");
            now_ = ev.time;
            ++events_processed_;
            switch (ev.kind) {
                case Event::Kind::RequestArrival: on_request_arrival(ev.subject); break;
                case Event::Kind::NodeArrival: on_node_arrival(ev.subject); break;
                case Event::Kind::ServiceComplete: on_service_complete(ev.subject); break;
                case Event::Kind::Snapshot: on_snapshot(); break;
            }
        }

        for (auto& v : fleet_)
            account(v, horizon_);

        SimOutput out;
        out.config = config_;
        out.requests = std::move(records_);
        out.snapshots = std::move(snapshots_);
        out.vehicles.reserve(fleet_.size());
        for (size_t i = 0; i < fleet_.size(); ++i) {
            const Vehicle& v = fleet_[i];
            SimTime acc = 0;
            for (SimTime t : v.occupancy_clock)
                acc += t;
            if (acc != horizon_)
                fail_invariant("occupancy clock of vehicle " + std::to_string(v.id) +
                               " does not sum to the horizon");
            VehicleRecord rec;
            rec.id = v.id;
            rec.links_traversed = v.links_traversed;
            rec.distance_m = v.odometer_m(config_.link_length_m);
            rec.total_assigned = state_[i].total_assigned;
            rec.pickups_pending = state_[i].pickups_pending;
            rec.onboard_final = v.onboard_count();
            rec.max_onboard_observed = state_[i].max_onboard_observed;
            rec.time_at_occupancy = v.occupancy_clock;
            out.vehicles.push_back(std::move(rec));
        }
        out.meta.peak_queue_depth = peak_queue_depth_;
        out.meta.events_processed = events_processed_;
        out.meta.wall_clock_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return out;
    }

private:
    struct VehicleState {
        std::optional<StopPoint> in_service;
        SimTime service_end = 0;
        SimTime last_account = 0;
        std::uint64_t schedule_version = 0;
        int total_assigned = 0;
        int pickups_pending = 0;
        int max_onboard_observed = 0;
    };

    void push(Event ev) {
        if (ev.time > horizon_)
            return;
        ev.seq = next_seq_++;
        queue_.push(ev);
        peak_queue_depth_ = std::max(peak_queue_depth_, queue_.size());
    }

    /// Attributes the elapsed interval to the vehicle's current occupancy
    /// level; call before any state change that alters the level. A boarding
    /// dwell counts toward the new (higher) level, an alighting dwell toward
    /// the old (higher) one, which is the level while the passenger is still
    /// attached to the vehicle.
    void account(Vehicle& v, SimTime now) {
        const VehicleState& st = state_[static_cast<size_t>(v.id)];
        int level = v.onboard_count();
        if (st.in_service && st.in_service->kind == StopKind::PickUp)
            ++level;
        v.occupancy_clock[static_cast<size_t>(level)] +=
            now - state_[static_cast<size_t>(v.id)].last_account;
        state_[static_cast<size_t>(v.id)].last_account = now;
    }

    bool is_idle(const Vehicle& v) const {
        return v.schedule.empty() && v.onboard.empty() &&
               !state_[static_cast<size_t>(v.id)].in_service;
    }

    /// Vehicle is at a node with no dwell in progress: begin the next service,
    /// depart toward the next stop, or stay parked.
    void proceed(Vehicle& v) {
        VehicleState& st = state_[static_cast<size_t>(v.id)];
        if (st.in_service)
            fail_invariant("proceed during service");
        if (v.schedule.empty())
            return;  // parked until the coordinator assigns something
        const StopPoint& next = v.schedule.stops.front();
        if (next.location == v.kinematics.node) {
            account(v, now_);
            st.in_service = next;
            st.service_end = now_ + effective_service_time(next, stop_overhead_);
            v.schedule.stops.erase(v.schedule.stops.begin());
            push({st.service_end, 0, Event::Kind::ServiceComplete, v.id});
        } else {
            const NodeId hop = net_.next_hop(v.kinematics.node, next.location);
            v.kinematics.mode = Kinematics::Mode::OnLink;
            v.kinematics.from = v.kinematics.node;
            v.kinematics.to = hop;
            v.kinematics.arrival = now_ + net_.link_travel_time();
            push({v.kinematics.arrival, 0, Event::Kind::NodeArrival, v.id});
        }
    }

    void on_node_arrival(int vid) {
        Vehicle& v = fleet_[static_cast<size_t>(vid)];
        if (v.kinematics.mode != Kinematics::Mode::OnLink)
            fail_invariant("node arrival for a vehicle not on a link");
        ++v.links_traversed;
        v.kinematics.mode = Kinematics::Mode::AtNode;
        v.kinematics.node = v.kinematics.to;
        v.kinematics.since = now_;
        proceed(v);
    }

    void on_service_complete(int vid) {
        Vehicle& v = fleet_[static_cast<size_t>(vid)];
        VehicleState& st = state_[static_cast<size_t>(vid)];
        if (!st.in_service || now_ != st.service_end)
            fail_invariant("stray service completion");
        account(v, now_);
        const StopPoint done = *st.in_service;
        st.in_service.reset();

        TripRequest& req = requests_[static_cast<size_t>(done.request_id)];
        RequestRecord& rec = records_[static_cast<size_t>(done.request_id)];
        if (st.schedule_version != assign_version_[static_cast<size_t>(done.request_id)])
            rec.schedule_touched_after_assign = true;
        if (done.kind == StopKind::PickUp) {
            if (v.onboard_count() + 1 > v.seats)
                fail_invariant("capacity exceeded on vehicle " + std::to_string(vid));
            v.onboard.push_back(done.request_id);
            st.max_onboard_observed = std::max(st.max_onboard_observed, v.onboard_count());
            --st.pickups_pending;
            req.status = RequestStatus::PickedUp;
            req.actual_pickup_time = now_;
            rec.status = req.status;
            rec.actual_pickup_time = now_;
            ++in_progress_;
        } else {
            const auto it = std::find(v.onboard.begin(), v.onboard.end(), done.request_id);
            if (it == v.onboard.end())
                fail_invariant("drop-off for a passenger not on board");
            v.onboard.erase(it);
            req.status = RequestStatus::Completed;
            req.actual_dropoff_time = now_;
            rec.status = req.status;
            rec.actual_dropoff_time = now_;
            --in_progress_;
            ++completed_;
        }
        proceed(v);
    }

    void on_request_arrival(int index) {
        TripRequest& req = requests_[static_cast<size_t>(index)];
        ++generated_;
        submitted_length_m_sum_ +=
            static_cast<double>(records_[static_cast<size_t>(index)].direct_hops) *
            config_.link_length_m;

        situations_.clear();
        situations_.reserve(fleet_.size());
        for (const Vehicle& v : fleet_) {
            const VehicleState& st = state_[static_cast<size_t>(v.id)];
            VehicleSituation sit;
            sit.now = now_;
            if (st.in_service) {
                sit.position = v.kinematics.node;
                sit.time_to_position = st.service_end - now_;
            } else if (v.kinematics.mode == Kinematics::Mode::OnLink) {
                sit.position = v.kinematics.to;
                sit.time_to_position = v.kinematics.arrival - now_;
            } else {
                sit.position = v.kinematics.node;
                sit.time_to_position = 0;
            }
            situations_.push_back(sit);
        }

        const auto decision = strategy_->assign(fleet_, req, situations_, net_, stop_overhead_,
                                                config_.dispatch_threads);
        RequestRecord& rec = records_[static_cast<size_t>(index)];
        if (decision) {
            Vehicle& chosen = fleet_[static_cast<size_t>(decision->vehicle)];
            VehicleState& st = state_[static_cast<size_t>(decision->vehicle)];
            ++st.total_assigned;
            ++st.pickups_pending;
            ++st.schedule_version;
            assign_version_[static_cast<size_t>(index)] = st.schedule_version;
            ++assigned_;

            const auto eval = evaluate(chosen.schedule,
                                       situations_[static_cast<size_t>(decision->vehicle)], net_,
                                       stop_overhead_);
            rec.assigned_vehicle = decision->vehicle;
            rec.predicted_pickup_time = eval.etas[static_cast<size_t>(decision->pickup_index)];
            rec.predicted_dropoff_time = eval.etas[static_cast<size_t>(decision->dropoff_index)];
            rec.status = req.status;

            // A parked vehicle starts moving now; moving or dwelling vehicles
            // pick the change up at their next node arrival or service end.
            if (!st.in_service && chosen.kinematics.mode == Kinematics::Mode::AtNode)
                proceed(chosen);
        } else {
            ++rejected_;
            rec.status = req.status;
        }

        const int next = index + 1;
        if (next < static_cast<int>(requests_.size()))
            push({requests_[static_cast<size_t>(next)].submission_time, 0,
                  Event::Kind::RequestArrival, next});
    }

    void on_snapshot() {
        SnapshotRow row;
        row.time = now_;
        row.submitted_trip_length_mean_m =
            generated_ > 0 ? submitted_length_m_sum_ / static_cast<double>(generated_) : 0.0;
        row.assigned = assigned_;
        row.rejected = rejected_;
        row.in_progress = in_progress_;
        row.completed = completed_;
        row.idle_vehicles = std::count_if(fleet_.begin(), fleet_.end(),
                                          [this](const Vehicle& v) { return is_idle(v); });
        snapshots_.push_back(row);
        push({now_ + snapshot_interval_, 0, Event::Kind::Snapshot, -1});
    }

    SimConfig config_;
    const GridNetwork& net_;
    std::vector<TripRequest> requests_;
    std::vector<RequestRecord> records_;
    std::vector<std::uint64_t> assign_version_;
    std::vector<Vehicle> fleet_;
    std::vector<VehicleState> state_;
    std::vector<VehicleSituation> situations_;
    std::vector<SnapshotRow> snapshots_;

    SimTime horizon_;
    SimTime snapshot_interval_;
    SimTime stop_overhead_;
    std::unique_ptr<DispatchStrategy> strategy_;

    std::priority_queue<Event, std::vector<Event>, std::greater<Event>> queue_;
    std::uint64_t next_seq_ = 0;
    SimTime now_ = 0;
    std::uint64_t events_processed_ = 0;
    std::size_t peak_queue_depth_ = 0;

    std::int64_t generated_ = 0;
    std::int64_t assigned_ = 0;
    std::int64_t rejected_ = 0;
    std::int64_t in_progress_ = 0;
    std::int64_t completed_ = 0;
    double submitted_length_m_sum_ = 0.0;
};

} // namespace

SimOutput run_scenario(const SimConfig& config, std::vector<TripRequest> requests,
                       std::vector<NodeId> placement) {
    config.validate();
    const GridNetwork net = config.build_network();
    Simulation sim(config, net, std::move(requests), placement);
    return sim.run();
}

SimOutput run(const SimConfig& config) {
    config.validate();
    const GridNetwork net = config.build_network();
    std::mt19937_64 placement_gen(config.rng_seed);
    std::mt19937_64 arrival_gen(config.rng_seed ^ 0x9e3779b97f4a7c15ULL);
    auto placement = initial_placement(config, net, placement_gen);
    auto requests = generate_arrivals(config, net, arrival_gen);
    Simulation sim(config, net, std::move(requests), placement);
    return sim.run();
}

} // namespace amod
