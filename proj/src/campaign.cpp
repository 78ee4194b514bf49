#include "amod/campaign.hpp"

#include <atomic>
#include <fstream>
#include <stdexcept>
#include <thread>

#include "amod/csv.hpp"

namespace amod {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // '\n' line endings everywhere
    if (!out)
        throw std::runtime_error("cannot write '" + path.string() + "'");
    return out;
}

void write_snapshots(const std::filesystem::path& dir, const SimOutput& out) {
    auto f = open_for_write(dir / "snapshots.csv");
    f << "time,submitted_len_mean_m,assigned,rejected,in_progress,completed,idle_vehicles\n";
    for (const auto& s : out.snapshots) {
        f << format_number(to_seconds(s.time)) << ','
          << format_number(s.submitted_trip_length_mean_m) << ',' << s.assigned << ','
          << s.rejected << ',' << s.in_progress << ',' << s.completed << ','
          << s.idle_vehicles << '\n';
    }
}

void write_vehicles(const std::filesystem::path& dir, const SimOutput& out) {
    auto f = open_for_write(dir / "vehicles.csv");
    f << "vehicle_id,distance_m,total_assigned,pickups_pending";
    for (int level = 0; level <= out.config.seats; ++level)
        f << ",occ_t" << level;
    f << '\n';
    for (const auto& v : out.vehicles) {
        f << v.id << ',' << format_number(v.distance_m) << ',' << v.total_assigned << ','
          << v.pickups_pending;
        for (SimTime t : v.time_at_occupancy)
            f << ',' << format_number(to_seconds(t));
        f << '\n';
    }
}

void write_requests(const std::filesystem::path& dir, const SimOutput& out) {
    auto f = open_for_write(dir / "requests.csv");
    f << "request_id,status,submission_s,waiting_s,ride_s,stretch\n";
    for (const auto& r : out.requests) {
        f << r.id << ',' << to_string(r.status) << ','
          << format_number(to_seconds(r.submission_time)) << ',';
        if (const auto wait = r.waiting_time())
            f << format_number(to_seconds(*wait));
        f << ',';
        if (const auto ride = r.ride_time())
            f << format_number(to_seconds(*ride));
        f << ',';
        if (r.status == RequestStatus::Completed)
            f << format_number(stretch(r, r.direct_travel_time));
        f << '\n';
    }
}

void write_summary(const std::filesystem::path& dir, const SimOutput& out) {
    auto f = open_for_write(dir / "summary.csv");
    f << "metric,sum,min,max,mean,std,median,p95\n";
    for (const auto& row : summarize(out)) {
        f << row.metric << ',' << format_number(row.sum) << ',' << format_number(row.min) << ','
          << format_number(row.max) << ',' << format_number(row.mean) << ','
          << format_number(row.std_dev) << ',' << format_number(row.median) << ','
          << format_number(row.p95) << '\n';
    }
}

void write_meta(const std::filesystem::path& dir, const SimOutput& out) {
    auto f = open_for_write(dir / "meta.txt");
    const SimConfig& c = out.config;
    f << "rows=" << c.rows << '\n'
      << "cols=" << c.cols << '\n'
      << "link_length_m=" << format_number(c.link_length_m) << '\n'
      << "cruise_speed_kmph=" << format_number(c.cruise_speed_kmph) << '\n'
      << "fleet_size=" << c.fleet_size << '\n'
      << "seats=" << c.seats << '\n'
      << "request_rate=" << format_number(c.request_rate) << '\n'
      << "max_extra_time=" << format_number(c.max_extra_time) << '\n'
      << "boarding_s=" << format_number(c.boarding_s) << '\n'
      << "alighting_s=" << format_number(c.alighting_s) << '\n'
      << "stop_overhead_s=" << format_number(c.stop_overhead_s) << '\n'
      << "horizon=" << format_number(c.horizon) << '\n'
      << "snapshot_interval=" << format_number(c.snapshot_interval) << '\n'
      << "rng_seed=" << c.rng_seed << '\n'
      << "strategy=" << c.strategy << '\n'
      << "dispatch_threads=" << c.dispatch_threads << '\n'
      << "generated=" << out.generated_count() << '\n'
      << "assigned=" << out.count_status(RequestStatus::Assigned) +
                            out.count_status(RequestStatus::PickedUp) +
                            out.count_status(RequestStatus::Completed)
      << '\n'
      << "rejected=" << out.count_status(RequestStatus::Rejected) << '\n'
      << "completed=" << out.count_status(RequestStatus::Completed) << '\n'
      << "events_processed=" << out.meta.events_processed << '\n'
      << "peak_queue_depth=" << out.meta.peak_queue_depth << '\n'
      << "wall_clock_s=" << format_number(out.meta.wall_clock_s) << '\n';
}

} // namespace

std::vector<AggregateRow> summarize(const SimOutput& out) {
    std::vector<AggregateRow> rows;
    std::vector<double> values;

    values.clear();
    for (const auto& v : out.vehicles)
        values.push_back(v.distance_m);
    if (!values.empty())
        rows.push_back(aggregate("vehicle_distance_m", values));

    values.clear();
    for (const auto& v : out.vehicles)
        values.push_back(static_cast<double>(v.total_assigned));
    if (!values.empty())
        rows.push_back(aggregate("vehicle_total_assigned", values));

    values.clear();
    for (const auto& v : out.vehicles)
        values.push_back(to_seconds(v.time_at_occupancy.at(0)));
    if (!values.empty())
        rows.push_back(aggregate("vehicle_idle_s", values));

    values.clear();
    for (const auto& r : out.requests)
        if (const auto w = r.waiting_time())
            values.push_back(to_seconds(*w));
    if (!values.empty())
        rows.push_back(aggregate("waiting_s", values));

    values.clear();
    for (const auto& r : out.requests)
        if (const auto t = r.ride_time())
            values.push_back(to_seconds(*t));
    if (!values.empty())
        rows.push_back(aggregate("ride_s", values));

    values.clear();
    for (const auto& r : out.requests)
        if (r.status == RequestStatus::Completed)
            values.push_back(stretch(r, r.direct_travel_time));
    if (!values.empty())
        rows.push_back(aggregate("stretch", values));

    return rows;
}

void write_run_outputs(const std::filesystem::path& dir, const SimOutput& out) {
    std::filesystem::create_directories(dir);
    write_snapshots(dir, out);
    write_vehicles(dir, out);
    write_requests(dir, out);
    write_summary(dir, out);
    write_meta(dir, out);
}

int run_campaign(const CampaignSpec& spec) {
    const std::vector<RunPlan> runs = spec.expand();
    std::filesystem::create_directories(spec.output_dir);

    std::vector<std::string> statuses(runs.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= runs.size())
                return;
            const RunPlan& plan = runs[i];
            try {
                const SimOutput out = run(plan.config);
                write_run_outputs(spec.output_dir / plan.dir_name, out);
                statuses[i] = "ok";
            } catch (const std::exception& e) {
                statuses[i] = std::string("failed: ") + e.what();
            }
        }
    };

    const std::size_t n_workers =
        std::min<std::size_t>(static_cast<std::size_t>(spec.max_parallel), runs.size());
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_workers);
        for (std::size_t i = 0; i < n_workers; ++i)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    auto index = open_for_write(spec.output_dir / "index.csv");
    index << "run_id,fleet_size,seats,request_rate,max_extra_time,rng_seed,dir,status\n";
    bool all_ok = true;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        const SimConfig& c = runs[i].config;
        index << i << ',' << c.fleet_size << ',' << c.seats << ','
              << format_number(c.request_rate) << ',' << format_number(c.max_extra_time) << ','
              << c.rng_seed << ',' << runs[i].dir_name << ',' << statuses[i] << '\n';
        if (statuses[i] != "ok")
            all_ok = false;
    }
    return all_ok ? 0 : 1;
}

} // namespace amod
