#include "amod/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "amod/csv.hpp"

namespace amod {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void bad_value(const std::string& key, const std::string& value) {
    throw std::invalid_argument("config key '" + key + "': cannot parse value '" + value + "'");
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(value, &pos);
    } catch (const std::exception&) {
        bad_value(key, value);
    }
    if (pos != value.size())
        bad_value(key, value);
    return v;
}

template <typename Int>
Int parse_int(const std::string& key, const std::string& value) {
    Int v{};
    const auto* first = value.data();
    const auto* last = value.data() + value.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        bad_value(key, value);
    return v;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ','))
        items.push_back(trim(item));
    if (items.empty())
        items.push_back("");
    return items;
}

void apply_key(CampaignSpec& spec, const std::string& key, const std::string& value) {
    SimConfig& c = spec.base;
    if (key == "rows") c.rows = parse_int<int>(key, value);
    else if (key == "cols") c.cols = parse_int<int>(key, value);
    else if (key == "link_length_m") c.link_length_m = parse_double(key, value);
    else if (key == "cruise_speed_kmph") c.cruise_speed_kmph = parse_double(key, value);
    else if (key == "boarding_s") c.boarding_s = parse_double(key, value);
    else if (key == "alighting_s") c.alighting_s = parse_double(key, value);
    else if (key == "stop_overhead_s") c.stop_overhead_s = parse_double(key, value);
    else if (key == "horizon") c.horizon = parse_double(key, value);
    else if (key == "snapshot_interval") c.snapshot_interval = parse_double(key, value);
    else if (key == "strategy") c.strategy = value;
    else if (key == "dispatch_threads") c.dispatch_threads = parse_int<int>(key, value);
    else if (key == "fleet_size") {
        spec.fleet_sizes.clear();
        for (const auto& item : split_list(value))
            spec.fleet_sizes.push_back(parse_int<int>(key, item));
    } else if (key == "seats") {
        spec.seats_values.clear();
        for (const auto& item : split_list(value))
            spec.seats_values.push_back(parse_int<int>(key, item));
    } else if (key == "request_rate") {
        spec.request_rates.clear();
        for (const auto& item : split_list(value))
            spec.request_rates.push_back(parse_double(key, item));
    } else if (key == "max_extra_time") {
        spec.max_extra_times.clear();
        for (const auto& item : split_list(value))
            spec.max_extra_times.push_back(parse_double(key, item));
    } else if (key == "rng_seed") {
        spec.rng_seeds.clear();
        for (const auto& item : split_list(value))
            spec.rng_seeds.push_back(parse_int<std::uint64_t>(key, item));
    } else if (key == "output_dir") {
        spec.output_dir = value;
    } else if (key == "max_parallel") {
        spec.max_parallel = parse_int<int>(key, value);
        if (spec.max_parallel < 1)
            throw std::invalid_argument("config key 'max_parallel': must be >= 1");
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

void apply_line(CampaignSpec& spec, const std::string& raw_line) {
    std::string line = raw_line;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
        line.erase(hash);
    line = trim(line);
    if (line.empty())
        return;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
        throw std::invalid_argument("config line is not key=value: '" + trim(raw_line) + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty())
        throw std::invalid_argument("config line has empty key: '" + trim(raw_line) + "'");
    apply_key(spec, key, value);
}

} // namespace

std::vector<RunPlan> CampaignSpec::expand() const {
    std::vector<RunPlan> runs;
    runs.reserve(run_count());
    for (int fleet : fleet_sizes)
        for (int st : seats_values)
            for (double rate : request_rates)
                for (double extra : max_extra_times)
                    for (std::uint64_t seed : rng_seeds) {
                        RunPlan plan;
                        plan.config = base;
                        plan.config.fleet_size = fleet;
                        plan.config.seats = st;
                        plan.config.request_rate = rate;
                        plan.config.max_extra_time = extra;
                        plan.config.rng_seed = seed;
                        plan.dir_name = "maxdelay-" + format_number(extra) + "_rate-" +
                                        format_number(rate) + "_vehicles-" +
                                        format_number(fleet) + "_seats-" + format_number(st) +
                                        "_seed-" + std::to_string(seed);
                        runs.push_back(std::move(plan));
                    }
    return runs;
}

CampaignSpec parse_config(const std::string& file_text,
                          const std::vector<std::string>& overrides) {
    CampaignSpec spec;
    spec.fleet_sizes = {spec.base.fleet_size};
    spec.seats_values = {spec.base.seats};
    spec.request_rates = {spec.base.request_rate};
    spec.max_extra_times = {spec.base.max_extra_time};
    spec.rng_seeds = {spec.base.rng_seed};

    std::stringstream ss(file_text);
    std::string line;
    while (std::getline(ss, line))
        apply_line(spec, line);
    for (const auto& ov : overrides)
        apply_line(spec, ov);

    if (const char* env_seed = std::getenv("AMODSIM_SEED")) {
        spec.rng_seeds = {parse_int<std::uint64_t>("AMODSIM_SEED", env_seed)};
    }

    for (const auto& plan : spec.expand())
        plan.config.validate();
    return spec;
}

CampaignSpec load_config(const std::optional<std::filesystem::path>& file,
                         const std::vector<std::string>& overrides) {
    std::string text;
    if (file) {
        std::ifstream in(*file);
        if (!in)
            throw std::invalid_argument("cannot open config file '" + file->string() + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    return parse_config(text, overrides);
}

} // namespace amod
