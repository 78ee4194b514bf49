#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "amod/engine.hpp"

namespace amod {

/// One run of an expanded campaign: its config and output subdirectory name.
struct RunPlan {
    SimConfig config;
    std::string dir_name;
};

/// A campaign: a base config plus sweep axes over fleet size, seats, request
/// rate, max extra-time, and seed. The run set is the Cartesian product.
struct CampaignSpec {
    SimConfig base;
    std::vector<int> fleet_sizes;
    std::vector<int> seats_values;
    std::vector<double> request_rates;
    std::vector<double> max_extra_times;
    std::vector<std::uint64_t> rng_seeds;
    std::filesystem::path output_dir = "campaign_out";
    int max_parallel = 1;

    std::size_t run_count() const {
        return fleet_sizes.size() * seats_values.size() * request_rates.size() *
               max_extra_times.size() * rng_seeds.size();
    }

    /// Runs in a fixed nesting order (fleet, seats, rate, extra-time, seed),
    /// each with a deterministic directory name derived from its tuple.
    std::vector<RunPlan> expand() const;
};

/// Parses the flat key=value format ('#' comments, comma-separated lists for
/// the sweep axes), then applies "key=value" overrides on top. Every config
/// in the expanded campaign is validated eagerly; errors name the key.
CampaignSpec parse_config(const std::string& file_text,
                          const std::vector<std::string>& overrides);

/// parse_config on a file's contents (missing file is an error); with no file,
/// parses just the overrides over the defaults.
CampaignSpec load_config(const std::optional<std::filesystem::path>& file,
                         const std::vector<std::string>& overrides);

} // namespace amod
