#pragma once

#include <filesystem>

#include "amod/config.hpp"
#include "amod/engine.hpp"

namespace amod {

/// Writes summary.csv, vehicles.csv, requests.csv, snapshots.csv and meta.txt
/// for one finished run into `dir` (created if needed).
void write_run_outputs(const std::filesystem::path& dir, const SimOutput& out);

/// Fleet and user statistics emitted into summary.csv. Metrics with no
/// defined values (e.g. stretch with zero completed trips) are omitted.
std::vector<AggregateRow> summarize(const SimOutput& out);

/// Executes every run of the campaign, up to max_parallel at a time, each
/// into its own subdirectory, and writes a campaign-level index.csv. Failed
/// runs are recorded in the index and do not stop the rest.
/// Returns 0 when every run succeeded, 1 otherwise.
int run_campaign(const CampaignSpec& spec);

} // namespace amod
