#include "amod/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace amod {

AggregateRow aggregate(std::string metric, std::span<const double> values) {
    if (values.empty())
        throw std::invalid_argument("aggregate: empty sequence for metric '" + metric + "'");

    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    AggregateRow row;
    row.metric = std::move(metric);
    row.min = sorted.front();
    row.max = sorted.back();
    for (double v : sorted)
        row.sum += v;
    row.mean = row.sum / static_cast<double>(n);

    double sq = 0.0;
    for (double v : sorted) {
        const double d = v - row.mean;
        sq += d * d;
    }
    row.std_dev = std::sqrt(sq / static_cast<double>(n));

    row.median = sorted[(n - 1) / 2];
    const std::size_t rank = static_cast<std::size_t>(
        std::ceil(0.95 * static_cast<double>(n)));
    row.p95 = sorted[std::max<std::size_t>(rank, 1) - 1];
    return row;
}

double stretch(const RequestRecord& req, SimTime preferred_duration) {
    if (req.status != RequestStatus::Completed)
        throw std::invalid_argument("stretch: request " + std::to_string(req.id) +
                                    " is not completed");
    if (preferred_duration <= 0)
        throw std::invalid_argument("stretch: preferred duration must be > 0");
    const SimTime actual = *req.actual_dropoff_time - req.submission_time;
    return static_cast<double>(actual) / static_cast<double>(preferred_duration);
}

} // namespace amod
