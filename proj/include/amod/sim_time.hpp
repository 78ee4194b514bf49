#pragma once

#include <cmath>
#include <cstdint>

namespace amod {

/// Simulation time and durations in integer nanoseconds.
///
/// All schedule arithmetic (ETAs, delays, insertion deltas, costs) is done in
/// int64 nanoseconds, so equalities that hold on paper hold bit-exactly in
/// code: incremental deltas match full re-evaluation, argmin tie-breaking is
/// stable, and per-vehicle time accounting sums to the horizon without
/// rounding residue.
using SimTime = std::int64_t;

inline constexpr SimTime kNsPerSecond = 1'000'000'000;

inline SimTime from_seconds(double s) {
    return static_cast<SimTime>(std::llround(s * 1e9));
}

inline double to_seconds(SimTime t) {
    return static_cast<double>(t) / 1e9;
}

} // namespace amod
