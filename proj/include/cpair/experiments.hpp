#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <vector>

#include "cpair/geometry.hpp"

namespace cpair {

class EmptySweep : public std::invalid_argument {
  public:
    EmptySweep() : std::invalid_argument("argmin over an empty sweep") {}
};

/// One k-way run within a sweep over the partition parameter.
struct SweepRecord {
    std::size_t a = 0;
    std::uint64_t dc_measured = 0;
    double dist = 0.0;  // reported distance, sqrt of dist_sq
};

/// How often each partition parameter was the measured optimum.
struct TrialHistogram {
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::map<std::size_t, std::uint64_t> wins;  // every a in [2, n], zeros included

    std::uint64_t total_wins() const;
    /// Most-won a; ties go to the larger a.
    std::size_t mode() const;
};

struct GrowthRecord {
    std::size_t n = 0;
    std::uint64_t dc_measured = 0;
};

/// n points uniform in [0,1)^2 from a splitmix64 stream, x then y per point.
PointSet gen_uniform_points(std::size_t n, std::uint64_t seed);

/// Runs closest_pair_kway for every a in [a_lo, a_hi] on one generated
/// instance. Requires n >= 2 and 2 <= a_lo <= a_hi <= n.
std::vector<SweepRecord> run_sweep(std::size_t n, std::uint64_t seed, std::size_t a_lo,
                                   std::size_t a_hi);

/// a of the record with the fewest distance computations, largest a on ties.
std::size_t argmin_partition(std::span<const SweepRecord> records);

/// Seed used for trial t of a run.
std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t t) noexcept;

/// Repeats full sweeps over [2, n] and tallies the argmin. Trials are split
/// across `jobs` threads; the histogram does not depend on `jobs`.
TrialHistogram run_trials(std::size_t n, std::uint64_t trials, std::uint64_t base_seed,
                          unsigned jobs = 1);

/// Two-way solver counts on one generated instance per size.
std::vector<GrowthRecord> growth_check(std::span<const std::size_t> sizes, std::uint64_t seed);

}  // namespace cpair
