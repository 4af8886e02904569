#include "cpair/experiments.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "cpair/random.hpp"
#include "cpair/solvers.hpp"

namespace cpair {

std::uint64_t TrialHistogram::total_wins() const
{
    std::uint64_t sum = 0;
    for (const auto& [a, w] : wins) sum += w;
    return sum;
}

std::size_t TrialHistogram::mode() const
{
    std::size_t best_a = 0;
    std::uint64_t best = 0;
    for (const auto& [a, w] : wins) {
        if (best_a == 0 || w >= best) {
            best = w;
            best_a = a;
        }
    }
    return best_a;
}

PointSet gen_uniform_points(std::size_t n, std::uint64_t seed)
{
    SplitMix64 rng(seed);
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = rng.next_unit();
        const double y = rng.next_unit();
        pts.push_back({x, y});
    }
    return PointSet(std::move(pts));
}

std::vector<SweepRecord> run_sweep(std::size_t n, std::uint64_t seed, std::size_t a_lo,
                                   std::size_t a_hi)
{
    if (n < 2) throw InsufficientPoints(n);
    if (a_lo < 2 || a_lo > a_hi || a_hi > n) {
        throw InvalidPartition("sweep range [" + std::to_string(a_lo) + ", " +
                               std::to_string(a_hi) + "] not within [2, " + std::to_string(n) +
                               "]");
    }
    const auto set = gen_uniform_points(n, seed);
    std::vector<SweepRecord> records;
    records.reserve(a_hi - a_lo + 1);
    for (std::size_t a = a_lo; a <= a_hi; ++a) {
        OpCounter counter;
        const auto r = closest_pair_kway(set, a, counter);
        records.push_back({a, r.dc_used, final_distance(r.dist_sq)});
    }
    return records;
}

std::size_t argmin_partition(std::span<const SweepRecord> records)
{
    if (records.empty()) throw EmptySweep();
    const SweepRecord* best = &records.front();
    for (const auto& r : records) {
        if (r.dc_measured < best->dc_measured ||
            (r.dc_measured == best->dc_measured && r.a > best->a)) {
            best = &r;
        }
    }
    return best->a;
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::uint64_t t) noexcept
{
    return splitmix64_mix(base_seed + t);
}

TrialHistogram run_trials(std::size_t n, std::uint64_t trials, std::uint64_t base_seed,
                          unsigned jobs)
{
    if (n < 2) throw InsufficientPoints(n);
    if (trials < 1) throw std::invalid_argument("trial count must be at least 1");
    jobs = std::max(1U, jobs);
    if (jobs > trials) jobs = static_cast<unsigned>(trials);

    // Each worker tallies a strided slice of trials into its own histogram.
    std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(n + 1, 0));
    auto work = [&](unsigned w) {
        for (std::uint64_t t = w; t < trials; t += jobs) {
            const auto records = run_sweep(n, trial_seed(base_seed, t), 2, n);
            ++partial[w][argmin_partition(records)];
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    }

    TrialHistogram h;
    h.n = n;
    h.trials = trials;
    for (std::size_t a = 2; a <= n; ++a) {
        std::uint64_t sum = 0;
        for (const auto& p : partial) sum += p[a];
        h.wins[a] = sum;
    }
    return h;
}

std::vector<GrowthRecord> growth_check(std::span<const std::size_t> sizes, std::uint64_t seed)
{
    if (!std::is_sorted(sizes.begin(), sizes.end())) {
        throw std::invalid_argument("growth sizes must be ascending");
    }
    std::vector<GrowthRecord> out;
    out.reserve(sizes.size());
    for (const auto n : sizes) {
        if (n < 2) throw InsufficientPoints(n);
        OpCounter counter;
        const auto r = closest_pair_2way(gen_uniform_points(n, seed), counter);
        out.push_back({n, r.dc_used});
    }
    return out;
}

}  // namespace cpair
