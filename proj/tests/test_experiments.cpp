#include <doctest.h>

#include <numeric>

#include "cpair/experiments.hpp"
#include "cpair/random.hpp"
#include "cpair/solvers.hpp"
#include "oracle.hpp"

using namespace cpair;

TEST_CASE("splitmix64 reference stream")
{
    // Reference outputs of Vigna's splitmix64.c for seed 1234567.
    SplitMix64 rng(1234567);
    CHECK(rng() == 6457827717110365317ULL);
    CHECK(rng() == 3203168211198807973ULL);
    CHECK(rng() == 9817491932198370423ULL);
    CHECK(rng() == 4593380528125082431ULL);
    CHECK(rng() == 16408922859458223821ULL);
    CHECK(splitmix64_mix(42) == 12058926934050108962ULL);
}

TEST_CASE("gen_uniform_points")
{
    CHECK(gen_uniform_points(0, 9).empty());
    CHECK(gen_uniform_points(64, 9) == gen_uniform_points(64, 9));
    CHECK(gen_uniform_points(64, 9) != gen_uniform_points(64, 10));

    // Frozen from an independent implementation of the stream.
    const auto two = gen_uniform_points(2, 42);
    CHECK(two[0].x == 0x1.7bae644c5fd6dp-1);
    CHECK(two[0].y == 0x1.477f199d93378p-3);
    CHECK(two[1].x == 0x1.1d499d5c4c3e6p-2);
    CHECK(two[1].y == 0x1.607387fc392b8p-2);

    const auto big = gen_uniform_points(1000, 31337);
    double sum = 0.0;
    for (const auto& p : big) {
        CHECK(p.x >= 0.0);
        CHECK(p.x < 1.0);
        CHECK(p.y >= 0.0);
        CHECK(p.y < 1.0);
        sum += p.x;
    }
    CHECK(sum / 1000.0 == doctest::Approx(0.5).epsilon(0.1));
}

TEST_CASE("run_sweep")
{
    const auto single = run_sweep(2, 1, 2, 2);
    REQUIRE(single.size() == 1);
    CHECK(single[0].a == 2);
    CHECK(single[0].dc_measured >= 1);

    const auto records = run_sweep(50, 1, 2, 50);
    REQUIRE(records.size() == 49);
    const double oracle = final_distance(testing::exhaustive_min_sq(gen_uniform_points(50, 1)));
    for (std::size_t k = 0; k < records.size(); ++k) {
        CHECK(records[k].a == k + 2);
        CHECK(records[k].dc_measured >= 1);
        CHECK(records[k].dist == oracle);
    }

    CHECK_THROWS_AS(run_sweep(1, 1, 2, 2), InsufficientPoints);
    CHECK_THROWS_AS(run_sweep(10, 1, 1, 5), InvalidPartition);
    CHECK_THROWS_AS(run_sweep(10, 1, 6, 5), InvalidPartition);
    CHECK_THROWS_AS(run_sweep(10, 1, 2, 11), InvalidPartition);
}

TEST_CASE("argmin_partition")
{
    const std::vector<SweepRecord> strict{{2, 90, 0}, {3, 80, 0}};
    CHECK(argmin_partition(strict) == 3);
    const std::vector<SweepRecord> tie{{2, 80, 0}, {3, 80, 0}};
    CHECK(argmin_partition(tie) == 3);
    const std::vector<SweepRecord> one{{7, 5, 0}};
    CHECK(argmin_partition(one) == 7);
    const std::vector<SweepRecord> early{{2, 10, 0}, {3, 80, 0}, {4, 10, 0}, {5, 11, 0}};
    CHECK(argmin_partition(early) == 4);
    CHECK_THROWS_AS(argmin_partition({}), EmptySweep);
}

TEST_CASE("run_trials")
{
    const auto h2 = run_trials(2, 5, 3);
    CHECK(h2.wins.size() == 1);
    CHECK(h2.wins.at(2) == 5);

    const auto h = run_trials(50, 300, 3);
    CHECK(h.total_wins() == 300);
    CHECK(h.wins.size() == 49);
    CHECK(h.wins.begin()->first == 2);
    CHECK(h.wins.rbegin()->first == 50);

    // Trial t equals a standalone sweep with the derived seed.
    std::map<std::size_t, std::uint64_t> manual;
    for (std::uint64_t t = 0; t < 40; ++t) {
        ++manual[argmin_partition(run_sweep(20, trial_seed(3, t), 2, 20))];
    }
    const auto small = run_trials(20, 40, 3);
    for (const auto& [a, w] : manual) CHECK(small.wins.at(a) == w);

    for (unsigned jobs : {2U, 3U, 8U, 64U}) {
        CHECK(run_trials(50, 300, 3, jobs).wins == h.wins);
    }

    CHECK_THROWS_AS(run_trials(1, 5, 0), InsufficientPoints);
    CHECK_THROWS_AS(run_trials(5, 0, 0), std::invalid_argument);
}

TEST_CASE("TrialHistogram mode prefers the larger a on ties")
{
    TrialHistogram h;
    h.wins = {{2, 4}, {3, 1}, {4, 4}};
    CHECK(h.mode() == 4);
}

TEST_CASE("growth_check")
{
    const std::vector<std::size_t> one{2};
    const auto r = growth_check(one, 5);
    REQUIRE(r.size() == 1);
    CHECK(r[0].dc_measured >= 1);

    const std::vector<std::size_t> same{4, 4};
    const auto twice = growth_check(same, 5);
    CHECK(twice[0].dc_measured == twice[1].dc_measured);

    const std::vector<std::size_t> sizes{1000, 2000, 4000};
    const auto g = growth_check(sizes, 5);
    for (std::size_t k = 1; k < g.size(); ++k) {
        const double ratio =
            static_cast<double>(g[k].dc_measured) / static_cast<double>(g[k - 1].dc_measured);
        CAPTURE(ratio);
        CHECK(ratio < 2.6);
    }

    const std::vector<std::size_t> descending{8, 4};
    CHECK_THROWS_AS(growth_check(descending, 5), std::invalid_argument);
}
