#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cpair/geometry.hpp"

using namespace cpair;

TEST_CASE("squared_distance examples")
{
    OpCounter c;
    CHECK(squared_distance({0, 0}, {3, 4}, c) == 25.0);
    CHECK(c.dc() == 1);
    CHECK(squared_distance({1, 1}, {1, 1}, c) == 0.0);
    CHECK(c.dc() == 2);
    CHECK(squared_distance({0, 0}, {1, 0}, c) == 1.0);
    CHECK(c.dc() == 3);
}

TEST_CASE("final_distance examples")
{
    CHECK(final_distance(25.0) == 5.0);
    CHECK(final_distance(0.0) == 0.0);
    CHECK(final_distance(2.0) == 1.4142135623730951);
}

TEST_CASE("squared_distance properties")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coord(-1e3, 1e3);
    std::uniform_int_distribution<int> exponent(-30, 30);
    OpCounter c;
    std::uint64_t calls = 0;
    for (int k = 0; k < 500; ++k) {
        const Point p{coord(rng), coord(rng)};
        const Point q{coord(rng), coord(rng)};
        const double d = squared_distance(p, q, c);
        CHECK(d == squared_distance(q, p, c));
        CHECK(squared_distance(p, p, c) == 0.0);
        calls += 3;

        const double s = std::ldexp(1.0, exponent(rng));
        const double scaled = squared_distance({s * p.x, s * p.y}, {s * q.x, s * q.y}, c);
        ++calls;
        CHECK(scaled == s * s * d);
    }
    CHECK(c.dc() == calls);
}

TEST_CASE("PointSet rejects non-finite coordinates")
{
    const double inf = std::numeric_limits<double>::infinity();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(PointSet({{0, 0}, {inf, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(PointSet({{nan, 0}}), std::invalid_argument);

    const PointSet dup{{1, 2}, {1, 2}};
    CHECK(dup.size() == 2);
    CHECK(dup[0] == dup[1]);
}
