#include "cpair/cost_model.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "cpair/geometry.hpp"

namespace cpair {

namespace {

void check_range(std::uint64_t n, std::uint64_t a)
{
    if (n < 2) throw InsufficientPoints(n);
    if (a < 2 || a > n) {
        throw InvalidPartition("partition parameter " + std::to_string(a) + " outside [2, " +
                               std::to_string(n) + "]");
    }
}

// Exponent k with a^k == n, if one exists.
std::optional<std::uint64_t> exact_log(std::uint64_t n, std::uint64_t a)
{
    std::uint64_t k = 0;
    std::uint64_t v = 1;
    while (v < n) {
        if (v > n / a) return std::nullopt;
        v *= a;
        ++k;
    }
    if (v == n) return k;
    return std::nullopt;
}

double log_base(std::uint64_t n, std::uint64_t a)
{
    if (auto k = exact_log(n, a)) return static_cast<double>(*k);
    return std::log(static_cast<double>(n)) / std::log(static_cast<double>(a));
}

}  // namespace

double analytic_strip_cost(std::uint64_t n, std::uint64_t a)
{
    check_range(n, a);
    const double per_level = static_cast<double>((a - 1) * n) / static_cast<double>(a);
    return 2.0 * per_level * log_base(n, a);
}

double analytic_local_cost(std::uint64_t n, std::uint64_t a)
{
    check_range(n, a);
    const std::uint64_t m = (n + a - 1) / a;
    return static_cast<double>(a * (m * (m - 1) / 2));
}

CostBreakdown analytic_total_cost(std::uint64_t n, std::uint64_t a)
{
    CostBreakdown c;
    c.n = n;
    c.a = a;
    c.strip_cost = analytic_strip_cost(n, a);
    c.local_cost = analytic_local_cost(n, a);
    c.total = c.strip_cost + c.local_cost;
    return c;
}

std::uint64_t analytic_argmin(std::uint64_t n)
{
    if (n < 2) throw InsufficientPoints(n);
    std::uint64_t best_a = 2;
    double best = analytic_total_cost(n, 2).total;
    for (std::uint64_t a = 3; a <= n; ++a) {
        const double t = analytic_total_cost(n, a).total;
        if (t <= best) {
            best = t;
            best_a = a;
        }
    }
    return best_a;
}

}  // namespace cpair
