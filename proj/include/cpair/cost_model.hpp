#pragma once

#include <cstdint>

namespace cpair {

/// Worst-case distance-computation counts predicted for an a-way partition
/// of n points. total is always strip_cost + local_cost.
struct CostBreakdown {
    std::uint64_t n = 0;
    std::uint64_t a = 0;
    double strip_cost = 0.0;
    double local_cost = 0.0;
    double total = 0.0;
};

/// 2 * ((a-1) n / a) * log_a(n). The logarithm is taken exactly when n is an
/// integer power of a, otherwise as ln(n) / ln(a).
double analytic_strip_cost(std::uint64_t n, std::uint64_t a);

/// a * C(ceil(n/a), 2): brute-forcing each region of one partition level.
double analytic_local_cost(std::uint64_t n, std::uint64_t a);

CostBreakdown analytic_total_cost(std::uint64_t n, std::uint64_t a);

/// Smallest-total a in [2, n]; ties go to the larger a.
std::uint64_t analytic_argmin(std::uint64_t n);

}  // namespace cpair
