#pragma once

// Test-only helpers: an exhaustive minimum written independently of the
// solvers, plus generators for property tests.

#include <cstddef>
#include <limits>
#include <random>
#include <vector>

#include "cpair/geometry.hpp"

namespace cpair::testing {

inline double exhaustive_min_sq(const PointSet& set)
{
    double best = std::numeric_limits<double>::infinity();
    const auto pts = set.points();
    for (std::size_t j = 1; j < pts.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const double dx = pts[i].x - pts[j].x;
            const double dy = pts[i].y - pts[j].y;
            const double d = dx * dx + dy * dy;
            if (d < best) best = d;
        }
    }
    return best;
}

enum class Shape { uniform, grid, collinear_x, clustered };

/// Random point set; grid and collinear shapes produce ties and duplicates.
inline PointSet random_set(std::mt19937_64& rng, std::size_t n, Shape shape)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> cell(0, 7);
    std::vector<Point> pts;
    pts.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        switch (shape) {
        case Shape::uniform:
            pts.push_back({unit(rng), unit(rng)});
            break;
        case Shape::grid:
            pts.push_back({static_cast<double>(cell(rng)), static_cast<double>(cell(rng))});
            break;
        case Shape::collinear_x:
            pts.push_back({0.25, unit(rng)});
            break;
        case Shape::clustered: {
            const double cx = static_cast<double>(cell(rng));
            pts.push_back({cx + 1e-3 * unit(rng), 1e-3 * unit(rng)});
            break;
        }
        }
    }
    return PointSet(std::move(pts));
}

inline Shape random_shape(std::mt19937_64& rng)
{
    return static_cast<Shape>(std::uniform_int_distribution<int>(0, 3)(rng));
}

/// Distinct-coordinate uniform set (rejects exact duplicates).
inline PointSet random_distinct_set(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point> pts;
    while (pts.size() < n) {
        const Point p{unit(rng), unit(rng)};
        bool dup = false;
        for (const auto& q : pts) dup = dup || q == p;
        if (!dup) pts.push_back(p);
    }
    return PointSet(std::move(pts));
}

}  // namespace cpair::testing
