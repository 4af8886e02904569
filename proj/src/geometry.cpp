#include "cpair/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace cpair {

InsufficientPoints::InsufficientPoints(std::size_t n)
    : std::invalid_argument("closest pair needs at least 2 points, got " + std::to_string(n))
{
}

bool is_finite(const Point& p) noexcept
{
    return std::isfinite(p.x) && std::isfinite(p.y);
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points))
{
    const auto bad = std::find_if(points_.begin(), points_.end(),
                                  [](const Point& p) { return !is_finite(p); });
    if (bad != points_.end()) {
        throw std::invalid_argument("point " + std::to_string(bad - points_.begin()) +
                                    " has a non-finite coordinate");
    }
}

PointSet::PointSet(std::initializer_list<Point> points) : PointSet(std::vector<Point>(points)) {}

double final_distance(double dist_sq)
{
    return std::sqrt(dist_sq);
}

}  // namespace cpair
