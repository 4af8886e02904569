#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpair {

/// Raised when a solver is handed fewer than two points.
class InsufficientPoints : public std::invalid_argument {
  public:
    explicit InsufficientPoints(std::size_t n);
};

/// Raised when a partition parameter falls outside its legal range.
class InvalidPartition : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

bool is_finite(const Point& p) noexcept;

/// Ordered, indexable collection of finite points. Duplicates are allowed.
class PointSet {
  public:
    PointSet() = default;
    /// Throws std::invalid_argument if any coordinate is not finite.
    explicit PointSet(std::vector<Point> points);
    PointSet(std::initializer_list<Point> points);

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const Point& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Point> points() const noexcept { return points_; }

    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    friend bool operator==(const PointSet&, const PointSet&) = default;

  private:
    std::vector<Point> points_;
};

/// Counts distance computations for one solver invocation.
class OpCounter {
  public:
    std::uint64_t dc() const noexcept { return dc_; }
    void tick() noexcept { ++dc_; }

  private:
    std::uint64_t dc_ = 0;
};

struct ClosestPairResult {
    std::size_t i = 0;
    std::size_t j = 0;
    double dist_sq = 0.0;
    std::uint64_t dc_used = 0;
};

// The one counted primitive. Evaluates (p.x-q.x)^2 + (p.y-q.y)^2 in that
// order so every solver produces bit-identical values for the same pair.
inline double squared_distance(const Point& p, const Point& q, OpCounter& counter) noexcept
{
    counter.tick();
    const double dx = p.x - q.x;
    const double dy = p.y - q.y;
    return dx * dx + dy * dy;
}

/// Square root applied at reporting time only; never counted.
double final_distance(double dist_sq);

}  // namespace cpair
