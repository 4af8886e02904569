#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "cpair/geometry.hpp"

namespace cpair {

/// A point together with its position in the caller's PointSet.
struct IndexedPoint {
    Point p;
    std::size_t index = 0;
};

/// Copies the set and sorts it by (x, y, original index).
std::vector<IndexedPoint> presort_by_x(const PointSet& set);

/// Sorts strip points by (y, original index).
void sort_by_y(std::vector<IndexedPoint>& strip);

struct DividingLine {
    double x_line = 0.0;
};

/// Half-open offsets [begin, end) into an x-sorted span.
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - begin; }
    friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Balanced split of an x-sorted range into `a` contiguous regions.
/// Sizes differ by at most one; the larger regions come first, so a = 2
/// reproduces the ceil/floor halving of the two-way solver.
struct Partition {
    std::vector<IndexRange> regions;
    std::vector<DividingLine> lines;
    std::size_t a = 0;
};

/// Requires 2 <= a <= sorted.size(); throws InvalidPartition otherwise.
Partition make_partition(std::span<const IndexedPoint> sorted, std::size_t a);

/// Line between two x-adjacent points: their midpoint, or the common x.
DividingLine line_between(const Point& left, const Point& right) noexcept;

/// Running minimum over the pairs evaluated so far. Indices are the
/// caller's original indices with i < j.
class MergeState {
  public:
    bool empty() const noexcept { return empty_; }
    /// +infinity while empty.
    double dist_sq() const noexcept { return dist_sq_; }
    std::size_t i() const noexcept { return i_; }
    std::size_t j() const noexcept { return j_; }

    /// Adopts (a, b, d) if the state is empty or d is strictly smaller.
    void offer(std::size_t a, std::size_t b, double d) noexcept;
    void merge(const MergeState& other) noexcept;

  private:
    bool empty_ = true;
    double dist_sq_ = std::numeric_limits<double>::infinity();
    std::size_t i_ = 0;
    std::size_t j_ = 0;
};

/// Optional instrumentation filled in by the divide-and-conquer solvers.
struct SolveTrace {
    std::uint64_t local_dc = 0;  // brute-forced small regions
    std::uint64_t strip_dc = 0;  // strip scans
    std::uint64_t seed_dc = 0;   // k-way seeding across a line
    std::size_t strips = 0;
    // Largest number of successors any single strip point was compared to.
    std::size_t max_successors = 0;
};

ClosestPairResult brute_force(const PointSet& set, OpCounter& counter);

/// Scans a y-sorted strip. Each point is compared with its successors while
/// the y gap squared stays below the running best; when the state enters
/// empty, the first comparison is unconditional.
MergeState strip_scan(std::span<const IndexedPoint> strip, MergeState state, OpCounter& counter,
                      SolveTrace* trace = nullptr);

/// Classic halving divide and conquer; ranges of at most 3 points are
/// brute-forced.
ClosestPairResult closest_pair_2way(const PointSet& set, OpCounter& counter,
                                    SolveTrace* trace = nullptr);

/// a-way partition divide and conquer. Values of a above n are clamped to n
/// at every level (see effective_partition).
ClosestPairResult closest_pair_kway(const PointSet& set, std::size_t a, OpCounter& counter,
                                    SolveTrace* trace = nullptr);

/// min(a, n); throws InvalidPartition if a < 2.
std::size_t effective_partition(std::size_t n, std::size_t a);

enum class Algorithm { brute, two_way, kway };

/// Dispatches to one of the three solvers; `a` is ignored unless kway.
ClosestPairResult solve(const PointSet& set, Algorithm algorithm, std::size_t a,
                        OpCounter& counter);

}  // namespace cpair
