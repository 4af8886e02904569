#include "cpair/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace cpair {

namespace {

constexpr std::size_t kBruteForceMax = 3;

ClosestPairResult to_result(const MergeState& state, std::uint64_t dc_used)
{
    return ClosestPairResult{state.i(), state.j(), state.dist_sq(), dc_used};
}

MergeState brute_range(std::span<const IndexedPoint> pts, OpCounter& counter)
{
    MergeState state;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            state.offer(pts[i].index, pts[j].index, squared_distance(pts[i].p, pts[j].p, counter));
        }
    }
    return state;
}

MergeState brute_local(std::span<const IndexedPoint> pts, OpCounter& counter, SolveTrace* trace)
{
    const auto before = counter.dc();
    auto state = brute_range(pts, counter);
    if (trace) trace->local_dc += counter.dc() - before;
    return state;
}

MergeState scan_across(std::span<const IndexedPoint> pts, DividingLine line, MergeState state,
                       OpCounter& counter, SolveTrace* trace)
{
    std::vector<IndexedPoint> strip;
    for (const auto& ip : pts) {
        const double dx = ip.p.x - line.x_line;
        if (dx * dx < state.dist_sq()) strip.push_back(ip);
    }
    sort_by_y(strip);
    if (trace) ++trace->strips;
    return strip_scan(strip, state, counter, trace);
}

MergeState solve_two_way(std::span<const IndexedPoint> pts, OpCounter& counter, SolveTrace* trace)
{
    if (pts.size() <= kBruteForceMax) return brute_local(pts, counter, trace);

    const std::size_t mid = (pts.size() + 1) / 2;
    auto state = solve_two_way(pts.first(mid), counter, trace);
    state.merge(solve_two_way(pts.subspan(mid), counter, trace));

    const auto line = line_between(pts[mid - 1].p, pts[mid].p);
    return scan_across(pts, line, state, counter, trace);
}

MergeState solve_k_way(std::span<const IndexedPoint> pts, std::size_t a, OpCounter& counter,
                       SolveTrace* trace)
{
    const auto partition = make_partition(pts, effective_partition(pts.size(), a));

    MergeState state;
    for (const auto& region : partition.regions) {
        const auto sub = pts.subspan(region.begin, region.size());
        if (sub.size() > kBruteForceMax) {
            state.merge(solve_k_way(sub, a, counter, trace));
        } else if (sub.size() >= 2) {
            state.merge(brute_local(sub, counter, trace));
        }
    }

    for (std::size_t k = 0; k < partition.lines.size(); ++k) {
        if (state.empty()) {
            const auto& left = pts[partition.regions[k].end - 1];
            const auto& right = pts[partition.regions[k + 1].begin];
            state.offer(left.index, right.index, squared_distance(left.p, right.p, counter));
            if (trace) ++trace->seed_dc;
        }
        state = scan_across(pts, partition.lines[k], state, counter, trace);
    }
    return state;
}

void require_pair(const PointSet& set)
{
    if (set.size() < 2) throw InsufficientPoints(set.size());
}

}  // namespace

std::vector<IndexedPoint> presort_by_x(const PointSet& set)
{
    std::vector<IndexedPoint> out;
    out.reserve(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) out.push_back({set[i], i});
    std::sort(out.begin(), out.end(), [](const IndexedPoint& l, const IndexedPoint& r) {
        if (l.p.x != r.p.x) return l.p.x < r.p.x;
        if (l.p.y != r.p.y) return l.p.y < r.p.y;
        return l.index < r.index;
    });
    return out;
}

void sort_by_y(std::vector<IndexedPoint>& strip)
{
    std::sort(strip.begin(), strip.end(), [](const IndexedPoint& l, const IndexedPoint& r) {
        if (l.p.y != r.p.y) return l.p.y < r.p.y;
        return l.index < r.index;
    });
}

DividingLine line_between(const Point& left, const Point& right) noexcept
{
    return DividingLine{std::midpoint(left.x, right.x)};
}

Partition make_partition(std::span<const IndexedPoint> sorted, std::size_t a)
{
    const std::size_t n = sorted.size();
    if (a < 2 || a > n) {
        throw InvalidPartition("partition parameter " + std::to_string(a) +
                               " outside [2, " + std::to_string(n) + "]");
    }
    Partition part;
    part.a = a;
    part.regions.reserve(a);
    part.lines.reserve(a - 1);

    const std::size_t base = n / a;
    const std::size_t extra = n % a;
    std::size_t begin = 0;
    for (std::size_t k = 0; k < a; ++k) {
        const std::size_t len = base + (k < extra ? 1 : 0);
        part.regions.push_back({begin, begin + len});
        begin += len;
    }
    for (std::size_t k = 0; k + 1 < a; ++k) {
        const std::size_t cut = part.regions[k].end;
        part.lines.push_back(line_between(sorted[cut - 1].p, sorted[cut].p));
    }
    return part;
}

void MergeState::offer(std::size_t a, std::size_t b, double d) noexcept
{
    if (!empty_ && !(d < dist_sq_)) return;
    empty_ = false;
    dist_sq_ = d;
    i_ = std::min(a, b);
    j_ = std::max(a, b);
}

void MergeState::merge(const MergeState& other) noexcept
{
    if (!other.empty()) offer(other.i(), other.j(), other.dist_sq());
}

ClosestPairResult brute_force(const PointSet& set, OpCounter& counter)
{
    require_pair(set);
    const auto before = counter.dc();
    MergeState state;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            state.offer(i, j, squared_distance(set[i], set[j], counter));
        }
    }
    return to_result(state, counter.dc() - before);
}

MergeState strip_scan(std::span<const IndexedPoint> strip, MergeState state, OpCounter& counter,
                      SolveTrace* trace)
{
    const auto before = counter.dc();
    for (std::size_t i = 0; i < strip.size(); ++i) {
        std::size_t compared = 0;
        for (std::size_t j = i + 1; j < strip.size(); ++j) {
            if (!state.empty()) {
                const double dy = strip[j].p.y - strip[i].p.y;
                if (!(dy * dy < state.dist_sq())) break;
            }
            state.offer(strip[i].index, strip[j].index,
                        squared_distance(strip[i].p, strip[j].p, counter));
            ++compared;
        }
        if (trace) trace->max_successors = std::max(trace->max_successors, compared);
    }
    if (trace) trace->strip_dc += counter.dc() - before;
    return state;
}

ClosestPairResult closest_pair_2way(const PointSet& set, OpCounter& counter, SolveTrace* trace)
{
    require_pair(set);
    const auto before = counter.dc();
    const auto sorted = presort_by_x(set);
    const auto state = solve_two_way(sorted, counter, trace);
    return to_result(state, counter.dc() - before);
}

ClosestPairResult closest_pair_kway(const PointSet& set, std::size_t a, OpCounter& counter,
                                    SolveTrace* trace)
{
    require_pair(set);
    effective_partition(set.size(), a);
    const auto before = counter.dc();
    const auto sorted = presort_by_x(set);
    const auto state = solve_k_way(sorted, a, counter, trace);
    return to_result(state, counter.dc() - before);
}

std::size_t effective_partition(std::size_t n, std::size_t a)
{
    if (a < 2) {
        throw InvalidPartition("partition parameter must be at least 2, got " + std::to_string(a));
    }
    return std::min(a, n);
}

ClosestPairResult solve(const PointSet& set, Algorithm algorithm, std::size_t a,
                        OpCounter& counter)
{
    switch (algorithm) {
    case Algorithm::brute:
        return brute_force(set, counter);
    case Algorithm::two_way:
        return closest_pair_2way(set, counter);
    case Algorithm::kway:
        return closest_pair_kway(set, a, counter);
    }
    return brute_force(set, counter);
}

}  // namespace cpair
