#include "tdgraph/interval_reporter.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tdgraph {

void interval_reporter::build(std::span<const std::uint64_t> left_rank_by_right_rank) {
    const std::size_t m = left_rank_by_right_rank.size();
    left_rank_ = int_vector(m, int_vector::width_for(m > 0 ? m - 1 : 0));
    std::vector<bool> seen(m, false);
    for (std::size_t k = 0; k < m; ++k) {
        const std::uint64_t v = left_rank_by_right_rank[k];
        if (v >= m || seen[v])
            throw std::invalid_argument("interval_reporter: left ranks are not a permutation");
        seen[v] = true;
        left_rank_.set(k, v);
    }
    rmq_ = succinct_rmq(left_rank_by_right_rank);
}

interval_reporter interval_reporter::from_ranks(
    std::span<const std::uint64_t> left_rank_by_right_rank) {
    interval_reporter r;
    r.build(left_rank_by_right_rank);
    return r;
}

interval_reporter::interval_reporter(std::span<const interval> intervals) {
    const std::size_t m = intervals.size();
    std::vector<coord_t> all;
    all.reserve(2 * m);
    for (const auto& iv : intervals) {
        if (iv.lo > iv.hi) throw std::invalid_argument("interval_reporter: interval with lo > hi");
        all.push_back(iv.lo);
        all.push_back(iv.hi);
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::invalid_argument("interval_reporter: endpoints must be pairwise distinct");

    std::vector<std::size_t> by_left(m), by_right(m);
    std::iota(by_left.begin(), by_left.end(), 0);
    std::iota(by_right.begin(), by_right.end(), 0);
    std::sort(by_left.begin(), by_left.end(),
              [&](std::size_t a, std::size_t b) { return intervals[a].lo < intervals[b].lo; });
    std::sort(by_right.begin(), by_right.end(),
              [&](std::size_t a, std::size_t b) { return intervals[a].hi < intervals[b].hi; });
    std::vector<std::uint64_t> left_rank_of(m);
    for (std::size_t r = 0; r < m; ++r) left_rank_of[by_left[r]] = r;
    std::vector<std::uint64_t> l_by_r(m);
    sorted_lefts_.resize(m);
    sorted_rights_.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        l_by_r[k] = left_rank_of[by_right[k]];
        sorted_lefts_[k] = intervals[by_left[k]].lo;
        sorted_rights_[k] = intervals[by_right[k]].hi;
    }
    build(l_by_r);
}

std::vector<std::size_t> interval_reporter::report_intersecting(const interval& query,
                                                                std::size_t* nodes) const {
    if (!has_coordinates())
        throw std::logic_error("interval_reporter: built from ranks, no coordinate map");
    if (query.lo > query.hi)
        throw std::invalid_argument("interval_reporter: query with lo > hi");
    const auto rights_before = static_cast<std::size_t>(
        std::lower_bound(sorted_rights_.begin(), sorted_rights_.end(), query.lo) -
        sorted_rights_.begin());
    const auto lefts_upto = static_cast<std::size_t>(
        std::upper_bound(sorted_lefts_.begin(), sorted_lefts_.end(), query.hi) -
        sorted_lefts_.begin());
    std::vector<std::size_t> out;
    if (lefts_upto > rights_before) out.reserve(lefts_upto - rights_before);
    const std::size_t visited =
        report(rights_before, lefts_upto, [&](std::size_t rank) { out.push_back(rank); });
    if (nodes) *nodes += visited;
    return out;
}

}  // namespace tdgraph
