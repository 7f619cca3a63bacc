#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tdgraph/geometry.hpp"
#include "tdgraph/int_vector.hpp"
#include "tdgraph/succinct_rmq.hpp"

namespace tdgraph {

// Reports the intervals of a fixed set that meet a query interval, as ranks
// of their right endpoints (1-based, in increasing right-endpoint order).
//
// Core state is L[k] = rank among left endpoints (0-based) of the interval
// whose right endpoint is the (k+1)-th smallest, plus a range-minimum index
// over L. For a query [s, t], with r0 right endpoints before s and c left
// endpoints at or before t, the answer is every k >= r0 with L[k] < c; the
// reporter walks the minimum recursively over [r0, m) and stops a branch as
// soon as its minimum fails. Exactly c - r0 intervals are reported.
class interval_reporter {
public:
    interval_reporter() = default;

    // left_rank_by_right_rank must be a permutation of [0, m).
    static interval_reporter from_ranks(std::span<const std::uint64_t> left_rank_by_right_rank);

    // Intervals with pairwise distinct endpoints. Keeps the sorted endpoint
    // coordinates so that report_intersecting can take raw coordinates.
    explicit interval_reporter(std::span<const interval> intervals);

    std::size_t size() const { return left_rank_.size(); }
    std::uint64_t left_rank(std::size_t right_index) const { return left_rank_[right_index]; }

    // Calls emit(right_rank) for every interval with right rank > rights_before
    // and left rank < lefts_upto. Returns the number of minimum-query nodes
    // visited (at most 2 * reported + 1).
    template <class Emit>
    std::size_t report(std::size_t rights_before, std::size_t lefts_upto, Emit&& emit) const;

    std::vector<std::size_t> report_intersecting(const interval& query,
                                                 std::size_t* nodes = nullptr) const;

    bool has_coordinates() const { return !sorted_lefts_.empty() || size() == 0; }

    // L plus the minimum index; coordinate tables are counted separately.
    std::size_t space_bits() const { return left_rank_.space_bits() + rmq_.space_bits(); }
    std::size_t coordinate_space_bits() const {
        return (sorted_lefts_.size() + sorted_rights_.size()) * 64;
    }

private:
    void build(std::span<const std::uint64_t> left_rank_by_right_rank);

    int_vector left_rank_;
    succinct_rmq rmq_;
    std::vector<coord_t> sorted_lefts_;
    std::vector<coord_t> sorted_rights_;
};

template <class Emit>
std::size_t interval_reporter::report(std::size_t rights_before, std::size_t lefts_upto,
                                      Emit&& emit) const {
    const std::size_t m = size();
    if (rights_before >= m || lefts_upto == 0) return 0;
    std::size_t nodes = 0;
    struct range {
        std::size_t lo, hi;
    };
    std::vector<range> pending;
    pending.push_back({rights_before, m - 1});
    while (!pending.empty()) {
        const range r = pending.back();
        pending.pop_back();
        ++nodes;
        const std::size_t k = rmq_.query(r.lo, r.hi);
        if (left_rank_[k] >= lefts_upto) continue;
        emit(k + 1);
        if (k + 1 <= r.hi) pending.push_back({k + 1, r.hi});
        if (k > r.lo) pending.push_back({r.lo, k - 1});
    }
    return nodes;
}

}  // namespace tdgraph
