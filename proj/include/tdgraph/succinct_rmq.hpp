#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tdgraph/bit_vector.hpp"
#include "tdgraph/int_vector.hpp"

namespace tdgraph {

// Range-minimum index that keeps no copy of the values.
//
// The array is encoded as the balanced-parentheses sequence of its
// left-to-right stack scan: for each element, one ')' per popped larger
// element followed by one '(' for the element itself, and a ')' per element
// left on the stack at the end (2m bits). The leftmost minimum of [l, r]
// is read from the rightmost minimum of the excess between the '(' of l
// and the '(' of r.
//
// Excess minima use 256-bit blocks: a relative minimum per block and a
// sparse table over block minima, plus a byte lookup table for in-block
// scans.
class succinct_rmq {
public:
    succinct_rmq() = default;
    explicit succinct_rmq(std::span<const std::uint64_t> values);

    std::size_t size() const { return size_; }

    // Index of the leftmost minimum in [l, r], 0 <= l <= r < size().
    std::size_t query(std::size_t l, std::size_t r) const;

    const bit_vector& parentheses() const { return bp_; }
    std::size_t space_bits() const;

private:
    static constexpr std::size_t block_bits = 256;

    struct min_pos {
        std::int64_t value;
        std::size_t pos;
    };

    std::int64_t excess_before(std::size_t pos) const;
    std::int64_t excess_at(std::size_t pos) const { return excess_before(pos + 1); }
    min_pos scan(std::size_t from, std::size_t to) const;
    std::int64_t block_min(std::size_t block) const;
    std::size_t block_table_query(std::size_t b0, std::size_t b1) const;
    min_pos rightmost_min_excess(std::size_t from, std::size_t to) const;

    std::size_t size_ = 0;
    bit_vector bp_;
    std::vector<std::int16_t> block_rel_min_;
    // sparse_[k][b] = block with the smallest (rightmost on ties) minimum
    // among blocks [b, b + 2^k).
    std::vector<int_vector> sparse_;
};

}  // namespace tdgraph
