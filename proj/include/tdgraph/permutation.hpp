#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tdgraph/bit_vector.hpp"
#include "tdgraph/int_vector.hpp"

namespace tdgraph {

// Permutation of [0, n) with O(1) forward access and inverse by cycle
// walking. Every cycle longer than the shortcut spacing B has each B-th
// element (in cycle order) marked with a pointer B steps back, so an inverse
// takes at most B + 1 steps (forward evaluations plus the single jump).
class succinct_permutation {
public:
    succinct_permutation() = default;
    // spacing == 0 selects ceil(log2 n), at least 1.
    explicit succinct_permutation(std::span<const std::uint64_t> values, std::size_t spacing = 0);

    static std::size_t default_spacing(std::size_t n);

    std::size_t size() const { return forward_.size(); }
    std::size_t spacing() const { return spacing_; }

    std::uint64_t apply(std::size_t i) const;
    // steps, when non-null, is incremented by the number of steps taken.
    std::uint64_t invert(std::size_t j, std::uint64_t* steps = nullptr) const;

    bool is_identity() const;
    const int_vector& forward() const { return forward_; }

    std::size_t space_bits() const;

private:
    int_vector forward_;
    bit_vector marked_;
    int_vector back_;
    std::size_t spacing_ = 1;
};

}  // namespace tdgraph
