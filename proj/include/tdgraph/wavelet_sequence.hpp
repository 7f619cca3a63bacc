#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tdgraph/bit_vector.hpp"

namespace tdgraph {

using symbol_t = std::uint32_t;

// Sequence over an alphabet [0, sigma) with rank / select / access, stored
// as a wavelet matrix: ceil(log2 sigma) bit planes of the sequence length,
// each with a rank/select index.
//
// Positions are 1-based, matching endpoint ranks: access(i) for i in
// [1, size], rank(a, i) counts occurrences of a in S[1..i] (i may be 0),
// select(a, k) is the position of the k-th a.
class wavelet_sequence {
public:
    wavelet_sequence() = default;
    wavelet_sequence(std::span<const symbol_t> symbols, symbol_t alphabet_size);

    std::size_t size() const { return size_; }
    symbol_t alphabet_size() const { return sigma_; }
    unsigned levels() const { return static_cast<unsigned>(planes_.size()); }

    symbol_t access(std::size_t pos) const;
    std::size_t rank(symbol_t a, std::size_t pos) const;
    std::size_t select(symbol_t a, std::size_t k) const;

    std::vector<symbol_t> to_vector() const;
    // Symbols separated by spaces; debug aid for fixtures.
    std::string dump() const;

    std::size_t space_bits() const;

    // space_bits() <= c1 * size * levels + c2 * size + c0 * levels + cs * sigma.
    // c1 covers the plane bits plus rank/select samples, c0 the per-plane
    // rounding and bookkeeping words, cs the per-symbol block table.
    static constexpr double space_c1 = 1.25;
    static constexpr double space_c2 = 0.0;
    static constexpr std::size_t space_c0 = 640;
    static constexpr std::size_t space_cs = 128;
    std::size_t declared_space_bound() const;

private:
    void check_symbol(symbol_t a, const char* op) const;

    std::size_t size_ = 0;
    symbol_t sigma_ = 0;
    std::vector<bit_vector> planes_;
    std::vector<std::size_t> zeros_;
    // Per symbol: first position of its block in the last level, and its count.
    std::vector<std::size_t> block_begin_;
    std::vector<std::size_t> block_count_;
};

}  // namespace tdgraph
