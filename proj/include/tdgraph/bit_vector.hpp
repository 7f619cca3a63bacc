#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tdgraph {

// Static bit vector with constant-time rank and sampled select.
//
// Layout: raw 64-bit words, one cumulative popcount per 512-bit superblock,
// and for every 512th one (resp. zero) the superblock that holds it.
// rank1(i) counts ones in [0, i); select1(k) returns the 0-based position
// of the k-th one, k >= 1.
class bit_vector {
public:
    static constexpr std::size_t word_bits = 64;
    static constexpr std::size_t superblock_words = 8;
    static constexpr std::size_t superblock_bits = word_bits * superblock_words;
    static constexpr std::size_t select_sample = 512;

    bit_vector() = default;
    bit_vector(std::vector<std::uint64_t> words, std::size_t size);

    static bit_vector from_bools(const std::vector<bool>& bits);

    std::size_t size() const { return size_; }
    bool operator[](std::size_t i) const {
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }
    bool at(std::size_t i) const;

    std::size_t rank1(std::size_t i) const;
    std::size_t rank0(std::size_t i) const { return i - rank1(i); }
    std::size_t rank(bool bit, std::size_t i) const { return bit ? rank1(i) : rank0(i); }

    std::size_t select1(std::size_t k) const;
    std::size_t select0(std::size_t k) const;

    std::size_t count_ones() const { return ones_; }
    const std::vector<std::uint64_t>& words() const { return words_; }

    // Allocated payload plus index, in bits.
    std::size_t space_bits() const;

private:
    void build_index();
    template <bool Bit>
    std::size_t select_impl(std::size_t k) const;
    template <bool Bit>
    std::size_t ones_or_zeros_before_superblock(std::size_t sb) const;

    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
    std::size_t ones_ = 0;
    std::vector<std::uint64_t> superblock_rank_;
    std::vector<std::uint32_t> select1_hint_;
    std::vector<std::uint32_t> select0_hint_;
};

// Position (0-based) of the k-th set bit of w, k counted from 0.
unsigned select_in_word(std::uint64_t w, unsigned k);

}  // namespace tdgraph
