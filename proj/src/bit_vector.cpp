#include "tdgraph/bit_vector.hpp"

#include <array>
#include <bit>
#include <stdexcept>
#include <string>

namespace tdgraph {

namespace {

// select_table[b][k] = position of the (k+1)-th set bit of byte b.
constexpr auto select_table = [] {
    std::array<std::array<std::uint8_t, 8>, 256> t{};
    for (unsigned b = 0; b < 256; ++b) {
        unsigned k = 0;
        for (unsigned i = 0; i < 8; ++i)
            if ((b >> i) & 1u) t[b][k++] = static_cast<std::uint8_t>(i);
    }
    return t;
}();

}  // namespace

unsigned select_in_word(std::uint64_t w, unsigned k) {
    // Byte-wise prefix popcounts in one multiply.
    std::uint64_t s = w - ((w >> 1) & 0x5555555555555555ull);
    s = (s & 0x3333333333333333ull) + ((s >> 2) & 0x3333333333333333ull);
    s = (s + (s >> 4)) & 0x0f0f0f0f0f0f0f0full;
    const std::uint64_t prefix = s * 0x0101010101010101ull;  // byte i = ones in bytes 0..i
    unsigned byte = 0;
    while (byte < 7 && ((prefix >> (8 * byte)) & 0xffu) <= k) ++byte;
    const unsigned before = byte == 0 ? 0u : static_cast<unsigned>((prefix >> (8 * (byte - 1))) & 0xffu);
    return 8 * byte + select_table[(w >> (8 * byte)) & 0xffu][k - before];
}

bit_vector::bit_vector(std::vector<std::uint64_t> words, std::size_t size)
    : words_(std::move(words)), size_(size) {
    const std::size_t need = (size_ + word_bits - 1) / word_bits;
    if (words_.size() < need)
        throw std::invalid_argument("bit_vector: word buffer shorter than size");
    words_.resize(need);
    if (size_ % word_bits != 0)
        words_.back() &= (std::uint64_t{1} << (size_ % word_bits)) - 1;
    build_index();
}

bit_vector bit_vector::from_bools(const std::vector<bool>& bits) {
    std::vector<std::uint64_t> w((bits.size() + word_bits - 1) / word_bits, 0);
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) w[i / word_bits] |= std::uint64_t{1} << (i % word_bits);
    return bit_vector(std::move(w), bits.size());
}

void bit_vector::build_index() {
    const std::size_t nsb = words_.size() / superblock_words + 1;
    superblock_rank_.assign(nsb + 1, 0);
    select1_hint_.clear();
    select0_hint_.clear();
    std::size_t ones = 0, zeros = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (w % superblock_words == 0) superblock_rank_[w / superblock_words] = ones;
        const std::size_t valid =
            (w + 1 == words_.size() && size_ % word_bits) ? size_ % word_bits : word_bits;
        const auto c = static_cast<std::size_t>(std::popcount(words_[w]));
        const std::size_t sb = w / superblock_words;
        // Record the superblock of every select_sample-th one / zero.
        while (select1_hint_.size() * select_sample < ones + c &&
               select1_hint_.size() * select_sample >= ones)
            select1_hint_.push_back(static_cast<std::uint32_t>(sb));
        const std::size_t z = valid - c;
        while (select0_hint_.size() * select_sample < zeros + z &&
               select0_hint_.size() * select_sample >= zeros)
            select0_hint_.push_back(static_cast<std::uint32_t>(sb));
        ones += c;
        zeros += z;
    }
    for (std::size_t sb = (words_.size() + superblock_words - 1) / superblock_words;
         sb < superblock_rank_.size(); ++sb)
        superblock_rank_[sb] = ones;
    ones_ = ones;
}

bool bit_vector::at(std::size_t i) const {
    if (i >= size_)
        throw std::out_of_range("bit_vector::at: index " + std::to_string(i) +
                                " >= size " + std::to_string(size_));
    return (*this)[i];
}

std::size_t bit_vector::rank1(std::size_t i) const {
    if (i > size_)
        throw std::out_of_range("bit_vector::rank1: index " + std::to_string(i) +
                                " > size " + std::to_string(size_));
    const std::size_t w = i / word_bits;
    const std::size_t sb = w / superblock_words;
    std::size_t r = superblock_rank_[sb];
    for (std::size_t k = sb * superblock_words; k < w; ++k)
        r += static_cast<std::size_t>(std::popcount(words_[k]));
    if (i % word_bits)
        r += static_cast<std::size_t>(
            std::popcount(words_[w] & ((std::uint64_t{1} << (i % word_bits)) - 1)));
    return r;
}

template <bool Bit>
std::size_t bit_vector::ones_or_zeros_before_superblock(std::size_t sb) const {
    if constexpr (Bit) return superblock_rank_[sb];
    else return sb * superblock_bits - superblock_rank_[sb];
}

template <bool Bit>
std::size_t bit_vector::select_impl(std::size_t k) const {
    const std::size_t total = Bit ? ones_ : size_ - ones_;
    if (k == 0 || k > total)
        throw std::out_of_range("bit_vector::select" + std::string(Bit ? "1" : "0") +
                                ": k=" + std::to_string(k) + " outside [1, " +
                                std::to_string(total) + "]");
    const auto& hint = Bit ? select1_hint_ : select0_hint_;
    const std::size_t h = (k - 1) / select_sample;
    std::size_t lo = hint[h];
    std::size_t hi = h + 1 < hint.size() ? hint[h + 1]
                                         : (words_.size() + superblock_words - 1) / superblock_words - 1;
    // Last superblock in [lo, hi] whose prefix count is < k.
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo + 1) / 2;
        if (ones_or_zeros_before_superblock<Bit>(mid) < k) lo = mid;
        else hi = mid - 1;
    }
    std::size_t remaining = k - ones_or_zeros_before_superblock<Bit>(lo);
    for (std::size_t w = lo * superblock_words; w < words_.size(); ++w) {
        const std::uint64_t word = Bit ? words_[w] : ~words_[w];
        const auto c = static_cast<std::size_t>(std::popcount(word));
        if (remaining <= c)
            return w * word_bits + select_in_word(word, static_cast<unsigned>(remaining - 1));
        remaining -= c;
    }
    throw std::logic_error("bit_vector::select: index inconsistent");
}

std::size_t bit_vector::select1(std::size_t k) const { return select_impl<true>(k); }
std::size_t bit_vector::select0(std::size_t k) const { return select_impl<false>(k); }

std::size_t bit_vector::space_bits() const {
    return words_.size() * 64 + superblock_rank_.size() * 64 + select1_hint_.size() * 32 +
           select0_hint_.size() * 32 + 2 * 64;
}

}  // namespace tdgraph
