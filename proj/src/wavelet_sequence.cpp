#include "tdgraph/wavelet_sequence.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace tdgraph {

wavelet_sequence::wavelet_sequence(std::span<const symbol_t> symbols, symbol_t alphabet_size)
    : size_(symbols.size()), sigma_(alphabet_size) {
    if (alphabet_size == 0) throw std::invalid_argument("wavelet_sequence: empty alphabet");
    const unsigned nlevels =
        std::max(1u, static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(alphabet_size - 1))));
    for (symbol_t s : symbols)
        if (s >= alphabet_size)
            throw std::invalid_argument("wavelet_sequence: symbol " + std::to_string(s) +
                                        " outside alphabet of size " + std::to_string(alphabet_size));

    std::vector<symbol_t> cur(symbols.begin(), symbols.end());
    std::vector<symbol_t> next(cur.size());
    planes_.reserve(nlevels);
    zeros_.reserve(nlevels);
    for (unsigned lvl = 0; lvl < nlevels; ++lvl) {
        const unsigned shift = nlevels - 1 - lvl;
        std::vector<std::uint64_t> words((size_ + 63) / 64, 0);
        std::size_t zeros = 0;
        for (std::size_t i = 0; i < size_; ++i) {
            if ((cur[i] >> shift) & 1u) words[i / 64] |= std::uint64_t{1} << (i % 64);
            else ++zeros;
        }
        // Stable partition: zeros first, then ones.
        std::size_t z = 0, o = zeros;
        for (std::size_t i = 0; i < size_; ++i) {
            if ((cur[i] >> shift) & 1u) next[o++] = cur[i];
            else next[z++] = cur[i];
        }
        planes_.emplace_back(std::move(words), size_);
        zeros_.push_back(zeros);
        cur.swap(next);
    }

    block_begin_.resize(sigma_);
    block_count_.resize(sigma_);
    for (symbol_t a = 0; a < sigma_; ++a) {
        std::size_t begin = 0, end = size_;
        for (unsigned lvl = 0; lvl < nlevels; ++lvl) {
            const bit_vector& bv = planes_[lvl];
            if ((a >> (nlevels - 1 - lvl)) & 1u) {
                begin = zeros_[lvl] + bv.rank1(begin);
                end = zeros_[lvl] + bv.rank1(end);
            } else {
                begin = bv.rank0(begin);
                end = bv.rank0(end);
            }
        }
        block_begin_[a] = begin;
        block_count_[a] = end - begin;
    }
}

void wavelet_sequence::check_symbol(symbol_t a, const char* op) const {
    if (a >= sigma_)
        throw std::out_of_range(std::string("wavelet_sequence::") + op + ": symbol " +
                                std::to_string(a) + " outside alphabet of size " +
                                std::to_string(sigma_));
}

symbol_t wavelet_sequence::access(std::size_t pos) const {
    if (pos == 0 || pos > size_)
        throw std::out_of_range("wavelet_sequence::access: position " + std::to_string(pos) +
                                " outside [1, " + std::to_string(size_) + "]");
    std::size_t i = pos - 1;
    symbol_t sym = 0;
    for (std::size_t lvl = 0; lvl < planes_.size(); ++lvl) {
        const bit_vector& bv = planes_[lvl];
        const bool bit = bv[i];
        sym = (sym << 1) | static_cast<symbol_t>(bit);
        i = bit ? zeros_[lvl] + bv.rank1(i) : bv.rank0(i);
    }
    return sym;
}

std::size_t wavelet_sequence::rank(symbol_t a, std::size_t pos) const {
    check_symbol(a, "rank");
    if (pos > size_)
        throw std::out_of_range("wavelet_sequence::rank: position " + std::to_string(pos) +
                                " > size " + std::to_string(size_));
    const unsigned nlevels = levels();
    std::size_t begin = 0, end = pos;
    for (unsigned lvl = 0; lvl < nlevels; ++lvl) {
        const bit_vector& bv = planes_[lvl];
        if ((a >> (nlevels - 1 - lvl)) & 1u) {
            begin = zeros_[lvl] + bv.rank1(begin);
            end = zeros_[lvl] + bv.rank1(end);
        } else {
            begin = bv.rank0(begin);
            end = bv.rank0(end);
        }
    }
    return end - begin;
}

std::size_t wavelet_sequence::select(symbol_t a, std::size_t k) const {
    check_symbol(a, "select");
    const unsigned nlevels = levels();
    if (k == 0 || k > block_count_[a])
        throw std::out_of_range("wavelet_sequence::select: occurrence " + std::to_string(k) +
                                " of symbol " + std::to_string(a) + " outside [1, " +
                                std::to_string(block_count_[a]) + "]");
    std::size_t i = block_begin_[a] + k - 1;
    for (unsigned lvl = nlevels; lvl-- > 0;) {
        const bit_vector& bv = planes_[lvl];
        if ((a >> (nlevels - 1 - lvl)) & 1u) i = bv.select1(i - zeros_[lvl] + 1);
        else i = bv.select0(i + 1);
    }
    return i + 1;
}

std::vector<symbol_t> wavelet_sequence::to_vector() const {
    std::vector<symbol_t> out(size_);
    for (std::size_t i = 0; i < size_; ++i) out[i] = access(i + 1);
    return out;
}

std::string wavelet_sequence::dump() const {
    std::ostringstream os;
    for (std::size_t i = 1; i <= size_; ++i) os << (i > 1 ? " " : "") << access(i);
    return os.str();
}

std::size_t wavelet_sequence::space_bits() const {
    std::size_t bits = 2 * 64 + 2 * 64 * static_cast<std::size_t>(sigma_);
    for (const auto& p : planes_) bits += p.space_bits() + 64;
    return bits;
}

std::size_t wavelet_sequence::declared_space_bound() const {
    return static_cast<std::size_t>(space_c1 * static_cast<double>(size_) * levels() +
                                    space_c2 * static_cast<double>(size_)) +
           space_c0 * levels() + space_cs * sigma_;
}

}  // namespace tdgraph
