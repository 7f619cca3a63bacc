#include "tdgraph/succinct_rmq.hpp"

#include <array>
#include <bit>
#include <limits>
#include <stdexcept>
#include <string>

namespace tdgraph {

namespace {

// Excess profile of one byte of parentheses, LSB first: net excess, the
// minimum prefix excess after each of the 8 characters, and the rightmost
// character offset attaining it.
struct byte_profile {
    std::int8_t delta;
    std::int8_t min;
    std::uint8_t pos;
};

constexpr std::array<byte_profile, 256> make_byte_profiles() {
    std::array<byte_profile, 256> t{};
    for (unsigned b = 0; b < 256; ++b) {
        int cur = 0, best = 127;
        unsigned best_pos = 0;
        for (unsigned k = 0; k < 8; ++k) {
            cur += ((b >> k) & 1u) ? 1 : -1;
            if (cur <= best) {
                best = cur;
                best_pos = k;
            }
        }
        t[b] = {static_cast<std::int8_t>(cur), static_cast<std::int8_t>(best),
                static_cast<std::uint8_t>(best_pos)};
    }
    return t;
}

constexpr std::array<byte_profile, 256> byte_profiles = make_byte_profiles();

}  // namespace

succinct_rmq::succinct_rmq(std::span<const std::uint64_t> values) : size_(values.size()) {
    std::vector<std::uint64_t> words((2 * size_ + 63) / 64, 0);
    std::size_t pos = 0;
    auto emit = [&](bool open) {
        if (open) words[pos / 64] |= std::uint64_t{1} << (pos % 64);
        ++pos;
    };
    std::vector<std::uint64_t> stack;
    stack.reserve(64);
    for (std::size_t i = 0; i < size_; ++i) {
        while (!stack.empty() && stack.back() > values[i]) {
            stack.pop_back();
            emit(false);
        }
        stack.push_back(values[i]);
        emit(true);
    }
    for (std::size_t k = 0; k < stack.size(); ++k) emit(false);
    bp_ = bit_vector(std::move(words), 2 * size_);

    const std::size_t nbits = bp_.size();
    const std::size_t nblocks = (nbits + block_bits - 1) / block_bits;
    block_rel_min_.resize(nblocks);
    for (std::size_t b = 0; b < nblocks; ++b) {
        const std::size_t from = b * block_bits;
        const std::size_t to = std::min(nbits, from + block_bits) - 1;
        block_rel_min_[b] = static_cast<std::int16_t>(scan(from, to).value - excess_before(from));
    }

    if (nblocks > 1) {
        const unsigned width = int_vector::width_for(nblocks - 1);
        for (std::size_t span_len = 2; span_len <= nblocks; span_len *= 2) {
            int_vector level(nblocks - span_len + 1, width);
            const std::size_t half = span_len / 2;
            for (std::size_t b = 0; b + span_len <= nblocks; ++b) {
                std::size_t left, right;
                if (sparse_.empty()) {
                    left = b;
                    right = b + 1;
                } else {
                    left = sparse_.back()[b];
                    right = sparse_.back()[b + half];
                }
                level.set(b, block_min(right) <= block_min(left) ? right : left);
            }
            sparse_.push_back(std::move(level));
        }
    }
}

std::int64_t succinct_rmq::excess_before(std::size_t pos) const {
    return 2 * static_cast<std::int64_t>(bp_.rank1(pos)) - static_cast<std::int64_t>(pos);
}

std::int64_t succinct_rmq::block_min(std::size_t block) const {
    return excess_before(block * block_bits) + block_rel_min_[block];
}

succinct_rmq::min_pos succinct_rmq::scan(std::size_t from, std::size_t to) const {
    std::int64_t cur = excess_before(from);
    min_pos best{std::numeric_limits<std::int64_t>::max(), from};
    const auto& words = bp_.words();
    std::size_t x = from;
    while (x <= to) {
        if (x % 8 == 0 && x + 7 <= to) {
            const auto byte = static_cast<unsigned>((words[x / 64] >> (x % 64)) & 0xffu);
            const byte_profile& p = byte_profiles[byte];
            if (cur + p.min <= best.value) best = {cur + p.min, x + p.pos};
            cur += p.delta;
            x += 8;
        } else {
            cur += bp_[x] ? 1 : -1;
            if (cur <= best.value) best = {cur, x};
            ++x;
        }
    }
    return best;
}

std::size_t succinct_rmq::block_table_query(std::size_t b0, std::size_t b1) const {
    if (b0 == b1) return b0;
    const std::size_t len = b1 - b0 + 1;
    const unsigned k = static_cast<unsigned>(std::bit_width(len)) - 1;  // 2^k <= len
    const int_vector& level = sparse_[k - 1];
    const std::size_t left = level[b0];
    const std::size_t right = level[b1 + 1 - (std::size_t{1} << k)];
    return block_min(right) <= block_min(left) ? right : left;
}

succinct_rmq::min_pos succinct_rmq::rightmost_min_excess(std::size_t from, std::size_t to) const {
    const std::size_t bf = from / block_bits, bt = to / block_bits;
    if (bt <= bf + 1) return scan(from, to);
    min_pos best = scan(from, (bf + 1) * block_bits - 1);
    const std::size_t mid = block_table_query(bf + 1, bt - 1);
    if (block_min(mid) <= best.value)
        best = scan(mid * block_bits, (mid + 1) * block_bits - 1);
    const min_pos right = scan(bt * block_bits, to);
    if (right.value <= best.value) best = right;
    return best;
}

std::size_t succinct_rmq::query(std::size_t l, std::size_t r) const {
    if (l > r || r >= size_)
        throw std::out_of_range("succinct_rmq::query: range [" + std::to_string(l) + ", " +
                                std::to_string(r) + "] invalid for size " + std::to_string(size_));
    if (l == r) return l;
    const std::size_t open_l = bp_.select1(l + 1);
    const std::size_t open_r = bp_.select1(r + 1);
    const min_pos m = rightmost_min_excess(open_l, open_r);
    if (m.value >= excess_at(open_l)) return l;
    // m.pos is the ')' right before the '(' of the minimum.
    return bp_.rank1(m.pos + 1);
}

std::size_t succinct_rmq::space_bits() const {
    std::size_t bits = bp_.space_bits() + block_rel_min_.size() * 16 + 64;
    for (const auto& level : sparse_) bits += level.space_bits();
    return bits;
}

}  // namespace tdgraph
