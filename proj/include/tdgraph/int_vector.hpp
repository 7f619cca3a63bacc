#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace tdgraph {

// Fixed-width packed unsigned integers.
class int_vector {
public:
    int_vector() = default;
    int_vector(std::size_t size, unsigned width);

    // Smallest width able to hold every value in [0, max_value].
    static unsigned width_for(std::uint64_t max_value);

    std::size_t size() const { return size_; }
    unsigned width() const { return width_; }

    std::uint64_t operator[](std::size_t i) const {
        if (width_ == 0) return 0;
        const std::size_t bit = i * width_;
        const std::size_t w = bit / 64, off = bit % 64;
        std::uint64_t v = words_[w] >> off;
        if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
        return width_ == 64 ? v : v & ((std::uint64_t{1} << width_) - 1);
    }
    std::uint64_t at(std::size_t i) const;
    void set(std::size_t i, std::uint64_t value);

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::size_t space_bits() const { return words_.size() * 64 + 64 + 8; }

    static int_vector from_words(std::vector<std::uint64_t> words, std::size_t size,
                                 unsigned width);

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
    unsigned width_ = 0;
};

}  // namespace tdgraph
