#include "tdgraph/int_vector.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace tdgraph {

int_vector::int_vector(std::size_t size, unsigned width) : size_(size), width_(width) {
    if (width > 64) throw std::invalid_argument("int_vector: width > 64");
    words_.assign((size * width + 63) / 64, 0);
}

unsigned int_vector::width_for(std::uint64_t max_value) {
    return static_cast<unsigned>(std::bit_width(max_value));
}

std::uint64_t int_vector::at(std::size_t i) const {
    if (i >= size_)
        throw std::out_of_range("int_vector::at: index " + std::to_string(i) + " >= size " +
                                std::to_string(size_));
    return (*this)[i];
}

void int_vector::set(std::size_t i, std::uint64_t value) {
    if (i >= size_) throw std::out_of_range("int_vector::set: index out of range");
    if (width_ < 64 && (value >> width_) != 0)
        throw std::invalid_argument("int_vector::set: value " + std::to_string(value) +
                                    " does not fit in " + std::to_string(width_) + " bits");
    if (width_ == 0) return;
    const std::size_t bit = i * width_;
    const std::size_t w = bit / 64, off = bit % 64;
    const std::uint64_t mask = width_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width_) - 1;
    words_[w] = (words_[w] & ~(mask << off)) | (value << off);
    if (off + width_ > 64) {
        const unsigned spill = static_cast<unsigned>(off + width_ - 64);
        const std::uint64_t hi_mask = (std::uint64_t{1} << spill) - 1;
        words_[w + 1] = (words_[w + 1] & ~hi_mask) | (value >> (64 - off));
    }
}

int_vector int_vector::from_words(std::vector<std::uint64_t> words, std::size_t size,
                                  unsigned width) {
    int_vector v;
    if (width > 64) throw std::invalid_argument("int_vector: width > 64");
    if (words.size() != (size * width + 63) / 64)
        throw std::invalid_argument("int_vector: word count does not match size and width");
    v.words_ = std::move(words);
    v.size_ = size;
    v.width_ = width;
    return v;
}

}  // namespace tdgraph
