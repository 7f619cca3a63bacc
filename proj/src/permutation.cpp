#include "tdgraph/permutation.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace tdgraph {

std::size_t succinct_permutation::default_spacing(std::size_t n) {
    if (n <= 2) return 1;
    return static_cast<std::size_t>(std::bit_width(static_cast<std::uint64_t>(n - 1)));
}

succinct_permutation::succinct_permutation(std::span<const std::uint64_t> values,
                                           std::size_t spacing)
    : spacing_(spacing == 0 ? default_spacing(values.size()) : spacing) {
    const std::size_t n = values.size();
    const unsigned width = int_vector::width_for(n > 0 ? n - 1 : 0);
    forward_ = int_vector(n, width);
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i] >= n || seen[values[i]])
            throw std::invalid_argument("succinct_permutation: not a bijection on [0, " +
                                        std::to_string(n) + ") at index " + std::to_string(i));
        seen[values[i]] = true;
        forward_.set(i, values[i]);
    }

    std::vector<bool> mark(n, false);
    std::vector<bool> visited(n, false);
    // back pointer per marked element, indexed by element id for now
    std::vector<std::uint64_t> back_of(n, 0);
    std::vector<std::size_t> cycle;
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start]) continue;
        cycle.clear();
        for (std::size_t x = start; !visited[x]; x = values[x]) {
            visited[x] = true;
            cycle.push_back(x);
        }
        if (cycle.size() <= spacing_) continue;
        const std::size_t last = (cycle.size() - 1) / spacing_ * spacing_;
        for (std::size_t idx = 0; idx < cycle.size(); idx += spacing_) {
            mark[cycle[idx]] = true;
            back_of[cycle[idx]] = cycle[idx == 0 ? last : idx - spacing_];
        }
    }
    marked_ = bit_vector::from_bools(mark);
    back_ = int_vector(marked_.count_ones(), width);
    for (std::size_t i = 0, k = 0; i < n; ++i)
        if (mark[i]) back_.set(k++, back_of[i]);
}

std::uint64_t succinct_permutation::apply(std::size_t i) const {
    if (i >= size())
        throw std::out_of_range("succinct_permutation::apply: index " + std::to_string(i) +
                                " >= size " + std::to_string(size()));
    return forward_[i];
}

std::uint64_t succinct_permutation::invert(std::size_t j, std::uint64_t* steps) const {
    if (j >= size())
        throw std::out_of_range("succinct_permutation::invert: value " + std::to_string(j) +
                                " >= size " + std::to_string(size()));
    std::uint64_t taken = 0;
    bool jumped = false;
    std::size_t i = j;
    for (;;) {
        if (!jumped && marked_[i]) {
            i = back_[marked_.rank1(i)];
            jumped = true;
            ++taken;
            continue;
        }
        ++taken;
        const std::size_t next = forward_[i];
        if (next == j) break;
        i = next;
    }
    if (steps) *steps += taken;
    return i;
}

bool succinct_permutation::is_identity() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (forward_[i] != i) return false;
    return true;
}

std::size_t succinct_permutation::space_bits() const {
    return forward_.space_bits() + marked_.space_bits() + back_.space_bits() + 64;
}

}  // namespace tdgraph
