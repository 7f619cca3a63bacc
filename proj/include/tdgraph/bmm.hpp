#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "tdgraph/encoded_graph.hpp"
#include "tdgraph/representation.hpp"

namespace tdgraph {

class bool_matrix {
public:
    bool_matrix() = default;
    bool_matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
    void set(std::size_t r, std::size_t c, bool v = true) { bits_[r * cols_ + c] = v ? 1 : 0; }
    bool row_nonzero(std::size_t r) const;

    bool_matrix transposed() const;
    bool operator==(const bool_matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint8_t> bits_;
};

// "rows cols" then one line of 0/1 characters per row.
bool_matrix read_matrix(std::istream& in);
bool_matrix load_matrix(const std::string& path);
std::string format_matrix(const bool_matrix& m);

// Product over the Boolean semiring, by triple loop.
bool_matrix multiply_direct(const bool_matrix& a, const bool_matrix& b);

// t,1-representation whose intersection graph has u ~ v iff rows u and v of
// A share a 1. Column p with i ones contributes i mutually crossing intervals
// [s + l - 1, s + i + l - 1], then s advances by 2i.
representation build_GA(const bool_matrix& a);

// AA^T via neighbor queries on the encoded G_A. The diagonal is 1 exactly
// when the row of A is nonzero.
bool_matrix multiply_via_neighbors(const bool_matrix& a, const encoded_graph& ga);
bool_matrix multiply_via_neighbors(const bool_matrix& a);

// BC for B (n x t) and C (t x n') by stacking B over C^T.
bool_matrix multiply_BC(const bool_matrix& b, const bool_matrix& c);

}  // namespace tdgraph
