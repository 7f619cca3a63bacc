#include <doctest.h>

#include <random>
#include <sstream>

#include "tdgraph/bmm.hpp"
#include "tdgraph/oracle.hpp"

using namespace tdgraph;

namespace {

bool_matrix random_matrix(std::size_t r, std::size_t c, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    bool_matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, coin(rng));
    return m;
}

// Triple loop kept here so the test does not lean on the library product.
bool_matrix product(const bool_matrix& a, const bool_matrix& b) {
    bool_matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            bool v = false;
            for (std::size_t k = 0; k < a.cols(); ++k) v = v || (a.get(i, k) && b.get(k, j));
            out.set(i, j, v);
        }
    return out;
}

bool_matrix identity(std::size_t n) {
    bool_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

}  // namespace

TEST_CASE("build_GA fixtures") {
    const auto rep = build_GA(identity(2));
    CHECK(rep.boxes[0][0].dims[0] == interval{1, 2});
    CHECK(rep.boxes[1][0].dims[0] == interval{3, 4});
    CHECK(oracle_build(rep).edge_count() == 0);

    bool_matrix col(2, 1);
    col.set(0, 0);
    col.set(1, 0);
    const auto rc = build_GA(col);
    CHECK(rc.boxes[0][0].dims[0] == interval{1, 3});
    CHECK(rc.boxes[1][0].dims[0] == interval{2, 4});
    CHECK(oracle_build(rc).edge_count() == 1);
}

TEST_CASE("build_GA column structure on a 4x3 matrix") {
    std::istringstream in("4 3\n101\n110\n011\n100\n");
    const auto a = read_matrix(in);
    const auto rep = build_GA(a);
    CHECK(rep.t == 3);
    std::vector<std::size_t> per_column(3, 0);
    // Columns occupy disjoint coordinate ranges: [1,6], [7,10], [11,14].
    for (const auto& boxes : rep.boxes)
        for (const auto& bx : boxes) {
            const auto lo = bx.dims[0].lo;
            ++per_column[lo <= 6 ? 0 : lo <= 10 ? 1 : 2];
        }
    CHECK(per_column == std::vector<std::size_t>{3, 2, 2});
    const auto g = oracle_build(rep);
    const auto aat = product(a, a.transposed());
    for (std::size_t u = 0; u < 4; ++u)
        for (std::size_t v = 0; v < 4; ++v)
            if (u != v) CHECK(g.adjacent(u, v) == aat.get(u, v));
}

TEST_CASE("multiply_via_neighbors equals A A^T") {
    CHECK(multiply_via_neighbors(identity(5)) == identity(5));
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + rng() % 40, t = 1 + rng() % 12;
        const double p = static_cast<double>(rng() % 5) / 8.0;
        const auto a = random_matrix(n, t, p, rng);
        CHECK(multiply_via_neighbors(a) == product(a, a.transposed()));
    }
}

TEST_CASE("zero rows keep a zero diagonal") {
    bool_matrix a(3, 2);
    a.set(0, 0);
    a.set(2, 0);
    const auto m = multiply_via_neighbors(a);
    CHECK_FALSE(m.get(1, 1));
    CHECK(m.get(0, 2));
    CHECK(m == product(a, a.transposed()));
    CHECK(multiply_via_neighbors(bool_matrix(3, 2)) == bool_matrix(3, 3));
}

TEST_CASE("multiply_BC") {
    CHECK(multiply_BC(identity(4), identity(4)) == identity(4));
    CHECK(multiply_BC(bool_matrix(3, 2), bool_matrix(2, 3)) == bool_matrix(3, 3));
    CHECK_THROWS_AS(multiply_BC(bool_matrix(3, 2), bool_matrix(3, 3)), std::invalid_argument);
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + rng() % 20, t = 1 + rng() % 10, n2 = 1 + rng() % 20;
        const auto b = random_matrix(n, t, 0.3, rng);
        const auto c = random_matrix(t, n2, 0.3, rng);
        CHECK(multiply_BC(b, c) == product(b, c));
    }
}

TEST_CASE("matrix text format") {
    std::istringstream in("2 3\n101\n010\n");
    const auto m = read_matrix(in);
    CHECK(format_matrix(m) == "2 3\n101\n010\n");
    std::istringstream bad("2 3\n101\n01\n");
    CHECK_THROWS_AS(read_matrix(bad), std::invalid_argument);
    std::istringstream bad2("2 3\n101\n012\n");
    CHECK_THROWS_AS(read_matrix(bad2), std::invalid_argument);
}
