#include <doctest.h>

#include "oracles.hpp"
#include "tdgraph/oracle.hpp"
#include "tdgraph/representation_io.hpp"

using namespace tdgraph;

TEST_CASE("oracle on small fixtures") {
    const auto g = oracle_build(parse_representation("3 2 1\n1 4 ; 9 10\n2 3 ; 5 6\n7 12\n"));
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(0, 2));
    CHECK_FALSE(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 0));
    CHECK(oracle_build(parse_representation("1 1 1\n1 2\n")).edge_count() == 0);
    CHECK(oracle_build(parse_representation("2 1 2\n1 2 1 2\n1 2 1 2\n")).edge_count() == 1);
}

TEST_CASE("gen_random is reproducible and well formed") {
    const auto a = gen_random(50, 3, 2, 123, 1.0);
    const auto b = gen_random(50, 3, 2, 123, 1.0);
    CHECK(format_representation(a) == format_representation(b));
    CHECK(format_representation(a) != format_representation(gen_random(50, 3, 2, 124, 1.0)));
    CHECK_NOTHROW(check_encodable(a));
    for (unsigned j = 0; j < a.d; ++j) {
        std::vector<coord_t> pts;
        for (const auto& boxes : a.boxes)
            for (const auto& bx : boxes) {
                pts.push_back(bx.dims[j].lo);
                pts.push_back(bx.dims[j].hi);
            }
        std::sort(pts.begin(), pts.end());
        CHECK(std::adjacent_find(pts.begin(), pts.end()) == pts.end());
    }
}

TEST_CASE("density knob moves edge counts") {
    std::size_t sparse = 0, dense = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        sparse += oracle_build(gen_random(100, 2, 1, seed, 0.0)).edge_count();
        dense += oracle_build(gen_random(100, 2, 1, seed, 50.0)).edge_count();
    }
    CHECK(sparse < 50);
    CHECK(dense > 5 * 4950 * 7 / 10);
}

TEST_CASE("oracle_build matches the pairwise definition") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto rep = gen_random(30, 2, 3, seed, 2.0);
        const auto g = oracle_build(rep);
        for (std::size_t u = 0; u < 30; ++u)
            for (std::size_t v = 0; v < 30; ++v)
                CHECK(g.adjacent(u, v) == (u != v && scan::boxes_meet(rep, u, v)));
    }
}
