#include <doctest.h>

#include <sstream>

#include "tdgraph/lower_bound.hpp"
#include "tdgraph/oracle.hpp"

using namespace tdgraph;

namespace {

lower_bound_spec spec_from(const std::string& text) {
    std::istringstream in(text);
    return parse_spec(in);
}

}  // namespace

TEST_CASE("basis and dependent intervals for d = 1") {
    const auto inst = gen_lowerbound(spec_from("3 2 1 1\n1 2\n"));
    const auto& rep = inst.rep;
    CHECK(rep.boxes[0][0].dims[0] == interval{1, 2});
    CHECK(rep.boxes[1][0].dims[0] == interval{3, 4});
    CHECK(rep.boxes[2][0].dims[0] == interval{1, 4});
    CHECK(inst.color == std::vector<unsigned>{1, 2, 0});
    CHECK(rep.labels == std::vector<label_t>{1, 2, 3});
    const auto g = oracle_build(rep);
    CHECK(g.adjacent(2, 0));
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 1));

    const auto g11 = oracle_build(gen_lowerbound(spec_from("3 2 1 1\n1 1\n")).rep);
    CHECK(g11.adjacent(2, 0));
    CHECK_FALSE(g11.adjacent(2, 1));
}

TEST_CASE("d = 2 basis vertices form a complete bipartite graph") {
    const auto inst = gen_lowerbound(spec_from("5 2 2 1\n1 2 3 3\n"));
    const auto g = oracle_build(inst.rep);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 2; b < 4; ++b) CHECK(g.adjacent(a, b));
    CHECK_FALSE(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(2, 3));
    // Axis 1 covers colors 1..2, axis 2 only color 3.
    CHECK(g.adjacent(4, 0));
    CHECK(g.adjacent(4, 1));
    CHECK(g.adjacent(4, 2));
    CHECK_FALSE(g.adjacent(4, 3));
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(spec_from("3 2 1 1\n2 1\n"), std::invalid_argument);     // e > e'
    CHECK_THROWS_AS(spec_from("3 2 1 1\n1 3\n"), std::invalid_argument);     // outside axis range
    CHECK_THROWS_AS(spec_from("3 2 1 1\n"), std::invalid_argument);          // missing dependent
    CHECK_THROWS_AS(spec_from("1 2 1 1\n"), std::invalid_argument);          // n < dm
    CHECK_THROWS_AS(spec_from("5 2 2 1\n1 2 1 2\n"), std::invalid_argument); // axis 2 uses colors 3..4
    CHECK_THROWS_AS(spec_from("3 2 1 1\n1 x\n"), std::invalid_argument);
}

TEST_CASE("enumeration counts and profiles") {
    auto r = enumerate_lowerbound_family(3, 2, 1, 1);
    CHECK(r.specs == 3);
    CHECK(r.expected == 3);
    CHECK(r.distinct == 3);
    CHECK(r.all_distinct());

    r = enumerate_lowerbound_family(2, 1, 1, 1);
    CHECK(r.specs == 1);
    CHECK(r.all_distinct());

    // Two boxes per dependent: the 9 specs collapse to 3 colored profiles.
    r = enumerate_lowerbound_family(3, 2, 1, 2);
    CHECK(r.specs == 9);
    CHECK(r.expected == 9);
    CHECK(r.distinct == 3);
    CHECK_FALSE(r.all_distinct());

    r = enumerate_lowerbound_family(6, 2, 2, 1);
    CHECK(r.specs == 81);
    CHECK(r.distinct == 81);
}

TEST_CASE("enumeration budget") {
    CHECK(lowerbound_family_size(5, 3, 1, 2) == 6u * 6 * 6 * 6);
    CHECK(lowerbound_family_size(100, 10, 3, 8) == UINT64_MAX);
    try {
        enumerate_lowerbound_family(5, 3, 1, 2, 100);
        FAIL("expected budget_exceeded");
    } catch (const budget_exceeded& e) {
        CHECK(e.required() == 1296);
    }
}
