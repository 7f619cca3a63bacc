#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tdgraph/oracle.hpp"
#include "tdgraph/query_engine.hpp"
#include "tdgraph/representation_io.hpp"

using namespace tdgraph;

namespace {

std::vector<vertex_t> expected_neighbors(const representation& rep, const encoded_graph& g, vertex_t u) {
    std::vector<vertex_t> out;
    const std::size_t x = g.vertex_order()[u];
    for (vertex_t v = 0; v < g.n(); ++v)
        if (v != u && scan::boxes_meet(rep, x, g.vertex_order()[v])) out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("queries on the worked example") {
    const auto rep = parse_representation("3 2 1\n1 4 ; 9 10\n2 3 ; 5 6\n7 12\n");
    const auto g = encode(normalize(rep));
    query_engine e(g);
    CHECK(e.adj(0, 1));
    CHECK(e.adj(0, 2));
    CHECK_FALSE(e.adj(1, 2));
    CHECK(e.adj(1, 1));
    CHECK_FALSE(e.adj(1, 1, true));
    CHECK(e.neighbor_naive(0) == std::vector<vertex_t>{1, 2});
    CHECK(e.neighbor_fast(0) == std::vector<vertex_t>{1, 2});
    CHECK(e.deg(0) == 2);
    CHECK(e.deg(1) == 1);
    CHECK_THROWS_AS(e.adj(0, 3), std::out_of_range);
}

TEST_CASE("isolated and box-less vertices") {
    const auto rep = parse_representation("3 2 1\n1 2\n\n5 6 ; 8 9\n");
    const auto g = encode(normalize(rep));
    query_engine e(g);
    const vertex_t empty = *g.find_label(2);
    CHECK(e.neighbor_naive(empty).empty());
    CHECK(e.neighbor_fast(empty).empty());
    CHECK(e.deg(empty) == 0);
    CHECK_FALSE(e.adj(empty, empty));
    CHECK(e.deg(*g.find_label(1)) == 0);
}

TEST_CASE("neighbor_fast needs d = 1") {
    const auto g = encode(normalize(gen_random(5, 2, 2, 1)));
    query_engine e(g);
    CHECK_THROWS_AS(e.neighbor_fast(0), unsupported_configuration);
    CHECK_NOTHROW(e.neighbor(0));
}

TEST_CASE("queries match the definition on random instances") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        const unsigned t = 1 + rng() % 3, d = 1 + rng() % 3;
        const double density = static_cast<double>(rng() % 7) * 0.5;
        const auto rep = gen_random(n, t, d, rng(), density);
        const auto g = encode(normalize(rep));
        query_engine e(g);
        bool adj_ok = true, sym = true, bound = true, nb_ok = true, counters = true;
        for (vertex_t u = 0; u < n; ++u) {
            for (vertex_t v = 0; v < n; ++v) {
                if (u == v) continue;
                const bool a = e.adj(u, v);
                bound = bound && e.stats().pair_checks <= 2 * t;
                adj_ok = adj_ok && a == scan::boxes_meet(rep, g.vertex_order()[u], g.vertex_order()[v]);
                sym = sym && a == e.adj(v, u);
            }
            const auto want = expected_neighbors(rep, g, u);
            nb_ok = nb_ok && e.neighbor_naive(u) == want;
            if (d == 1) {
                nb_ok = nb_ok && e.neighbor_fast(u) == want;
                const auto& st = e.stats();
                counters = counters && st.rmq_nodes <= 2 * st.reports + t * t;
                counters = counters && st.perm_inv_steps <= (g.shortcut_spacing() + 1) * st.reports;
                counters = counters && st.reports <= t * t * (want.size() + t);
            }
            nb_ok = nb_ok && e.deg(u) == want.size();
        }
        CAPTURE(n);
        CAPTURE(t);
        CAPTURE(d);
        CHECK(adj_ok);
        CHECK(sym);
        CHECK(bound);
        CHECK(nb_ok);
        CHECK(counters);
    }
}

TEST_CASE("stored degrees agree with neighbor counts") {
    const auto rep = gen_random(100, 3, 1, 77);
    encode_options opt;
    opt.store_degrees = true;
    const auto g = encode(normalize(rep), opt);
    const auto plain = encode(normalize(rep));
    query_engine a(g), b(plain);
    for (vertex_t v = 0; v < 100; ++v) CHECK(a.deg(v) == b.deg(v));
}
