#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tdgraph/wavelet_sequence.hpp"

using tdgraph::symbol_t;
using tdgraph::wavelet_sequence;

TEST_CASE("wavelet_sequence on the worked example") {
    const std::vector<symbol_t> s{0, 0, 1, 1, 2, 3, 0, 2, 3, 1, 2, 3};
    const wavelet_sequence ws(s, 4);
    CHECK(ws.rank(0, 7) == 3);
    CHECK(ws.select(1, 2) == 4);
    CHECK(ws.access(5) == 2);
    CHECK(ws.to_vector() == s);
    CHECK(ws.dump() == "0 0 1 1 2 3 0 2 3 1 2 3");
}

TEST_CASE("wavelet_sequence matches linear scans") {
    std::mt19937_64 rng(11);
    for (symbol_t sigma : {1u, 2u, 3u, 4u, 7u, 16u, 33u, 64u}) {
        for (std::size_t len : {1u, 17u, 300u, 4096u}) {
            std::vector<symbol_t> s(len);
            for (auto& x : s) x = static_cast<symbol_t>(rng() % sigma);
            const wavelet_sequence ws(s, sigma);
            CAPTURE(sigma);
            CAPTURE(len);
            std::vector<std::size_t> seen(sigma, 0);
            bool ok = true;
            for (std::size_t i = 1; i <= len; ++i) {
                ok = ok && ws.access(i) == s[i - 1];
                ++seen[s[i - 1]];
                // Every symbol, not only the one at i.
                if (len <= 300 || i % 64 == 0)
                    for (symbol_t a = 0; a < sigma; ++a) ok = ok && ws.rank(a, i) == scan::rank(s, a, i);
                ok = ok && ws.rank(s[i - 1], i) == seen[s[i - 1]];
                ok = ok && ws.select(s[i - 1], seen[s[i - 1]]) == i;
            }
            CHECK(ok);
            std::size_t total = 0;
            for (symbol_t a = 0; a < sigma; ++a) total += ws.rank(a, len);
            CHECK(total == len);
            CHECK(ws.space_bits() <= ws.declared_space_bound());
        }
    }
}

TEST_CASE("wavelet_sequence errors") {
    const std::vector<symbol_t> s{0, 1, 1};
    const wavelet_sequence ws(s, 2);
    CHECK(ws.rank(1, 0) == 0);
    CHECK_THROWS_AS(ws.access(0), std::out_of_range);
    CHECK_THROWS_AS(ws.access(4), std::out_of_range);
    CHECK_THROWS_AS(ws.select(0, 2), std::out_of_range);
    CHECK_THROWS_AS(ws.select(0, 0), std::out_of_range);
    CHECK_THROWS(ws.rank(2, 1));
    CHECK_THROWS(wavelet_sequence(std::vector<symbol_t>{0, 5}, 4));
}
