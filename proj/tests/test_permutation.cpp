#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "tdgraph/permutation.hpp"

using tdgraph::succinct_permutation;

TEST_CASE("succinct_permutation inverse agrees with an explicit inverse") {
    std::mt19937_64 rng(5);
    for (std::size_t n : {1u, 2u, 3u, 10u, 100u, 1000u, 4096u}) {
        for (std::size_t spacing : {0u, 1u, 2u, 5u, 64u}) {
            std::vector<std::uint64_t> p(n);
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            std::vector<std::uint64_t> inv(n);
            for (std::size_t i = 0; i < n; ++i) inv[p[i]] = i;
            const succinct_permutation sp(p, spacing);
            const std::size_t b = sp.spacing();
            CHECK(b == (spacing ? spacing : succinct_permutation::default_spacing(n)));
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t steps = 0;
                ok = ok && sp.apply(i) == p[i];
                ok = ok && sp.invert(i, &steps) == inv[i];
                ok = ok && steps <= b + 1;
                ok = ok && sp.invert(sp.apply(i)) == i;
            }
            CHECK(ok);
        }
    }
}

TEST_CASE("succinct_permutation on a single long cycle") {
    const std::size_t n = 1000;
    std::vector<std::uint64_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = (i + 1) % n;
    const succinct_permutation sp(p, 7);
    for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t steps = 0;
        CHECK(sp.invert(j, &steps) == (j + n - 1) % n);
        CHECK(steps <= 8);
    }
}

TEST_CASE("default spacing is ceil(log2 n)") {
    CHECK(succinct_permutation::default_spacing(1) == 1);
    CHECK(succinct_permutation::default_spacing(2) == 1);
    CHECK(succinct_permutation::default_spacing(3) == 2);
    CHECK(succinct_permutation::default_spacing(1024) == 10);
    CHECK(succinct_permutation::default_spacing(1025) == 11);
}

TEST_CASE("succinct_permutation rejects non-permutations") {
    CHECK_THROWS_AS(succinct_permutation(std::vector<std::uint64_t>{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(succinct_permutation(std::vector<std::uint64_t>{0, 2}), std::invalid_argument);
    const succinct_permutation id(std::vector<std::uint64_t>{0, 1, 2});
    CHECK(id.is_identity());
    CHECK_THROWS_AS(id.apply(3), std::out_of_range);
    CHECK_THROWS_AS(id.invert(3), std::out_of_range);
}

TEST_CASE("two-cycle example") {
    // (2,1,3) in 1-based notation.
    const succinct_permutation p(std::vector<std::uint64_t>{1, 0, 2});
    CHECK(p.invert(1) == 0);
    CHECK(p.invert(0) == 1);
    CHECK(p.invert(2) == 2);
    CHECK_FALSE(p.is_identity());
}
