#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tdgraph/interval_reporter.hpp"

using tdgraph::interval;
using tdgraph::interval_reporter;

TEST_CASE("interval_reporter fixtures") {
    const std::vector<interval> a{{1, 20}, {5, 6}, {8, 10}};
    const interval_reporter ra(a);
    std::size_t nodes = 0;
    auto got = ra.report_intersecting({2, 7}, &nodes);
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::size_t>{1, 3});
    CHECK(nodes <= 2 * got.size() + 1);

    const std::vector<interval> b{{1, 4}, {2, 3}, {7, 12}};
    CHECK(interval_reporter(b).report_intersecting({9, 10}) == std::vector<std::size_t>{3});
    CHECK(interval_reporter(b).report_intersecting({13, 14}).empty());
    CHECK(interval_reporter(b).report_intersecting({5, 6}).empty());
}

TEST_CASE("interval_reporter matches brute force") {
    std::mt19937_64 rng(19);
    for (std::size_t m : {1u, 2u, 5u, 33u, 200u, 512u}) {
        for (int rep = 0; rep < 10; ++rep) {
            const auto ivs = scan::random_intervals(m, rng);
            const interval_reporter r(ivs);
            bool ok = true, bound = true;
            for (int q = 0; q < 60; ++q) {
                // Query endpoints may coincide with set endpoints.
                tdgraph::coord_t a = static_cast<tdgraph::coord_t>(rng() % (2 * m + 2));
                tdgraph::coord_t b = static_cast<tdgraph::coord_t>(rng() % (2 * m + 2));
                if (a > b) std::swap(a, b);
                const interval query{a, b};
                std::size_t nodes = 0;
                auto got = r.report_intersecting(query, &nodes);
                std::sort(got.begin(), got.end());
                ok = ok && got == scan::intersecting_right_ranks(ivs, query);
                bound = bound && nodes <= 2 * got.size() + 1;
            }
            CAPTURE(m);
            CHECK(ok);
            CHECK(bound);
        }
    }
}

TEST_CASE("interval_reporter from ranks") {
    // L by right rank: interval with right rank k+1 has left rank L[k].
    const std::vector<std::uint64_t> L{1, 0, 2};
    const auto r = interval_reporter::from_ranks(L);
    std::vector<std::size_t> got;
    r.report(0, 1, [&](std::size_t k) { got.push_back(k); });
    CHECK(got == std::vector<std::size_t>{2});
    got.clear();
    r.report(1, 3, [&](std::size_t k) { got.push_back(k); });
    std::sort(got.begin(), got.end());
    CHECK(got == std::vector<std::size_t>{2, 3});
    CHECK_THROWS(interval_reporter::from_ranks(std::vector<std::uint64_t>{0, 0}));
}
