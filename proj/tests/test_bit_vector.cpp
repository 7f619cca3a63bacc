#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tdgraph/bit_vector.hpp"
#include "tdgraph/int_vector.hpp"

using tdgraph::bit_vector;

namespace {

void check_against_scan(const std::vector<bool>& bits) {
    const bit_vector bv = bit_vector::from_bools(bits);
    std::vector<int> ref(bits.begin(), bits.end());
    REQUIRE(bv.size() == bits.size());
    std::size_t ones = 0;
    for (std::size_t i = 0; i <= bits.size(); ++i) {
        CHECK(bv.rank1(i) == ones);
        CHECK(bv.rank0(i) == i - ones);
        if (i < bits.size()) {
            CHECK(bv[i] == bits[i]);
            ones += bits[i];
        }
    }
    CHECK(bv.count_ones() == ones);
    for (std::size_t k = 1; k <= ones; ++k) CHECK(bv.select1(k) == *scan::select(ref, 1, k));
    for (std::size_t k = 1; k <= bits.size() - ones; ++k) CHECK(bv.select0(k) == *scan::select(ref, 0, k));
    CHECK_THROWS_AS(bv.select1(ones + 1), std::out_of_range);
    CHECK_THROWS_AS(bv.select0(0), std::out_of_range);
}

}  // namespace

TEST_CASE("bit_vector rank/select match a linear scan") {
    std::mt19937_64 rng(7);
    for (std::size_t len : {0u, 1u, 63u, 64u, 65u, 511u, 512u, 513u, 2000u, 4096u}) {
        for (double p : {0.0, 0.02, 0.5, 0.98, 1.0}) {
            std::bernoulli_distribution coin(p);
            std::vector<bool> bits(len);
            for (std::size_t i = 0; i < len; ++i) bits[i] = coin(rng);
            CAPTURE(len);
            CAPTURE(p);
            check_against_scan(bits);
        }
    }
}

TEST_CASE("bit_vector select hints span many samples") {
    std::vector<bool> bits(70000);
    for (std::size_t i = 0; i < bits.size(); i += 3) bits[i] = true;
    const bit_vector bv = bit_vector::from_bools(bits);
    for (std::size_t k = 1; k <= bv.count_ones(); k += 97) CHECK(bv.select1(k) == 3 * (k - 1));
    for (std::size_t k = 1; k <= bits.size() - bv.count_ones(); k += 101) {
        const std::size_t pos = bv.select0(k);
        CHECK_FALSE(bits[pos]);
        CHECK(bv.rank0(pos) == k - 1);
    }
}

TEST_CASE("bit_vector rank bounds") {
    const bit_vector bv = bit_vector::from_bools({true, false, true});
    CHECK(bv.rank1(3) == 2);
    CHECK_THROWS_AS(bv.rank1(4), std::out_of_range);
    CHECK_THROWS_AS(bv.at(3), std::out_of_range);
    CHECK_THROWS_AS(bit_vector(std::vector<std::uint64_t>{}, 10), std::invalid_argument);
}

TEST_CASE("select_in_word") {
    CHECK(tdgraph::select_in_word(0b1011, 0) == 0);
    CHECK(tdgraph::select_in_word(0b1011, 1) == 1);
    CHECK(tdgraph::select_in_word(0b1011, 2) == 3);
    CHECK(tdgraph::select_in_word(std::uint64_t{1} << 63, 0) == 63);
}

TEST_CASE("int_vector packs fixed-width values") {
    std::mt19937_64 rng(3);
    for (unsigned w : {1u, 3u, 7u, 13u, 31u, 63u, 64u}) {
        tdgraph::int_vector iv(300, w);
        std::vector<std::uint64_t> ref(300);
        const std::uint64_t mask = w == 64 ? ~0ull : (1ull << w) - 1;
        for (auto& x : ref) x = rng() & mask;
        for (std::size_t i = 0; i < ref.size(); ++i) iv.set(i, ref[i]);
        for (std::size_t i = 0; i < ref.size(); ++i) CHECK(iv[i] == ref[i]);
    }
    tdgraph::int_vector small(4, 3);
    CHECK_THROWS_AS(small.set(0, 8), std::invalid_argument);
    CHECK_THROWS_AS(small.at(4), std::out_of_range);
    CHECK(tdgraph::int_vector::width_for(0) == 0);
    CHECK(tdgraph::int_vector::width_for(7) == 3);
    CHECK(tdgraph::int_vector::width_for(8) == 4);
}
