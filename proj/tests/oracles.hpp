#pragma once

// Reference implementations used only by the tests: plain scans over
// std::vector, independent of the library's index structures.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "tdgraph/geometry.hpp"
#include "tdgraph/representation.hpp"

namespace scan {

template <class T>
std::size_t rank(const std::vector<T>& s, T a, std::size_t pos) {  // occurrences in s[0, pos)
    return static_cast<std::size_t>(std::count(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(pos), a));
}

template <class T>
std::optional<std::size_t> select(const std::vector<T>& s, T a, std::size_t k) {  // 0-based, k >= 1
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == a && --k == 0) return i;
    return std::nullopt;
}

inline std::size_t leftmost_min(const std::vector<std::uint64_t>& v, std::size_t l, std::size_t r) {
    std::size_t best = l;
    for (std::size_t i = l + 1; i <= r; ++i)
        if (v[i] < v[best]) best = i;
    return best;
}

// 1-based right-endpoint ranks of the intervals meeting q.
inline std::vector<std::size_t> intersecting_right_ranks(const std::vector<tdgraph::interval>& ivs,
                                                         const tdgraph::interval& q) {
    std::vector<tdgraph::coord_t> rights;
    for (const auto& iv : ivs) rights.push_back(iv.hi);
    std::sort(rights.begin(), rights.end());
    std::vector<std::size_t> out;
    for (const auto& iv : ivs)
        if (iv.lo <= q.hi && q.lo <= iv.hi)
            out.push_back(static_cast<std::size_t>(std::lower_bound(rights.begin(), rights.end(), iv.hi) - rights.begin()) + 1);
    std::sort(out.begin(), out.end());
    return out;
}

// Adjacency by input position, straight from the definition.
inline bool boxes_meet(const tdgraph::representation& rep, std::size_t u, std::size_t v) {
    for (const auto& a : rep.boxes[u])
        for (const auto& b : rep.boxes[v]) {
            bool all = true;
            for (unsigned j = 0; j < rep.d; ++j)
                all = all && a.dims[j].lo <= b.dims[j].hi && b.dims[j].lo <= a.dims[j].hi;
            if (all) return true;
        }
    return false;
}

// m random intervals with distinct endpoints in [1, 2m] (a random matching).
inline std::vector<tdgraph::interval> random_intervals(std::size_t m, std::mt19937_64& rng) {
    std::vector<tdgraph::coord_t> pts(2 * m);
    for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = static_cast<tdgraph::coord_t>(i + 1);
    std::shuffle(pts.begin(), pts.end(), rng);
    std::vector<tdgraph::interval> out;
    for (std::size_t i = 0; i < m; ++i)
        out.push_back({std::min(pts[2 * i], pts[2 * i + 1]), std::max(pts[2 * i], pts[2 * i + 1])});
    return out;
}

}  // namespace scan
