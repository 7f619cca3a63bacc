#include "tdgraph/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace tdgraph {

std::vector<std::size_t> oracle_graph::neighbors(std::size_t u) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n_; ++v)
        if (adjacent(u, v)) out.push_back(v);
    return out;
}

std::size_t oracle_graph::degree(std::size_t u) const {
    return static_cast<std::size_t>(std::count(adj_.begin() + u * n_, adj_.begin() + (u + 1) * n_, 1));
}

std::size_t oracle_graph::edge_count() const {
    return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

oracle_graph oracle_build(const representation& rep) {
    check_structure(rep);
    oracle_graph g(rep.n);
    for (std::size_t u = 0; u < rep.n; ++u)
        for (std::size_t v = u + 1; v < rep.n; ++v) {
            bool hit = false;
            for (const box& a : rep.boxes[u]) {
                for (const box& b : rep.boxes[v])
                    if (intersects(a, b)) {
                        hit = true;
                        break;
                    }
                if (hit) break;
            }
            if (hit) g.connect(u, v);
        }
    return g;
}

namespace {

// Uniform in [0, bound) by rejection; std distributions differ across
// standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do x = rng();
    while (x >= limit);
    return x % bound;
}

double uniform_unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

representation gen_random(std::size_t n, unsigned t, unsigned d, std::uint64_t seed, double density) {
    if (n == 0 || t == 0 || d == 0) throw std::invalid_argument("gen_random: n, t, d must be positive");
    if (!(density >= 0)) throw std::invalid_argument("gen_random: density must be non-negative");
    std::mt19937_64 rng(seed);
    const std::uint64_t universe = 4 * static_cast<std::uint64_t>(n) * t;
    const auto scaled = [&](double len) {
        return static_cast<std::uint64_t>(std::min(std::llround(len), static_cast<long long>(universe - 1)));
    };
    const std::uint64_t len1 = scaled(density * static_cast<double>(universe) / static_cast<double>(n * t));
    const std::uint64_t len_other = scaled(density * static_cast<double>(universe) / 4);

    representation rep;
    rep.n = n;
    rep.t = t;
    rep.d = d;
    rep.boxes.resize(n);
    // Endpoint k of a dimension maps to coord * stride + k, which makes all
    // endpoints distinct and keeps each box's left below its right.
    const std::int64_t stride = 2 * static_cast<std::int64_t>(n) * t;
    for (std::size_t x = 0; x < n; ++x) {
        // About one vertex in twenty gets no boxes.
        const unsigned count = uniform_below(rng, 20) == 0 ? 0 : 1 + static_cast<unsigned>(uniform_below(rng, t));
        const std::uint64_t seg = universe / std::max(count, 1u);
        for (unsigned p = 0; p < count; ++p) {
            box b;
            b.dims.resize(d);
            const std::int64_t idx = 2 * static_cast<std::int64_t>(x * t + p);
            for (unsigned j = 0; j < d; ++j) {
                std::uint64_t lo, len;
                if (j == 0) {
                    len = std::min(len1, seg - 1);
                    lo = p * seg + uniform_below(rng, seg - len);
                } else {
                    len = std::min(len_other, universe - 1);
                    lo = uniform_below(rng, universe - len);
                }
                const double jitter = uniform_unit(rng);
                len = static_cast<std::uint64_t>(static_cast<double>(len) * (0.5 + jitter));
                if (j == 0) len = std::min(len, seg - 1 - (lo - p * seg));
                else len = std::min(len, universe - 1 - lo);
                b.dims[j] = {static_cast<coord_t>(lo) * stride + idx,
                             static_cast<coord_t>(lo + len) * stride + idx + 1};
            }
            rep.boxes[x].push_back(std::move(b));
        }
    }
    return rep;
}

}  // namespace tdgraph
