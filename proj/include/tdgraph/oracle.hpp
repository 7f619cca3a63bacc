#pragma once

#include <cstdint>
#include <vector>

#include "tdgraph/representation.hpp"

namespace tdgraph {

// Dense adjacency matrix computed directly from the boxes.
class oracle_graph {
public:
    explicit oracle_graph(std::size_t n = 0) : n_(n), adj_(n * n, 0) {}

    std::size_t n() const { return n_; }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }
    void connect(std::size_t u, std::size_t v) {
        adj_[u * n_ + v] = 1;
        adj_[v * n_ + u] = 1;
    }
    std::vector<std::size_t> neighbors(std::size_t u) const;
    std::size_t degree(std::size_t u) const;
    std::size_t edge_count() const;

private:
    std::size_t n_;
    std::vector<std::uint8_t> adj_;
};

// Vertices are indexed by input position. Only check_structure is required,
// so overlapping boxes of one vertex are accepted.
oracle_graph oracle_build(const representation& rep);

// Reproducible random representation with distinct endpoints per dimension
// and pairwise disjoint dimension-1 extents per vertex. density scales the
// box lengths: 0 gives point-like boxes, large values near-complete graphs.
representation gen_random(std::size_t n, unsigned t, unsigned d, std::uint64_t seed, double density = 1.0);

}  // namespace tdgraph
