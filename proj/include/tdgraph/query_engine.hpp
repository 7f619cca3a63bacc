#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tdgraph/encoded_graph.hpp"

namespace tdgraph {

class unsupported_configuration : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Operation counters of the most recent query.
struct query_stats {
    std::uint64_t pair_checks = 0;     // interval pairs compared by adj
    std::uint64_t rmq_nodes = 0;       // minimum-query nodes in the reporters
    std::uint64_t perm_inv_steps = 0;  // inverse-permutation steps
    std::uint64_t reports = 0;         // raw reports before deduplication
};

// Queries over an encoded graph. The engine owns per-query scratch space, so
// concurrent callers each need their own engine; the graph is shared.
class query_engine {
public:
    explicit query_engine(const encoded_graph& g);

    const encoded_graph& graph() const { return *g_; }

    // adj(u, u) is true when u has at least one box, false in strict mode.
    bool adj(vertex_t u, vertex_t v, bool strict = false);
    std::vector<vertex_t> neighbor_naive(vertex_t u);
    // d = 1 only.
    std::vector<vertex_t> neighbor_fast(vertex_t u);
    // neighbor_fast when reporters exist, neighbor_naive otherwise.
    std::vector<vertex_t> neighbor(vertex_t u);
    std::size_t deg(vertex_t u);

    const query_stats& stats() const { return stats_; }

private:
    void check_vertex(vertex_t v, const char* op) const;
    unsigned real_slots(vertex_t v) const;
    bool adj_unchecked(vertex_t u, vertex_t v);

    const encoded_graph* g_;
    query_stats stats_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t version_ = 0;
};

}  // namespace tdgraph
