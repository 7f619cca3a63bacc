#include "tdgraph/query_engine.hpp"

#include <algorithm>
#include <string>

namespace tdgraph {

query_engine::query_engine(const encoded_graph& g) : g_(&g), mark_(g.n(), 0) {}

void query_engine::check_vertex(vertex_t v, const char* op) const {
    if (v >= g_->n())
        throw std::out_of_range(std::string("query_engine::") + op + ": vertex " + std::to_string(v) +
                                " >= n = " + std::to_string(g_->n()));
}

unsigned query_engine::real_slots(vertex_t v) const {
    // Dummy slots follow the real ones.
    unsigned p = 0;
    while (p < g_->t() && !g_->is_dummy_rank(g_->decode_left(v, p, 0))) ++p;
    return p;
}

bool query_engine::adj(vertex_t u, vertex_t v, bool strict) {
    check_vertex(u, "adj");
    check_vertex(v, "adj");
    stats_ = {};
    if (u == v) return !strict && g_->has_real_box(u);
    return adj_unchecked(u, v);
}

bool query_engine::adj_unchecked(vertex_t u, vertex_t v) {
    // Slots are sorted by dimension-1 position and dummies come last, so the
    // sweep stops at the first dummy on either side.
    const unsigned t = g_->t(), d = g_->d();
    unsigned p = 0, q = 0;
    interval a = g_->decode(u, 0, 0);
    interval b = g_->decode(v, 0, 0);
    if (g_->is_dummy_rank(static_cast<std::size_t>(a.lo)) || g_->is_dummy_rank(static_cast<std::size_t>(b.lo)))
        return false;
    for (;;) {
        ++stats_.pair_checks;
        if (intersects(a, b)) {
            bool all = true;
            for (unsigned j = 1; j < d && all; ++j) all = intersects(g_->decode(u, p, j), g_->decode(v, q, j));
            if (all) return true;
        }
        if (a.hi < b.hi) {
            if (++p == t) return false;
            a = g_->decode(u, p, 0);
            if (g_->is_dummy_rank(static_cast<std::size_t>(a.lo))) return false;
        } else {
            if (++q == t) return false;
            b = g_->decode(v, q, 0);
            if (g_->is_dummy_rank(static_cast<std::size_t>(b.lo))) return false;
        }
    }
}

std::vector<vertex_t> query_engine::neighbor_naive(vertex_t u) {
    check_vertex(u, "neighbor_naive");
    stats_ = {};
    std::vector<vertex_t> out;
    for (vertex_t v = 0; v < g_->n(); ++v)
        if (v != u && adj_unchecked(u, v)) out.push_back(v);
    stats_.reports = out.size();
    return out;
}

std::vector<vertex_t> query_engine::neighbor_fast(vertex_t u) {
    if (!g_->has_reporters())
        throw unsupported_configuration("neighbor_fast requires d = 1 (got d = " + std::to_string(g_->d()) + ")");
    check_vertex(u, "neighbor_fast");
    stats_ = {};
    if (++version_ == 0) {
        std::fill(mark_.begin(), mark_.end(), 0);
        version_ = 1;
    }
    const wavelet_sequence& s1 = g_->sequence(0);
    std::vector<vertex_t> out;
    const unsigned tu = real_slots(u);
    for (unsigned p = 0; p < tu; ++p) {
        const interval iu = g_->decode(u, p, 0);
        for (unsigned q = 0; q < g_->t(); ++q) {
            const std::size_t c = s1.rank(2 * q, static_cast<std::size_t>(iu.hi));
            const std::size_t r0 = s1.rank(2 * q + 1, static_cast<std::size_t>(iu.lo));
            const succinct_permutation& rho = g_->rho(q, 0);
            stats_.rmq_nodes += g_->reporter(q).report(r0, c, [&](std::size_t k) {
                ++stats_.reports;
                const auto v = static_cast<vertex_t>(rho.invert(k - 1, &stats_.perm_inv_steps));
                if (g_->is_dummy_rank(g_->decode_right(v, q, 0)))
                    throw std::logic_error("neighbor_fast: reported a dummy interval");
                if (v != u && mark_[v] != version_) {
                    mark_[v] = version_;
                    out.push_back(v);
                }
            });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<vertex_t> query_engine::neighbor(vertex_t u) {
    return g_->has_reporters() ? neighbor_fast(u) : neighbor_naive(u);
}

std::size_t query_engine::deg(vertex_t u) {
    check_vertex(u, "deg");
    if (g_->has_degrees()) {
        stats_ = {};
        return g_->stored_degree(u);
    }
    return neighbor(u).size();
}

}  // namespace tdgraph
