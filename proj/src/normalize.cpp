#include "tdgraph/normalize.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tdgraph {

label_t normalized_representation::label(vertex_t v) const {
    return labels_[external_of_.at(v)];
}

representation normalized_representation::as_representation() const {
    representation rep;
    rep.n = n_;
    rep.t = t_;
    rep.d = d_;
    rep.boxes.resize(n_);
    for (vertex_t v = 0; v < n_; ++v) {
        rep.boxes[v].resize(t_);
        for (unsigned p = 0; p < t_; ++p) {
            rep.boxes[v][p].dims.resize(d_);
            for (unsigned j = 0; j < d_; ++j) rep.boxes[v][p].dims[j] = ranked(v, p, j);
        }
    }
    return rep;
}

normalized_representation normalize(const representation& rep) {
    check_encodable(rep);
    const std::size_t n = rep.n;
    const unsigned t = rep.t, d = rep.d;
    if (2 * static_cast<std::uint64_t>(t) * n > std::numeric_limits<rank_t>::max())
        throw invalid_representation("representation too large: 2tn exceeds rank range");

    normalized_representation out;
    out.n_ = n;
    out.t_ = t;
    out.d_ = d;
    out.real_boxes_ = rep.box_count();
    out.labels_.resize(n);
    for (std::size_t x = 0; x < n; ++x) out.labels_[x] = rep.label_of(x);
    out.custom_labels_ = rep.has_custom_labels();

    // Slot order per vertex: increasing dimension-1 position.
    std::vector<std::vector<std::size_t>> slot_of(n);
    for (std::size_t x = 0; x < n; ++x) {
        auto& s = slot_of[x];
        s.resize(rep.boxes[x].size());
        std::iota(s.begin(), s.end(), 0);
        std::sort(s.begin(), s.end(), [&](std::size_t a, std::size_t b) {
            return rep.boxes[x][a].dims[0].lo < rep.boxes[x][b].dims[0].lo;
        });
    }

    // Ranks by input position first; rows are permuted to internal ids below.
    const std::size_t cells = static_cast<std::size_t>(d) * n * t;
    std::vector<rank_t> left(cells, 0), right(cells, 0);
    auto cell = [&](std::size_t x, unsigned p, unsigned j) {
        return (static_cast<std::size_t>(j) * n + x) * t + p;
    };

    struct endpoint {
        coord_t value;
        std::uint8_t side;  // 0 = left, 1 = right
        std::uint32_t x;
        std::uint32_t p;
    };
    std::vector<endpoint> pts;
    pts.reserve(2 * out.real_boxes_);
    for (unsigned j = 0; j < d; ++j) {
        pts.clear();
        for (std::size_t x = 0; x < n; ++x)
            for (unsigned p = 0; p < slot_of[x].size(); ++p) {
                const interval& iv = rep.boxes[x][slot_of[x][p]].dims[j];
                pts.push_back({iv.lo, 0, static_cast<std::uint32_t>(x), p});
                pts.push_back({iv.hi, 1, static_cast<std::uint32_t>(x), p});
            }
        std::sort(pts.begin(), pts.end(), [](const endpoint& a, const endpoint& b) {
            if (a.value != b.value) return a.value < b.value;
            if (a.side != b.side) return a.side < b.side;
            if (a.x != b.x) return a.x < b.x;
            return a.p < b.p;
        });
        for (std::size_t r = 0; r < pts.size(); ++r) {
            auto& slot = pts[r].side == 0 ? left : right;
            slot[cell(pts[r].x, pts[r].p, j)] = static_cast<rank_t>(r + 1);
        }
        // Dummies: consecutive pairs above every real rank.
        rank_t next = static_cast<rank_t>(pts.size() + 1);
        for (std::size_t x = 0; x < n; ++x)
            for (unsigned p = static_cast<unsigned>(slot_of[x].size()); p < t; ++p) {
                left[cell(x, p, j)] = next;
                right[cell(x, p, j)] = next + 1;
                next += 2;
            }
        assert(next == 2 * t * n + 1);
    }

    out.external_of_.resize(n);
    std::iota(out.external_of_.begin(), out.external_of_.end(), 0);
    std::sort(out.external_of_.begin(), out.external_of_.end(),
              [&](std::uint32_t a, std::uint32_t b) { return left[cell(a, 0, 0)] < left[cell(b, 0, 0)]; });
    out.internal_of_.resize(n);
    for (std::size_t v = 0; v < n; ++v) out.internal_of_[out.external_of_[v]] = static_cast<std::uint32_t>(v);

    out.left_.resize(cells);
    out.right_.resize(cells);
    out.real_slots_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t x = out.external_of_[v];
        out.real_slots_[v] = static_cast<unsigned>(slot_of[x].size());
        for (unsigned j = 0; j < d; ++j)
            for (unsigned p = 0; p < t; ++p) {
                out.left_[cell(v, p, j)] = left[cell(x, p, j)];
                out.right_[cell(v, p, j)] = right[cell(x, p, j)];
            }
    }
    return out;
}

label_t denormalize_vertex(const normalized_representation& norm, std::size_t v) {
    if (v >= norm.n())
        throw std::out_of_range("denormalize_vertex: internal id " + std::to_string(v) +
                                " >= n = " + std::to_string(norm.n()));
    return norm.label(static_cast<vertex_t>(v));
}

}  // namespace tdgraph
