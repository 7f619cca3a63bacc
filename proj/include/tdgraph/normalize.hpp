#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tdgraph/geometry.hpp"
#include "tdgraph/representation.hpp"

namespace tdgraph {

using vertex_t = std::uint32_t;
using rank_t = std::uint32_t;

// Representation in which every vertex has exactly t boxes and every
// endpoint in each dimension carries a distinct rank in [1, 2tn].
//
// Internal vertex ids are ordered by the rank of their first dimension-1
// left endpoint, and the slots of each vertex are ordered by dimension-1
// position. Padding ("dummy") boxes take the ranks above all real ones,
// as consecutive pairs, so they meet nothing.
class normalized_representation {
public:
    std::size_t n() const { return n_; }
    unsigned t() const { return t_; }
    unsigned d() const { return d_; }
    // Number of real (non-dummy) boxes; real endpoints occupy ranks 1..2R
    // in every dimension.
    std::size_t real_boxes() const { return real_boxes_; }

    rank_t left(vertex_t v, unsigned p, unsigned j) const { return left_[index(v, p, j)]; }
    rank_t right(vertex_t v, unsigned p, unsigned j) const { return right_[index(v, p, j)]; }
    interval ranked(vertex_t v, unsigned p, unsigned j) const {
        return {left(v, p, j), right(v, p, j)};
    }
    unsigned real_slots(vertex_t v) const { return real_slots_[v]; }
    bool is_dummy(vertex_t v, unsigned p) const { return p >= real_slots_[v]; }

    // Input position of internal vertex v, and the reverse.
    std::size_t external_index(vertex_t v) const { return external_of_[v]; }
    vertex_t internal_id(std::size_t x) const { return internal_of_[x]; }
    const std::vector<std::uint32_t>& vertex_order() const { return external_of_; }

    label_t label(vertex_t v) const;
    const std::vector<label_t>& labels() const { return labels_; }
    bool has_custom_labels() const { return custom_labels_; }

    // The ranked boxes (dummies included) as a plain representation indexed
    // by internal id.
    representation as_representation() const;

private:
    friend normalized_representation normalize(const representation& rep);

    std::size_t index(vertex_t v, unsigned p, unsigned j) const {
        return (static_cast<std::size_t>(j) * n_ + v) * t_ + p;
    }

    std::size_t n_ = 0;
    unsigned t_ = 0, d_ = 0;
    std::size_t real_boxes_ = 0;
    std::vector<rank_t> left_, right_;
    std::vector<unsigned> real_slots_;
    std::vector<std::uint32_t> external_of_;
    std::vector<std::uint32_t> internal_of_;
    std::vector<label_t> labels_;  // by external index
    bool custom_labels_ = false;
};

// Pads, ranks and reorders. Endpoint ties resolve left-before-right at equal
// coordinates, then by (input position, slot), which keeps closed-interval
// intersections intact. Throws invalid_representation when the input is not
// encodable (see check_encodable).
normalized_representation normalize(const representation& rep);

// External label of internal vertex v.
label_t denormalize_vertex(const normalized_representation& norm, std::size_t v);

}  // namespace tdgraph
