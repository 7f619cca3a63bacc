#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdgraph/geometry.hpp"

namespace tdgraph {

using label_t = std::int64_t;

// Raw t,d-intersection representation: vertex x owns up to t boxes in d
// dimensions. Vertices are addressed by input position x in [0, n); labels
// are the external identifiers (defaults to x + 1 when empty).
struct representation {
    std::size_t n = 0;
    unsigned t = 1;
    unsigned d = 1;
    std::vector<std::vector<box>> boxes;
    std::vector<label_t> labels;

    label_t label_of(std::size_t x) const {
        return labels.empty() ? static_cast<label_t>(x) + 1 : labels.at(x);
    }
    bool has_custom_labels() const;
    std::size_t box_count() const;
};

class invalid_representation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Shape checks: n, t, d >= 1, one box list per vertex with at most t boxes
// of exactly d intervals each, lo <= hi, distinct labels.
void check_structure(const representation& rep);

// Shape checks plus: the dimension-1 extents of each vertex's boxes are
// pairwise disjoint.
void check_encodable(const representation& rep);

}  // namespace tdgraph
