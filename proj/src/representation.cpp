#include "tdgraph/representation.hpp"

#include <algorithm>
#include <unordered_set>

namespace tdgraph {

bool representation::has_custom_labels() const {
    for (std::size_t x = 0; x < labels.size(); ++x)
        if (labels[x] != static_cast<label_t>(x) + 1) return true;
    return false;
}

std::size_t representation::box_count() const {
    std::size_t c = 0;
    for (const auto& b : boxes) c += b.size();
    return c;
}

void check_structure(const representation& rep) {
    if (rep.n == 0 || rep.t == 0 || rep.d == 0)
        throw invalid_representation("representation: n, t and d must be positive");
    if (rep.boxes.size() != rep.n)
        throw invalid_representation("representation: expected " + std::to_string(rep.n) +
                                     " box lists, got " + std::to_string(rep.boxes.size()));
    if (!rep.labels.empty() && rep.labels.size() != rep.n)
        throw invalid_representation("representation: label count does not match n");
    for (std::size_t x = 0; x < rep.n; ++x) {
        const auto& bs = rep.boxes[x];
        if (bs.size() > rep.t)
            throw invalid_representation("vertex " + std::to_string(rep.label_of(x)) + " has " +
                                         std::to_string(bs.size()) + " boxes, t = " +
                                         std::to_string(rep.t));
        for (const auto& b : bs) {
            if (b.dims.size() != rep.d)
                throw invalid_representation("vertex " + std::to_string(rep.label_of(x)) +
                                             ": box with " + std::to_string(b.dims.size()) +
                                             " dimensions, d = " + std::to_string(rep.d));
            for (std::size_t j = 0; j < b.dims.size(); ++j)
                if (b.dims[j].lo > b.dims[j].hi)
                    throw invalid_representation("vertex " + std::to_string(rep.label_of(x)) +
                                                 ": lo > hi in dimension " +
                                                 std::to_string(j + 1));
        }
    }
    if (!rep.labels.empty()) {
        std::unordered_set<label_t> seen;
        for (label_t l : rep.labels)
            if (!seen.insert(l).second)
                throw invalid_representation("duplicate vertex label " + std::to_string(l));
    }
}

void check_encodable(const representation& rep) {
    check_structure(rep);
    std::vector<interval> first;
    for (std::size_t x = 0; x < rep.n; ++x) {
        first.clear();
        for (const auto& b : rep.boxes[x]) first.push_back(b.dims[0]);
        std::sort(first.begin(), first.end(),
                  [](const interval& a, const interval& b) { return a.lo < b.lo; });
        for (std::size_t p = 1; p < first.size(); ++p)
            if (first[p - 1].hi >= first[p].lo)
                throw invalid_representation(
                    "vertex " + std::to_string(rep.label_of(x)) +
                    ": boxes overlap in dimension 1 (boxes of a vertex must be disjoint there)");
    }
}

}  // namespace tdgraph
