#pragma once

#include <cstdint>
#include <vector>

namespace tdgraph {

using coord_t = std::int64_t;

// Closed interval [lo, hi].
struct interval {
    coord_t lo = 0;
    coord_t hi = 0;

    friend bool operator==(const interval&, const interval&) = default;
};

inline bool intersects(const interval& a, const interval& b) {
    return a.lo <= b.hi && b.lo <= a.hi;
}

// Axis-parallel box: dims[j] is the extent along axis j.
struct box {
    std::vector<interval> dims;

    friend bool operator==(const box&, const box&) = default;
};

inline bool intersects(const box& a, const box& b) {
    if (a.dims.size() != b.dims.size()) return false;
    for (std::size_t j = 0; j < a.dims.size(); ++j)
        if (!intersects(a.dims[j], b.dims[j])) return false;
    return true;
}

}  // namespace tdgraph
