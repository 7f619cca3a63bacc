#pragma once

#include <cstdint>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tdgraph/representation.hpp"

namespace tdgraph {

// Colors are 1..dm; color (j-1)m + i is the i-th basis interval of axis j.
struct lower_bound_spec {
    std::size_t n = 0;
    unsigned m = 0, d = 0, t = 0;
    // One entry per dependent vertex (n - dm of them), each holding dt color
    // pairs (e, e') ordered by box p, then axis j: index p * d + j.
    std::vector<std::vector<std::pair<unsigned, unsigned>>> deps;
};

void check_spec(const lower_bound_spec& spec);

struct lower_bound_instance {
    representation rep;
    // Color of each vertex by input position; 0 for dependent vertices.
    std::vector<unsigned> color;
};

// Basis vertices come first (label = color), then the dependents with
// labels dm + 1, dm + 2, ...
lower_bound_instance gen_lowerbound(const lower_bound_spec& spec);

// Text format: "n m d t" header, then one line of dt pairs "e e'" per dependent.
lower_bound_spec parse_spec(std::istream& in);
lower_bound_spec load_spec(const std::string& path);

class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded(std::uint64_t required, std::uint64_t budget);
    std::uint64_t required() const { return required_; }

private:
    std::uint64_t required_;
};

struct enumeration_result {
    std::uint64_t specs = 0;      // J values enumerated
    std::uint64_t expected = 0;   // (m(m+1)/2)^(dt(n-dm))
    std::uint64_t distinct = 0;   // distinct colored-profile vectors
    bool all_distinct() const { return distinct == specs && specs == expected; }
};

// (m(m+1)/2)^(dt(n-dm)), saturating at UINT64_MAX.
std::uint64_t lowerbound_family_size(std::size_t n, unsigned m, unsigned d, unsigned t);

// Builds the oracle graph of every valid J and compares the colored
// neighborhoods of the dependent vertices.
enumeration_result enumerate_lowerbound_family(std::size_t n, unsigned m, unsigned d, unsigned t,
                                               std::uint64_t budget = 1'000'000);

}  // namespace tdgraph
