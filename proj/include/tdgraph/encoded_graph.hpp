#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tdgraph/geometry.hpp"
#include "tdgraph/int_vector.hpp"
#include "tdgraph/interval_reporter.hpp"
#include "tdgraph/normalize.hpp"
#include "tdgraph/permutation.hpp"
#include "tdgraph/wavelet_sequence.hpp"

namespace tdgraph {

struct encode_options {
    // Inverse-permutation shortcut spacing; 0 selects ceil(log2 n).
    std::size_t shortcut_spacing = 0;
    // Keep an explicit n-entry degree array (outside the succinct budget).
    bool store_degrees = false;
};

struct space_component {
    std::string name;
    std::size_t bits;
};

struct space_report {
    std::vector<space_component> components;
    std::size_t total_bits = 0;
    // Vertex-order permutation plus any custom label values; not in total.
    std::size_t label_map_bits = 0;
    // (2dt-1) n ceil(log n) + 2dtn ceil(log 2t)
    std::size_t reference_bits = 0;
    // (2dt-1) n ceil(log n) + 2dtn ceil(log t)
    std::size_t reference_bits_log_t = 0;
};

std::size_t ceil_log2(std::uint64_t x);

// Additive slack c in the space check total <= 1.5 * reference + c * dtn:
// index samples and per-structure bookkeeping words, per stored interval.
inline constexpr std::size_t space_slack_bits_per_interval = 16;

// Succinct encoding of a normalized t,d-representation.
//
// Per dimension j a sequence S_j over [0, 2t): position i holds 2p when rank
// i is the left endpoint of a slot-p interval and 2p+1 when it is a right
// endpoint. pi(p,j)(v) and rho(p,j)(v) give the occurrence index (0-based)
// of v's slot-p left / right endpoint among its symbol in S_j. pi(0,0) is
// the identity by the vertex ordering and is not stored, leaving 2dt-1
// permutations. For d = 1 one interval_reporter per slot class backs the
// output-sensitive neighborhood query.
class encoded_graph {
public:
    std::size_t n() const { return n_; }
    unsigned t() const { return t_; }
    unsigned d() const { return d_; }
    // Ranks above this value belong to dummy boxes.
    std::size_t real_endpoints() const { return real_endpoints_; }
    std::size_t shortcut_spacing() const { return spacing_; }

    const wavelet_sequence& sequence(unsigned j) const { return sequences_.at(j); }
    // nullptr for (0, 0).
    const succinct_permutation* pi(unsigned p, unsigned j) const;
    const succinct_permutation& rho(unsigned p, unsigned j) const;
    std::size_t permutation_count() const;

    bool has_reporters() const { return !reporters_.empty(); }
    const interval_reporter& reporter(unsigned q) const { return reporters_.at(q); }

    bool has_degrees() const { return degrees_.has_value(); }
    std::size_t stored_degree(vertex_t v) const { return (*degrees_)[v]; }

    // Ranks of [l, r] of slot p of v in dimension j.
    interval decode(vertex_t v, unsigned p, unsigned j) const;
    rank_t decode_left(vertex_t v, unsigned p, unsigned j) const;
    rank_t decode_right(vertex_t v, unsigned p, unsigned j) const;
    bool is_dummy_rank(std::size_t rank) const { return rank > real_endpoints_; }
    bool has_real_box(vertex_t v) const { return !is_dummy_rank(decode_left(v, 0, 0)); }

    label_t label(vertex_t v) const { return labels_[vertex_order_[v]]; }
    std::optional<vertex_t> find_label(label_t label) const;
    const std::vector<std::uint32_t>& vertex_order() const { return vertex_order_; }
    const std::vector<label_t>& labels() const { return labels_; }
    bool has_custom_labels() const { return custom_labels_; }

    space_report space() const;

    // Raw component data as stored on disk; indexes are rebuilt from it.
    struct parts {
        std::size_t n = 0;
        unsigned t = 0, d = 0;
        std::size_t real_endpoints = 0;
        std::size_t shortcut_spacing = 0;
        std::vector<std::vector<symbol_t>> sequences;  // d entries of 2tn symbols
        std::vector<std::vector<std::uint64_t>> pi;    // t*d entries; [0] empty
        std::vector<std::vector<std::uint64_t>> rho;   // t*d entries
        std::vector<std::uint32_t> vertex_order;       // internal -> input position
        std::vector<label_t> labels;                   // by input position
        bool custom_labels = false;
        std::optional<std::vector<std::uint64_t>> degrees;
    };
    static encoded_graph assemble(parts p);
    parts disassemble() const;

private:
    friend encoded_graph encode(const normalized_representation&, const encode_options&);

    std::size_t slot(unsigned p, unsigned j) const { return static_cast<std::size_t>(j) * t_ + p; }

    std::size_t n_ = 0;
    unsigned t_ = 0, d_ = 0;
    std::size_t real_endpoints_ = 0;
    std::size_t spacing_ = 1;
    std::vector<wavelet_sequence> sequences_;
    std::vector<succinct_permutation> pi_;  // slot(0,0) left empty
    std::vector<succinct_permutation> rho_;
    std::vector<interval_reporter> reporters_;
    std::optional<int_vector> degrees_;
    std::vector<std::uint32_t> vertex_order_;
    std::vector<label_t> labels_;
    bool custom_labels_ = false;
};

encoded_graph encode(const normalized_representation& norm, const encode_options& options = {});

}  // namespace tdgraph
