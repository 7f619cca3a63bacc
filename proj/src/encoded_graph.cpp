#include "tdgraph/encoded_graph.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "tdgraph/query_engine.hpp"

namespace tdgraph {

std::size_t ceil_log2(std::uint64_t x) {
    return x <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(x - 1));
}

namespace {

std::string slot_name(const char* what, unsigned p, unsigned j) {
    return std::string(what) + "(" + std::to_string(p + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

const succinct_permutation* encoded_graph::pi(unsigned p, unsigned j) const {
    if (p >= t_ || j >= d_) throw std::out_of_range("encoded_graph::pi: slot out of range");
    if (p == 0 && j == 0) return nullptr;
    return &pi_[slot(p, j)];
}

const succinct_permutation& encoded_graph::rho(unsigned p, unsigned j) const {
    if (p >= t_ || j >= d_) throw std::out_of_range("encoded_graph::rho: slot out of range");
    return rho_[slot(p, j)];
}

std::size_t encoded_graph::permutation_count() const {
    std::size_t c = 0;
    for (unsigned j = 0; j < d_; ++j)
        for (unsigned p = 0; p < t_; ++p) c += (p == 0 && j == 0 ? 0 : 1) + 1;
    return c;
}

rank_t encoded_graph::decode_left(vertex_t v, unsigned p, unsigned j) const {
    if (v >= n_ || p >= t_ || j >= d_)
        throw std::out_of_range("encoded_graph::decode: (v, p, j) = (" + std::to_string(v) + ", " +
                                std::to_string(p) + ", " + std::to_string(j) + ") out of range");
    if (p == 0 && j == 0) return static_cast<rank_t>(sequences_[0].select(0, std::size_t{v} + 1));
    return static_cast<rank_t>(sequences_[j].select(2 * p, pi_[slot(p, j)].apply(v) + 1));
}

rank_t encoded_graph::decode_right(vertex_t v, unsigned p, unsigned j) const {
    if (v >= n_ || p >= t_ || j >= d_)
        throw std::out_of_range("encoded_graph::decode: (v, p, j) = (" + std::to_string(v) + ", " +
                                std::to_string(p) + ", " + std::to_string(j) + ") out of range");
    return static_cast<rank_t>(sequences_[j].select(2 * p + 1, rho_[slot(p, j)].apply(v) + 1));
}

interval encoded_graph::decode(vertex_t v, unsigned p, unsigned j) const {
    return {decode_left(v, p, j), decode_right(v, p, j)};
}

std::optional<vertex_t> encoded_graph::find_label(label_t label) const {
    if (!custom_labels_) {
        if (label < 1 || static_cast<std::uint64_t>(label) > n_) return std::nullopt;
        // identity labels: input position = label - 1
        for (vertex_t v = 0; v < n_; ++v)
            if (vertex_order_[v] == static_cast<std::uint32_t>(label - 1)) return v;
        return std::nullopt;
    }
    for (vertex_t v = 0; v < n_; ++v)
        if (labels_[vertex_order_[v]] == label) return v;
    return std::nullopt;
}

space_report encoded_graph::space() const {
    space_report r;
    for (unsigned j = 0; j < d_; ++j)
        r.components.push_back({"S(" + std::to_string(j + 1) + ")", sequences_[j].space_bits()});
    for (unsigned j = 0; j < d_; ++j)
        for (unsigned p = 0; p < t_; ++p)
            if (p != 0 || j != 0) r.components.push_back({slot_name("pi", p, j), pi_[slot(p, j)].space_bits()});
    for (unsigned j = 0; j < d_; ++j)
        for (unsigned p = 0; p < t_; ++p)
            r.components.push_back({slot_name("rho", p, j), rho_[slot(p, j)].space_bits()});
    for (unsigned q = 0; q < reporters_.size(); ++q)
        r.components.push_back({"reporter(" + std::to_string(q + 1) + ")", reporters_[q].space_bits()});
    if (degrees_) r.components.push_back({"degrees", degrees_->space_bits()});
    // n, t, d, real endpoint count, shortcut spacing
    r.components.push_back({"header", 5 * 64});
    for (const auto& c : r.components) r.total_bits += c.bits;

    r.label_map_bits = n_ * ceil_log2(n_) + (custom_labels_ ? n_ * 64 : 0);
    const std::size_t dt = static_cast<std::size_t>(d_) * t_;
    const std::size_t perms = (2 * dt - 1) * n_ * ceil_log2(n_);
    r.reference_bits = perms + 2 * dt * n_ * ceil_log2(2 * t_);
    r.reference_bits_log_t = perms + 2 * dt * n_ * ceil_log2(t_);
    return r;
}

encoded_graph encoded_graph::assemble(parts in) {
    const std::size_t n = in.n;
    const unsigned t = in.t, d = in.d;
    if (n == 0 || t == 0 || d == 0) throw std::invalid_argument("encoded_graph: n, t, d must be positive");
    const std::size_t len = 2 * static_cast<std::size_t>(t) * n;
    if (in.sequences.size() != d) throw std::invalid_argument("encoded_graph: expected d sequences");
    if (in.pi.size() != static_cast<std::size_t>(t) * d || in.rho.size() != in.pi.size())
        throw std::invalid_argument("encoded_graph: expected t*d permutation slots");
    if (!in.pi[0].empty()) throw std::invalid_argument("encoded_graph: pi(1,1) must not be stored");
    if (in.vertex_order.size() != n || in.labels.size() != n)
        throw std::invalid_argument("encoded_graph: vertex order / labels must have n entries");
    if (in.real_endpoints > len || in.real_endpoints % 2 != 0)
        throw std::invalid_argument("encoded_graph: bad real endpoint count");
    if (in.degrees && in.degrees->size() != n)
        throw std::invalid_argument("encoded_graph: degree array must have n entries");

    encoded_graph g;
    g.n_ = n;
    g.t_ = t;
    g.d_ = d;
    g.real_endpoints_ = in.real_endpoints;
    g.spacing_ = in.shortcut_spacing == 0 ? succinct_permutation::default_spacing(n) : in.shortcut_spacing;

    std::vector<bool> seen(n, false);
    for (auto x : in.vertex_order) {
        if (x >= n || seen[x]) throw std::invalid_argument("encoded_graph: vertex order is not a permutation");
        seen[x] = true;
    }

    for (unsigned j = 0; j < d; ++j) {
        const auto& s = in.sequences[j];
        if (s.size() != len) throw std::invalid_argument("encoded_graph: sequence length must be 2tn");
        std::vector<std::size_t> counts(2 * t, 0);
        for (auto sym : s) {
            if (sym >= 2 * t) throw std::invalid_argument("encoded_graph: symbol outside [0, 2t)");
            ++counts[sym];
        }
        for (auto c : counts)
            if (c != n) throw std::invalid_argument("encoded_graph: every symbol must occur n times");
        g.sequences_.emplace_back(s, static_cast<symbol_t>(2 * t));
    }
    g.pi_.resize(static_cast<std::size_t>(t) * d);
    g.rho_.resize(static_cast<std::size_t>(t) * d);
    for (unsigned j = 0; j < d; ++j)
        for (unsigned p = 0; p < t; ++p) {
            const std::size_t k = g.slot(p, j);
            if ((k != 0 && in.pi[k].size() != n) || in.rho[k].size() != n)
                throw std::invalid_argument("encoded_graph: permutations must have n entries");
            if (k != 0) g.pi_[k] = succinct_permutation(in.pi[k], g.spacing_);
            g.rho_[k] = succinct_permutation(in.rho[k], g.spacing_);
        }
    for (unsigned j = 0; j < d; ++j)
        for (unsigned p = 0; p < t; ++p)
            for (vertex_t v = 0; v < n; ++v)
                if (g.decode_left(v, p, j) >= g.decode_right(v, p, j))
                    throw std::invalid_argument("encoded_graph: interval " + slot_name("I", p, j) +
                                                " of vertex " + std::to_string(v) + " is empty");

    if (d == 1) {
        std::vector<std::uint64_t> left_by_right(n);
        for (unsigned q = 0; q < t; ++q) {
            for (vertex_t v = 0; v < n; ++v)
                left_by_right[in.rho[q][v]] = q == 0 ? v : in.pi[q][v];
            g.reporters_.push_back(interval_reporter::from_ranks(left_by_right));
        }
    }
    if (in.degrees) {
        int_vector deg(n, int_vector::width_for(n > 0 ? n - 1 : 0));
        for (std::size_t v = 0; v < n; ++v) deg.set(v, (*in.degrees)[v]);
        g.degrees_ = std::move(deg);
    }
    g.vertex_order_ = std::move(in.vertex_order);
    g.labels_ = std::move(in.labels);
    g.custom_labels_ = in.custom_labels;
    return g;
}

encoded_graph::parts encoded_graph::disassemble() const {
    parts out;
    out.n = n_;
    out.t = t_;
    out.d = d_;
    out.real_endpoints = real_endpoints_;
    out.shortcut_spacing = spacing_;
    for (const auto& s : sequences_) out.sequences.push_back(s.to_vector());
    out.pi.resize(static_cast<std::size_t>(t_) * d_);
    out.rho.resize(out.pi.size());
    for (std::size_t k = 0; k < out.pi.size(); ++k) {
        if (k != 0)
            for (std::size_t v = 0; v < n_; ++v) out.pi[k].push_back(pi_[k].apply(v));
        for (std::size_t v = 0; v < n_; ++v) out.rho[k].push_back(rho_[k].apply(v));
    }
    out.vertex_order = vertex_order_;
    out.labels = labels_;
    out.custom_labels = custom_labels_;
    if (degrees_) {
        std::vector<std::uint64_t> deg(n_);
        for (std::size_t v = 0; v < n_; ++v) deg[v] = (*degrees_)[v];
        out.degrees = std::move(deg);
    }
    return out;
}

encoded_graph encode(const normalized_representation& norm, const encode_options& options) {
    const std::size_t n = norm.n();
    const unsigned t = norm.t(), d = norm.d();
    const std::size_t len = 2 * static_cast<std::size_t>(t) * n;

    encoded_graph::parts in;
    in.n = n;
    in.t = t;
    in.d = d;
    in.real_endpoints = 2 * norm.real_boxes();
    in.shortcut_spacing = options.shortcut_spacing;
    in.pi.resize(static_cast<std::size_t>(t) * d);
    in.rho.resize(in.pi.size());

    for (unsigned j = 0; j < d; ++j) {
        std::vector<symbol_t> seq(len, 0);
        std::vector<bool> filled(len, false);
        auto put = [&](rank_t rank, symbol_t sym) {
            if (rank == 0 || rank > len || filled[rank - 1])
                throw std::logic_error("encode: endpoint ranks are not a bijection onto [1, 2tn]");
            filled[rank - 1] = true;
            seq[rank - 1] = sym;
        };
        for (vertex_t v = 0; v < n; ++v)
            for (unsigned p = 0; p < t; ++p) {
                put(norm.left(v, p, j), 2 * p);
                put(norm.right(v, p, j), 2 * p + 1);
            }
        // Occurrence index of every position among its own symbol.
        std::vector<std::uint64_t> occurrence(len);
        std::vector<std::uint64_t> seen(2 * t, 0);
        for (std::size_t i = 0; i < len; ++i) occurrence[i] = seen[seq[i]]++;
        for (unsigned p = 0; p < t; ++p) {
            const std::size_t k = static_cast<std::size_t>(j) * t + p;
            in.rho[k].resize(n);
            for (vertex_t v = 0; v < n; ++v) in.rho[k][v] = occurrence[norm.right(v, p, j) - 1];
            if (k == 0) {
                for (vertex_t v = 0; v < n; ++v)
                    if (occurrence[norm.left(v, 0, 0) - 1] != v)
                        throw std::logic_error("encode: vertex order does not follow first left endpoints");
                continue;
            }
            in.pi[k].resize(n);
            for (vertex_t v = 0; v < n; ++v) in.pi[k][v] = occurrence[norm.left(v, p, j) - 1];
        }
        in.sequences.push_back(std::move(seq));
    }
    in.vertex_order = norm.vertex_order();
    in.labels = norm.labels();
    in.custom_labels = norm.has_custom_labels();

    encoded_graph g = encoded_graph::assemble(std::move(in));
    if (options.store_degrees) {
        query_engine engine(g);
        int_vector deg(n, int_vector::width_for(n > 0 ? n - 1 : 0));
        for (vertex_t v = 0; v < n; ++v) deg.set(v, engine.neighbor(v).size());
        g.degrees_ = std::move(deg);
    }
    return g;
}

}  // namespace tdgraph
