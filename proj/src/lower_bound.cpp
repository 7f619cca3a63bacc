#include "tdgraph/lower_bound.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "tdgraph/oracle.hpp"

namespace tdgraph {

void check_spec(const lower_bound_spec& spec) {
    const std::size_t basis = static_cast<std::size_t>(spec.d) * spec.m;
    if (spec.m == 0 || spec.d == 0 || spec.t == 0) throw std::invalid_argument("lower-bound spec: m, d, t must be positive");
    if (spec.n < basis) throw std::invalid_argument("lower-bound spec: need n >= dm");
    if (spec.deps.size() != spec.n - basis)
        throw std::invalid_argument("lower-bound spec: expected n - dm = " + std::to_string(spec.n - basis) +
                                    " dependent entries, got " + std::to_string(spec.deps.size()));
    for (std::size_t s = 0; s < spec.deps.size(); ++s) {
        const auto& pairs = spec.deps[s];
        if (pairs.size() != static_cast<std::size_t>(spec.d) * spec.t)
            throw std::invalid_argument("lower-bound spec: dependent " + std::to_string(s + 1) + " needs dt pairs");
        for (unsigned p = 0; p < spec.t; ++p)
            for (unsigned j = 0; j < spec.d; ++j) {
                const auto [e, e2] = pairs[p * spec.d + j];
                if (!(j * spec.m + 1 <= e && e <= e2 && e2 <= (j + 1) * spec.m))
                    throw std::invalid_argument("lower-bound spec: dependent " + std::to_string(s + 1) + " pair (" +
                                                std::to_string(e) + ", " + std::to_string(e2) +
                                                ") outside axis " + std::to_string(j + 1) + " color range");
            }
    }
}

lower_bound_instance gen_lowerbound(const lower_bound_spec& spec) {
    check_spec(spec);
    const unsigned m = spec.m, d = spec.d;
    const coord_t full_hi = 2 * static_cast<coord_t>(m);
    lower_bound_instance out;
    representation& rep = out.rep;
    rep.n = spec.n;
    rep.t = spec.t;
    rep.d = d;
    rep.boxes.resize(spec.n);
    rep.labels.resize(spec.n);
    out.color.assign(spec.n, 0);

    std::size_t x = 0;
    for (unsigned j = 0; j < d; ++j)
        for (unsigned i = 1; i <= m; ++i, ++x) {
            box b;
            b.dims.assign(d, interval{1, full_hi});
            b.dims[j] = {2 * static_cast<coord_t>(i) - 1, 2 * static_cast<coord_t>(i)};
            rep.boxes[x].push_back(std::move(b));
            out.color[x] = j * m + i;
            rep.labels[x] = static_cast<label_t>(out.color[x]);
        }
    for (std::size_t s = 0; s < spec.deps.size(); ++s, ++x) {
        for (unsigned p = 0; p < spec.t; ++p) {
            box b;
            b.dims.resize(d);
            for (unsigned j = 0; j < d; ++j) {
                const auto [e, e2] = spec.deps[s][p * d + j];
                b.dims[j] = {2 * static_cast<coord_t>(e - j * m) - 1, 2 * static_cast<coord_t>(e2 - j * m)};
            }
            rep.boxes[x].push_back(std::move(b));
        }
        rep.labels[x] = static_cast<label_t>(static_cast<std::size_t>(d) * m + s + 1);
    }
    check_structure(rep);
    return out;
}

lower_bound_spec parse_spec(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&](std::string& dst) {
        while (std::getline(in, dst)) {
            ++line_no;
            if (auto h = dst.find('#'); h != std::string::npos) dst.erase(h);
            if (dst.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    auto fail = [&](const std::string& msg) {
        return std::invalid_argument("lower-bound spec line " + std::to_string(line_no) + ": " + msg);
    };
    lower_bound_spec spec;
    if (!next_line(line)) throw std::invalid_argument("lower-bound spec: missing header");
    {
        std::istringstream hs(line);
        long long n, m, d, t;
        std::string extra;
        if (!(hs >> n >> m >> d >> t) || (hs >> extra) || n <= 0 || m <= 0 || d <= 0 || t <= 0)
            throw fail("header must be four positive integers: n m d t");
        spec.n = static_cast<std::size_t>(n);
        spec.m = static_cast<unsigned>(m);
        spec.d = static_cast<unsigned>(d);
        spec.t = static_cast<unsigned>(t);
    }
    while (next_line(line)) {
        std::istringstream ls(line);
        std::vector<long long> vals;
        long long v;
        while (ls >> v) vals.push_back(v);
        if (!ls.eof()) throw fail("malformed integer");
        if (vals.size() != 2 * static_cast<std::size_t>(spec.d) * spec.t)
            throw fail("expected " + std::to_string(2 * spec.d * spec.t) + " integers, got " + std::to_string(vals.size()));
        std::vector<std::pair<unsigned, unsigned>> pairs;
        for (std::size_t k = 0; k < vals.size(); k += 2) {
            if (vals[k] <= 0 || vals[k + 1] <= 0) throw fail("colors must be positive");
            pairs.emplace_back(static_cast<unsigned>(vals[k]), static_cast<unsigned>(vals[k + 1]));
        }
        spec.deps.push_back(std::move(pairs));
    }
    check_spec(spec);
    return spec;
}

lower_bound_spec load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_spec(in);
}

budget_exceeded::budget_exceeded(std::uint64_t required, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + (required == UINT64_MAX ? std::string("more than 2^64") : std::to_string(required)) +
                         " specs, budget is " + std::to_string(budget)),
      required_(required) {}

std::uint64_t lowerbound_family_size(std::size_t n, unsigned m, unsigned d, unsigned t) {
    const std::size_t basis = static_cast<std::size_t>(d) * m;
    if (n < basis) return 0;
    const std::uint64_t base = static_cast<std::uint64_t>(m) * (m + 1) / 2;
    const std::uint64_t exponent = static_cast<std::uint64_t>(d) * t * (n - basis);
    std::uint64_t r = 1;
    for (std::uint64_t k = 0; k < exponent; ++k) {
        if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
        r *= base;
    }
    return r;
}

enumeration_result enumerate_lowerbound_family(std::size_t n, unsigned m, unsigned d, unsigned t,
                                               std::uint64_t budget) {
    if (m == 0 || d == 0 || t == 0) throw std::invalid_argument("enumerate: m, d, t must be positive");
    const std::size_t basis = static_cast<std::size_t>(d) * m;
    if (n < basis) throw std::invalid_argument("enumerate: need n >= dm");
    enumeration_result res;
    res.expected = lowerbound_family_size(n, m, d, t);
    if (res.expected > budget) throw budget_exceeded(res.expected, budget);

    // Choices per (dependent, p, j) slot: all pairs e <= e' inside axis j.
    std::vector<std::pair<unsigned, unsigned>> local;
    for (unsigned a = 1; a <= m; ++a)
        for (unsigned b = a; b <= m; ++b) local.emplace_back(a, b);
    const std::size_t deps = n - basis;
    const std::size_t per_dep = static_cast<std::size_t>(d) * t;
    std::vector<std::size_t> digit(deps * per_dep, 0);

    lower_bound_spec spec;
    spec.n = n;
    spec.m = m;
    spec.d = d;
    spec.t = t;
    spec.deps.assign(deps, std::vector<std::pair<unsigned, unsigned>>(per_dep));
    std::set<std::vector<std::uint8_t>> profiles;
    for (;;) {
        for (std::size_t s = 0; s < deps; ++s)
            for (std::size_t k = 0; k < per_dep; ++k) {
                const unsigned j = static_cast<unsigned>(k % d);
                const auto [a, b] = local[digit[s * per_dep + k]];
                spec.deps[s][k] = {j * m + a, j * m + b};
            }
        const lower_bound_instance inst = gen_lowerbound(spec);
        const oracle_graph g = oracle_build(inst.rep);
        std::vector<std::uint8_t> profile;
        profile.reserve(deps * basis);
        for (std::size_t s = 0; s < deps; ++s)
            for (std::size_t c = 0; c < basis; ++c) profile.push_back(g.adjacent(basis + s, c) ? 1 : 0);
        profiles.insert(std::move(profile));
        ++res.specs;

        std::size_t pos = 0;
        while (pos < digit.size() && ++digit[pos] == local.size()) digit[pos++] = 0;
        if (pos == digit.size()) break;
    }
    res.distinct = profiles.size();
    return res;
}

}  // namespace tdgraph
