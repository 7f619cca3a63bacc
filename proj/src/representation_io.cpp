#include "tdgraph/representation_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace tdgraph {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        const std::size_t b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > b) out.push_back(s.substr(b, i - b));
    }
    return out;
}

template <class Int>
Int parse_int(std::string_view tok, std::size_t line) {
    Int v{};
    const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw parse_error(line, "malformed integer '" + std::string(tok) + "'");
    return v;
}

}  // namespace

representation parse_representation(std::string_view text) {
    representation rep;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    std::vector<label_t> labels;
    bool any_label = false;

    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const std::string_view raw =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        const bool at_end = nl == std::string_view::npos;
        pos = at_end ? text.size() + 1 : nl + 1;
        ++line_no;
        // A final empty fragment after the last newline is not a line.
        if (at_end && raw.empty()) break;

        const std::string_view stripped = trim(raw);
        if (!stripped.empty() && stripped.front() == '#') continue;
        const auto hash = raw.find('#');
        const std::string_view body = trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));

        if (!have_header) {
            if (body.empty()) continue;
            const auto toks = split_ws(body);
            if (toks.size() != 3) throw parse_error(line_no, "header must be 'n t d'");
            rep.n = parse_int<std::size_t>(toks[0], line_no);
            rep.t = parse_int<unsigned>(toks[1], line_no);
            rep.d = parse_int<unsigned>(toks[2], line_no);
            if (rep.n == 0 || rep.t == 0 || rep.d == 0)
                throw parse_error(line_no, "n, t and d must be positive");
            rep.boxes.reserve(rep.n);
            have_header = true;
            continue;
        }

        if (rep.boxes.size() == rep.n) {
            if (!body.empty()) throw parse_error(line_no, "more than n vertex lines");
            continue;
        }

        std::string_view rest = body;
        label_t label = static_cast<label_t>(rep.boxes.size()) + 1;
        if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
            label = parse_int<label_t>(trim(rest.substr(0, colon)), line_no);
            rest = trim(rest.substr(colon + 1));
            any_label = true;
        }
        std::vector<box> boxes;
        if (!rest.empty()) {
            std::size_t from = 0;
            for (;;) {
                const auto semi = rest.find(';', from);
                const std::string_view seg = trim(
                    rest.substr(from, semi == std::string_view::npos ? std::string_view::npos
                                                                     : semi - from));
                if (seg.empty()) throw parse_error(line_no, "malformed line: empty box");
                const auto toks = split_ws(seg);
                if (toks.size() != 2 * static_cast<std::size_t>(rep.d))
                    throw parse_error(line_no, "dimension mismatch: expected " +
                                                   std::to_string(2 * rep.d) +
                                                   " integers per box, got " +
                                                   std::to_string(toks.size()));
                box b;
                b.dims.resize(rep.d);
                for (unsigned j = 0; j < rep.d; ++j) {
                    b.dims[j].lo = parse_int<coord_t>(toks[2 * j], line_no);
                    b.dims[j].hi = parse_int<coord_t>(toks[2 * j + 1], line_no);
                    if (b.dims[j].lo > b.dims[j].hi)
                        throw parse_error(line_no, "lo > hi in dimension " + std::to_string(j + 1));
                }
                boxes.push_back(std::move(b));
                if (boxes.size() > rep.t)
                    throw parse_error(line_no, "t exceeded: more than " + std::to_string(rep.t) +
                                                   " boxes");
                if (semi == std::string_view::npos) break;
                from = semi + 1;
            }
        }
        rep.boxes.push_back(std::move(boxes));
        labels.push_back(label);
    }
    if (!have_header) throw parse_error(line_no, "missing header 'n t d'");
    if (rep.boxes.size() != rep.n)
        throw parse_error(line_no, "expected " + std::to_string(rep.n) + " vertex lines, got " +
                                       std::to_string(rep.boxes.size()));
    if (any_label) rep.labels = std::move(labels);
    try {
        check_structure(rep);
    } catch (const invalid_representation& e) {
        throw parse_error(line_no, e.what());
    }
    return rep;
}

representation read_representation(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_representation(ss.str());
}

representation load_representation(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_representation(in);
}

std::string format_representation(const representation& rep) {
    std::ostringstream os;
    os << rep.n << ' ' << rep.t << ' ' << rep.d << '\n';
    const bool labeled = rep.has_custom_labels();
    for (std::size_t x = 0; x < rep.n; ++x) {
        if (labeled) os << rep.label_of(x) << ':';
        for (std::size_t p = 0; p < rep.boxes[x].size(); ++p) {
            if (p > 0) os << " ;";
            bool first = p == 0 && !labeled;
            for (const auto& iv : rep.boxes[x][p].dims) {
                os << (first ? "" : " ") << iv.lo << ' ' << iv.hi;
                first = false;
            }
        }
        os << '\n';
    }
    return os.str();
}

void save_representation(const representation& rep, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << format_representation(rep);
    if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace tdgraph
