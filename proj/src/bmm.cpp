#include "tdgraph/bmm.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "tdgraph/normalize.hpp"
#include "tdgraph/query_engine.hpp"

namespace tdgraph {

bool bool_matrix::row_nonzero(std::size_t r) const {
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) return true;
    return false;
}

bool_matrix bool_matrix::transposed() const {
    bool_matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.set(c, r, get(r, c));
    return t;
}

bool_matrix read_matrix(std::istream& in) {
    long long rows = 0, cols = 0;
    if (!(in >> rows >> cols) || rows <= 0 || cols <= 0)
        throw std::invalid_argument("matrix: header must be two positive integers");
    bool_matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    std::string row;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!(in >> row)) throw std::invalid_argument("matrix: expected " + std::to_string(rows) + " rows");
        if (row.size() != m.cols())
            throw std::invalid_argument("matrix: row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                                        " entries, expected " + std::to_string(cols));
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] != '0' && row[c] != '1')
                throw std::invalid_argument("matrix: row " + std::to_string(r + 1) + " has a non 0/1 character");
            m.set(r, c, row[c] == '1');
        }
    }
    if (in >> row) throw std::invalid_argument("matrix: trailing data after last row");
    return m;
}

bool_matrix load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_matrix(in);
}

std::string format_matrix(const bool_matrix& m) {
    std::ostringstream out;
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (m.get(r, c) ? '1' : '0');
        out << '\n';
    }
    return out.str();
}

bool_matrix multiply_direct(const bool_matrix& a, const bool_matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("multiply: dimension mismatch");
    bool_matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (a.get(i, k))
                for (std::size_t j = 0; j < b.cols(); ++j)
                    if (b.get(k, j)) out.set(i, j);
    return out;
}

representation build_GA(const bool_matrix& a) {
    if (a.rows() == 0 || a.cols() == 0) throw std::invalid_argument("build_GA: empty matrix");
    representation rep;
    rep.n = a.rows();
    rep.t = static_cast<unsigned>(a.cols());
    rep.d = 1;
    rep.boxes.resize(a.rows());
    coord_t s = 1;
    for (std::size_t p = 0; p < a.cols(); ++p) {
        coord_t ones = 0;
        for (std::size_t v = 0; v < a.rows(); ++v)
            if (a.get(v, p)) ++ones;
        coord_t l = 0;
        for (std::size_t v = 0; v < a.rows(); ++v)
            if (a.get(v, p)) {
                ++l;
                box b;
                b.dims.push_back({s + l - 1, s + ones + l - 1});
                rep.boxes[v].push_back(std::move(b));
            }
        s += 2 * ones;
    }
    check_encodable(rep);
    return rep;
}

bool_matrix multiply_via_neighbors(const bool_matrix& a, const encoded_graph& ga) {
    if (ga.n() != a.rows()) throw std::invalid_argument("multiply_via_neighbors: graph does not match matrix");
    const std::size_t n = a.rows();
    bool_matrix out(n, n);
    query_engine engine(ga);
    for (vertex_t u = 0; u < n; ++u) {
        const std::size_t ru = ga.vertex_order()[u];
        for (vertex_t v : engine.neighbor(u)) out.set(ru, ga.vertex_order()[v]);
    }
    for (std::size_t r = 0; r < n; ++r) out.set(r, r, a.row_nonzero(r));
    return out;
}

bool_matrix multiply_via_neighbors(const bool_matrix& a) {
    return multiply_via_neighbors(a, encode(normalize(build_GA(a))));
}

bool_matrix multiply_BC(const bool_matrix& b, const bool_matrix& c) {
    if (b.cols() != c.rows())
        throw std::invalid_argument("multiply_BC: B is " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                                    " but C is " + std::to_string(c.rows()) + "x" + std::to_string(c.cols()));
    const std::size_t n = b.rows(), k = b.cols(), n2 = c.cols();
    bool_matrix a(n + n2, k);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t x = 0; x < k; ++x) a.set(r, x, b.get(r, x));
    for (std::size_t r = 0; r < n2; ++r)
        for (std::size_t x = 0; x < k; ++x) a.set(n + r, x, c.get(x, r));
    const bool_matrix m = multiply_via_neighbors(a);
    bool_matrix out(n, n2);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t x = 0; x < n2; ++x) out.set(r, x, m.get(r, n + x));
    return out;
}

}  // namespace tdgraph
