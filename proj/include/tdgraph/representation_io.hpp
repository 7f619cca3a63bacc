#pragma once

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tdgraph/representation.hpp"

namespace tdgraph {

class parse_error : public std::runtime_error {
public:
    parse_error(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Text format:
//
//   # comment
//   n t d
//   l_1 r_1 ... l_d r_d ; l_1 r_1 ... l_d r_d     <- vertex 1, boxes split by ';'
//                                                 <- empty line: vertex with no box
//   7: l_1 r_1 ...                                <- optional "label:" prefix
//
// Lines holding only a comment are skipped; '#' starts a trailing comment.
representation parse_representation(std::string_view text);
representation read_representation(std::istream& in);
representation load_representation(const std::string& path);

std::string format_representation(const representation& rep);
void save_representation(const representation& rep, const std::string& path);

}  // namespace tdgraph
