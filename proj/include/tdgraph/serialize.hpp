#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdgraph/encoded_graph.hpp"

namespace tdgraph {

class artifact_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Binary layout (little endian):
//   "TDGRAPH1" u32 version u32 flags u64 n u32 t u32 d u64 real_endpoints u64 spacing
//   sections: u32 tag u64 length payload
//   u32 crc32 of everything before it
// Only the raw components are written; rank/select and minimum indexes are
// rebuilt on load. Output is a pure function of the encoded graph.
std::vector<std::uint8_t> serialize_graph(const encoded_graph& g);
encoded_graph deserialize_graph(const std::vector<std::uint8_t>& bytes);

void save_graph(const encoded_graph& g, const std::string& path);
encoded_graph load_graph(const std::string& path);

}  // namespace tdgraph
