#ifndef REGTOOL_IO_HPP
#define REGTOOL_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "regtool/graph.hpp"

namespace regtool {

// Standard graph6 line for n <= 62 (short-form header). Deterministic;
// decode(encode(G)) is vertex-order-identical to G.
std::string encode_graph6(const Graph& g);

// Inverse of encode_graph6 on its range. Leading/trailing whitespace is
// ignored; malformed input is rejected with the offending position.
Graph decode_graph6(std::string_view text);

// DOT `graph { ... }` with one node statement per vertex and one line per
// edge in lexicographic order. Labels, when given, must have size n.
std::string export_dot(const Graph& g, const std::vector<std::string>* labels = nullptr);

// Edge-list text: first line "n m", then m lines "u v". Read is
// whitespace-tolerant; write emits canonical single-space lines, LF only.
Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace regtool

#endif
