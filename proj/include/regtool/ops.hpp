#ifndef REGTOOL_OPS_HPP
#define REGTOOL_OPS_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "regtool/graph.hpp"

namespace regtool {

enum class OperationKind {
    Complement,
    Cartesian,
    Direct,
    Composition,
    Strong,
    Join,
    LineGraph,
    Subdivision,
    SemiTotalPoint,
};

const char* operation_name(OperationKind k);
std::optional<OperationKind> operation_from_name(std::string_view name);

// Same vertex set; edge iff non-edge in g.
Graph complement(const Graph& g);

// All four products index vertex (i,j) as i * n2 + j; verifiers and tests
// depend on this convention.
Graph cartesian(const Graph& g1, const Graph& g2);     // move in exactly one coordinate
Graph direct_product(const Graph& g1, const Graph& g2);// move in both coordinates
Graph composition(const Graph& g1, const Graph& g2);   // lexicographic: first coordinate dominates
Graph strong_product(const Graph& g1, const Graph& g2);// union of cartesian and direct edges

// g1 keeps labels 0..n1-1, g2 shifted by n1, all cross pairs joined.
Graph join(const Graph& g1, const Graph& g2);

struct LineGraphResult {
    Graph graph;
    // vertex i of the line graph represents edges[i] of the input,
    // in lexicographic edge order.
    std::vector<std::pair<int, int>> vertex_edges;
};

// Vertices are the edges of g; adjacent iff the edges share an endpoint.
LineGraphResult line_graph(const Graph& g);

// Each edge replaced by a path of length two through a fresh midpoint vertex;
// original vertices keep their labels, midpoint of the j-th edge (lex order)
// is vertex n + j.
Graph subdivision(const Graph& g);

// Like subdivision, but the original edges are kept.
Graph semi_total_point(const Graph& g);

// Two copies of the semi-total point graph of C_n with the i-th degree-2
// vertex (the midpoint of cycle edge (i, i+1 mod n)) of the copies identified.
// Labels: 0..n-1 first cycle, n..2n-1 second cycle, 2n+i the shared midpoints.
Graph merged_double_semi_total(int n);

}  // namespace regtool

#endif
