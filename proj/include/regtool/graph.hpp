#ifndef REGTOOL_GRAPH_HPP
#define REGTOOL_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace regtool {

// Simple undirected graph on vertex labels 0..n-1, no loops, no multi-edges.
// Adjacency is stored as one bit-row per vertex so degree and common-neighbor
// counts are popcounts of rows and row intersections. Values are cheap to copy
// and never mutated by the library functions that take them by const reference.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Rejects out-of-range endpoints and loop pairs, naming the offending pair.
    // Duplicate pairs collapse.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);

    int degree(int v) const;
    int common_neighbors(int u, int v) const;

    std::vector<int> neighbors(int v) const;
    // Edges as (min,max) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;
    const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * words_; }
    std::uint64_t* row(int v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }

    int n_ = 0;
    int words_ = 0;
    std::vector<std::uint64_t> bits_;
};

// Two distinct edges of an ambient graph; disjoint means they share no vertex.
struct EdgePair {
    std::pair<int, int> e1;
    std::pair<int, int> e2;
    bool disjoint = false;
};

// Validates that both pairs are edges of g and e1 != e2.
EdgePair make_edge_pair(const Graph& g, std::pair<int, int> e1, std::pair<int, int> e2);

// Count of edges of g among the four cross pairs {ac,ad,bc,bd} of a disjoint
// edge pair {a,b},{c,d}. Equals the line-graph common-neighbor count of the
// two edge-vertices. Rejects non-disjoint pairs.
int edge_pair_cross_edges(const Graph& g, const EdgePair& p);

struct PairPattern {
    bool in_p4 = false;
    bool in_c4 = false;
    bool in_diamond = false;
    bool in_k4 = false;
    bool operator==(const PairPattern&) const = default;
};

// Connectivity pattern of a disjoint edge pair: with cross edges X,
// in_p4 <=> |X| >= 1; in_c4 <=> X contains a perfect matching between the two
// edges; in_diamond <=> the four vertices carry >= 5 edges; in_k4 <=> |X| = 4.
PairPattern pair_connectivity_pattern(const Graph& g, const EdgePair& p);

// k if every vertex has degree k, absent otherwise. n = 0 counts as 0-regular.
std::optional<int> regular_degree(const Graph& g);

// Subgraph (not induced) containment tests.
bool is_triangle_free(const Graph& g);
bool is_k4_free(const Graph& g);
bool is_diamond_free(const Graph& g);   // diamond = K4 minus one edge
bool is_c4_free(const Graph& g);

bool is_complete(const Graph& g);
bool is_edgeless(const Graph& g);
bool is_connected(const Graph& g);
std::vector<std::vector<int>> components(const Graph& g);

// Every component a cycle on >= 3 vertices; false for the empty graph.
bool is_disjoint_union_of_cycles(const Graph& g);
// Every component a K3 or a K2; true for the empty graph.
bool is_disjoint_union_of_triangles_and_edges(const Graph& g);

// New graph with edge (perm[u],perm[v]) for every edge (u,v); perm must be a
// permutation of 0..n-1.
Graph relabel(const Graph& g, const std::vector<int>& perm);

// Exact isomorphism test by backtracking over degree-refinement classes.
// Exhaustive-search scale: intended for n <= 10 or so, slow above that.
bool are_isomorphic(const Graph& a, const Graph& b);

// Relabeling-invariant byte string: minimum upper-triangle encoding over all
// vertex permutations compatible with the degree-refinement partition.
// Equal byte strings <=> isomorphic graphs. Intended for n <= 10 or so.
std::string canonical_form(const Graph& g);

}  // namespace regtool

#endif
