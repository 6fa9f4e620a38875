#ifndef REGTOOL_FAMILIES_HPP
#define REGTOOL_FAMILIES_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "regtool/graph.hpp"

namespace regtool {

enum class Family {
    Cycle,
    Path,
    Complete,
    CompleteBipartite,
    CompleteMultipartite,
    Edgeless,
    Octahedron,
    Petersen,
    DisjointUnion,
    MergedDoubleRC,
};

// Family-specific integer parameters:
//   Cycle n (n >= 3), Path n (n >= 1), Complete n, Edgeless n,
//   CompleteBipartite a b, CompleteMultipartite p1 p2 ... (block sizes),
//   Octahedron / Petersen (none),
//   DisjointUnion s1 s2 ... where a part of size 1 is K1, size 2 is K2 and
//   size m >= 3 is the cycle C_m,
//   MergedDoubleRC n (n >= 3).
struct FamilySpec {
    Family family = Family::Cycle;
    std::vector<int> params;
};

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// Deterministic labeled graph per family; invalid parameters are rejected
// with a family-specific message. Labeling: cycles 0-1-...-(n-1)-0, paths in
// index order, bipartite/multipartite block by block, Petersen as Kneser(5,2)
// over the 2-subsets of {0..4} in lexicographic order.
Graph generate(const FamilySpec& spec);

// g2's labels shifted by g1's vertex count.
Graph disjoint_union(const Graph& g1, const Graph& g2);

Graph cycle(int n);
Graph path(int n);
Graph complete(int n);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(const std::vector<int>& parts);
Graph edgeless(int n);
Graph octahedron();
Graph petersen();

}  // namespace regtool

#endif
