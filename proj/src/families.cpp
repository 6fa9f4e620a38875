#include "regtool/families.hpp"

#include <stdexcept>
#include <string>

#include "regtool/ops.hpp"

namespace regtool {

const char* family_name(Family f) {
    switch (f) {
        case Family::Cycle: return "cycle";
        case Family::Path: return "path";
        case Family::Complete: return "complete";
        case Family::CompleteBipartite: return "complete-bipartite";
        case Family::CompleteMultipartite: return "complete-multipartite";
        case Family::Edgeless: return "edgeless";
        case Family::Octahedron: return "octahedron";
        case Family::Petersen: return "petersen";
        case Family::DisjointUnion: return "disjoint-union";
        case Family::MergedDoubleRC: return "merged-double-rc";
    }
    return "?";
}

std::optional<Family> family_from_name(std::string_view name) {
    for (Family f : {Family::Cycle, Family::Path, Family::Complete, Family::CompleteBipartite,
                     Family::CompleteMultipartite, Family::Edgeless, Family::Octahedron, Family::Petersen,
                     Family::DisjointUnion, Family::MergedDoubleRC})
        if (name == family_name(f)) return f;
    return std::nullopt;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1, got " + std::to_string(n));
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph complete(int n) {
    if (n < 0) throw std::invalid_argument("complete graph needs n >= 0");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph edgeless(int n) {
    if (n < 0) throw std::invalid_argument("edgeless graph needs n >= 0");
    return Graph(n);
}

Graph complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("complete multipartite needs at least one block");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw std::invalid_argument("complete multipartite block sizes must be >= 1");
        n += p;
    }
    std::vector<int> block(n);
    int at = 0;
    for (std::size_t b = 0; b < parts.size(); ++b)
        for (int i = 0; i < parts[b]; ++i) block[at++] = static_cast<int>(b);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (block[u] != block[v]) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs both sides >= 1");
    return complete_multipartite({a, b});
}

Graph octahedron() { return complete_multipartite({2, 2, 2}); }

Graph petersen() {
    // Kneser(5,2): vertices are the 2-subsets of {0..4} in lexicographic
    // order, adjacent iff disjoint.
    std::vector<std::pair<int, int>> subs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) subs.emplace_back(a, b);
    Graph g(10);
    for (int x = 0; x < 10; ++x)
        for (int y = x + 1; y < 10; ++y) {
            auto [a, b] = subs[x];
            auto [c, d] = subs[y];
            if (a != c && a != d && b != c && b != d) g.add_edge(x, y);
        }
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph h(g1.vertex_count() + g2.vertex_count());
    for (auto [u, v] : g1.edges()) h.add_edge(u, v);
    for (auto [u, v] : g2.edges()) h.add_edge(g1.vertex_count() + u, g1.vertex_count() + v);
    return h;
}

namespace {

void expect_params(const FamilySpec& spec, std::size_t count) {
    if (spec.params.size() != count)
        throw std::invalid_argument(std::string(family_name(spec.family)) + " takes " + std::to_string(count) +
                                    " parameter(s), got " + std::to_string(spec.params.size()));
}

}  // namespace

Graph generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::Cycle:
            expect_params(spec, 1);
            return cycle(spec.params[0]);
        case Family::Path:
            expect_params(spec, 1);
            return path(spec.params[0]);
        case Family::Complete:
            expect_params(spec, 1);
            return complete(spec.params[0]);
        case Family::CompleteBipartite:
            expect_params(spec, 2);
            return complete_bipartite(spec.params[0], spec.params[1]);
        case Family::CompleteMultipartite:
            return complete_multipartite(spec.params);
        case Family::Edgeless:
            expect_params(spec, 1);
            return edgeless(spec.params[0]);
        case Family::Octahedron:
            expect_params(spec, 0);
            return octahedron();
        case Family::Petersen:
            expect_params(spec, 0);
            return petersen();
        case Family::DisjointUnion: {
            if (spec.params.empty())
                throw std::invalid_argument("disjoint-union needs at least one part size");
            Graph acc(0);
            for (int s : spec.params) {
                if (s < 1) throw std::invalid_argument("disjoint-union part sizes must be >= 1");
                Graph part = s == 1 ? edgeless(1) : s == 2 ? complete(2) : cycle(s);
                acc = disjoint_union(acc, part);
            }
            return acc;
        }
        case Family::MergedDoubleRC:
            expect_params(spec, 1);
            return merged_double_semi_total(spec.params[0]);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace regtool
