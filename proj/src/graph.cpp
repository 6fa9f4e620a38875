#include "regtool/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace regtool {

namespace {

std::string pair_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n) : n_(n), words_(n == 0 ? 0 : (n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + pair_str(u, v));
        if (u == v)
            throw std::invalid_argument("loop pair rejected: " + pair_str(u, v));
        g.add_edge(u, v);
    }
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n_) + ")");
}

int Graph::edge_count() const {
    int total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(u)[v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop pair rejected: " + pair_str(u, v));
    row(u)[v / 64] |= std::uint64_t{1} << (v % 64);
    row(v)[u / 64] |= std::uint64_t{1} << (u % 64);
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

int Graph::common_neighbors(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("common_neighbors requires distinct vertices");
    const std::uint64_t* ru = row(u);
    const std::uint64_t* rv = row(v);
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(ru[w] & rv[w]);
    return c;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = r[w];
        while (bits) {
            int b = std::countr_zero(bits);
            out.push_back(w * 64 + b);
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (v > u) out.emplace_back(u, v);
    return out;
}

EdgePair make_edge_pair(const Graph& g, std::pair<int, int> e1, std::pair<int, int> e2) {
    auto norm = [](std::pair<int, int> e) {
        if (e.first > e.second) std::swap(e.first, e.second);
        return e;
    };
    e1 = norm(e1);
    e2 = norm(e2);
    if (!g.has_edge(e1.first, e1.second))
        throw std::invalid_argument("not an edge of the graph: " + pair_str(e1.first, e1.second));
    if (!g.has_edge(e2.first, e2.second))
        throw std::invalid_argument("not an edge of the graph: " + pair_str(e2.first, e2.second));
    if (e1 == e2) throw std::invalid_argument("edge pair must consist of two distinct edges");
    bool disjoint = e1.first != e2.first && e1.first != e2.second &&
                    e1.second != e2.first && e1.second != e2.second;
    return EdgePair{e1, e2, disjoint};
}

int edge_pair_cross_edges(const Graph& g, const EdgePair& p) {
    if (!p.disjoint) throw std::invalid_argument("edge pair must be disjoint");
    auto [a, b] = p.e1;
    auto [c, d] = p.e2;
    return static_cast<int>(g.has_edge(a, c)) + static_cast<int>(g.has_edge(a, d)) +
           static_cast<int>(g.has_edge(b, c)) + static_cast<int>(g.has_edge(b, d));
}

PairPattern pair_connectivity_pattern(const Graph& g, const EdgePair& p) {
    if (!p.disjoint) throw std::invalid_argument("edge pair must be disjoint");
    auto [a, b] = p.e1;
    auto [c, d] = p.e2;
    int cross = edge_pair_cross_edges(g, p);
    PairPattern pat;
    pat.in_p4 = cross >= 1;
    pat.in_c4 = (g.has_edge(a, c) && g.has_edge(b, d)) || (g.has_edge(a, d) && g.has_edge(b, c));
    pat.in_diamond = cross >= 3;  // e1, e2 plus 3 cross edges = K4 minus an edge
    pat.in_k4 = cross == 4;
    return pat;
}

std::optional<int> regular_degree(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    int k = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

bool is_triangle_free(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.common_neighbors(u, v) > 0) return false;
    return true;
}

bool is_k4_free(const Graph& g) {
    for (auto [u, v] : g.edges()) {
        std::vector<int> shared;
        for (int w : g.neighbors(u))
            if (w != v && g.has_edge(w, v)) shared.push_back(w);
        for (std::size_t i = 0; i < shared.size(); ++i)
            for (std::size_t j = i + 1; j < shared.size(); ++j)
                if (g.has_edge(shared[i], shared[j])) return false;
    }
    return true;
}

bool is_diamond_free(const Graph& g) {
    // A diamond subgraph exists iff some edge has two common neighbors.
    for (auto [u, v] : g.edges())
        if (g.common_neighbors(u, v) >= 2) return false;
    return true;
}

bool is_c4_free(const Graph& g) {
    // A C4 subgraph exists iff some vertex pair has two common neighbors.
    int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.common_neighbors(u, v) >= 2) return false;
    return true;
}

bool is_complete(const Graph& g) {
    int n = g.vertex_count();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != n - 1) return false;
    return true;
}

bool is_edgeless(const Graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 0) return false;
    return true;
}

std::vector<std::vector<int>> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.vertex_count() == 0 || components(g).size() == 1;
}

bool is_disjoint_union_of_cycles(const Graph& g) {
    // 2-regular <=> every component is a cycle on >= 3 vertices.
    if (g.vertex_count() == 0) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool is_disjoint_union_of_triangles_and_edges(const Graph& g) {
    for (const auto& comp : components(g)) {
        int m = 0;
        for (int u : comp)
            for (int v : g.neighbors(u))
                if (v > u) ++m;
        bool edge = comp.size() == 2 && m == 1;
        bool triangle = comp.size() == 3 && m == 3;
        if (!edge && !triangle) return false;
    }
    return true;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    int n = g.vertex_count();
    if (static_cast<int>(perm.size()) != n)
        throw std::invalid_argument("permutation size does not match vertex count");
    std::vector<bool> hit(n, false);
    for (int p : perm) {
        if (p < 0 || p >= n || hit[p]) throw std::invalid_argument("not a permutation");
        hit[p] = true;
    }
    Graph h(n);
    for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

namespace {

// Iterated partition refinement seeded by (degree, triangle count). Colors
// are canonical ranks: equal color vectors across two graphs mean matching
// refinement classes. The triangle seed splits most regular graphs, which
// degree alone never does.
std::vector<int> refinement_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(n);
    {
        std::vector<std::pair<int, int>> seed(n);
        for (int v = 0; v < n; ++v) {
            auto nb = g.neighbors(v);
            int triangles = 0;
            for (std::size_t i = 0; i < nb.size(); ++i)
                for (std::size_t j = i + 1; j < nb.size(); ++j)
                    if (g.has_edge(nb[i], nb[j])) ++triangles;
            seed[v] = {static_cast<int>(nb.size()), triangles};
        }
        std::vector<std::pair<int, int>> distinct(seed);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), seed[v]) - distinct.begin());
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> neigh;
            for (int u : g.neighbors(v)) neigh.push_back(color[u]);
            std::sort(neigh.begin(), neigh.end());
            sig[v].push_back(color[v]);
            sig[v].insert(sig[v].end(), neigh.begin(), neigh.end());
        }
        std::vector<std::vector<int>> distinct(sig);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count()) return false;
    if (a.edge_count() != b.edge_count()) return false;

    std::vector<int> ca = refinement_colors(a);
    std::vector<int> cb = refinement_colors(b);
    {
        std::vector<int> sa(ca), sb(cb);
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    // Map vertices of a in order of ascending class size (most constrained first).
    int classes = 0;
    for (int c : ca) classes = std::max(classes, c + 1);
    std::vector<int> class_size(classes, 0);
    for (int c : ca) ++class_size[c];
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (class_size[ca[x]] != class_size[ca[y]]) return class_size[ca[x]] < class_size[ca[y]];
        if (ca[x] != ca[y]) return ca[x] < ca[y];
        return x < y;
    });

    std::vector<int> image(n, -1);
    std::vector<bool> used(n, false);
    std::vector<std::vector<int>> cands(classes);
    for (int v = 0; v < n; ++v) cands[cb[v]].push_back(v);

    auto backtrack = [&](auto&& self, int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        for (int w : cands[ca[v]]) {
            if (used[w]) continue;
            bool ok = true;
            for (int j = 0; j < idx && ok; ++j) {
                int v2 = order[j];
                if (a.has_edge(v, v2) != b.has_edge(w, image[v2])) ok = false;
            }
            if (!ok) continue;
            image[v] = w;
            used[w] = true;
            if (self(self, idx + 1)) return true;
            used[w] = false;
            image[v] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

namespace {

struct CanonState {
    const Graph* g = nullptr;
    int n = 0;
    std::vector<int> color;           // refinement color per vertex
    std::vector<int> pos_color;       // required color per position (ascending)
    std::vector<int> placed;          // vertices placed at positions 0..p-1
    std::vector<bool> used;
    std::vector<std::uint8_t> cur;    // column-major upper-triangle bits
    std::vector<std::uint8_t> best;
    bool have_best = false;

    void dfs(int p, bool tight) {
        if (p == n) {
            // tight only tracks the best seen when this path forked off it;
            // best may have improved below that fork, so compare outright
            if (!have_best || cur < best) best = cur;
            have_best = true;
            return;
        }
        std::size_t base = cur.size();
        for (int v = 0; v < n; ++v) {
            if (used[v] || color[v] != pos_color[p]) continue;
            bool sub_tight = tight;
            bool prune = false;
            for (int j = 0; j < p; ++j) {
                std::uint8_t bit = g->has_edge(placed[j], v) ? 1 : 0;
                cur.push_back(bit);
                if (have_best && sub_tight) {
                    std::uint8_t bb = best[base + static_cast<std::size_t>(j)];
                    if (bit > bb) {
                        prune = true;
                        // keep the column length consistent before unwinding
                        cur.resize(base + static_cast<std::size_t>(j) + 1);
                        break;
                    }
                    if (bit < bb) sub_tight = false;
                }
            }
            if (!prune) {
                placed.push_back(v);
                used[v] = true;
                dfs(p + 1, sub_tight);
                used[v] = false;
                placed.pop_back();
            }
            cur.resize(base);
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    int n = g.vertex_count();
    if (n > 255) throw std::invalid_argument("canonical_form supports n <= 255");

    CanonState st;
    st.g = &g;
    st.n = n;
    st.color = refinement_colors(g);
    st.pos_color = st.color;
    std::sort(st.pos_color.begin(), st.pos_color.end());
    st.used.assign(n, false);
    st.cur.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    st.dfs(0, true);

    std::string out;
    out.push_back(static_cast<char>(static_cast<unsigned char>(n)));
    std::uint8_t acc = 0;
    int nbits = 0;
    for (std::uint8_t b : st.best) {
        acc = static_cast<std::uint8_t>((acc << 1) | b);
        if (++nbits == 8) {
            out.push_back(static_cast<char>(acc));
            acc = 0;
            nbits = 0;
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(acc << (8 - nbits)));
    return out;
}

}  // namespace regtool
