#include "regtool/ops.hpp"

#include <stdexcept>
#include <string>

namespace regtool {

const char* operation_name(OperationKind k) {
    switch (k) {
        case OperationKind::Complement: return "complement";
        case OperationKind::Cartesian: return "cartesian";
        case OperationKind::Direct: return "direct";
        case OperationKind::Composition: return "composition";
        case OperationKind::Strong: return "strong";
        case OperationKind::Join: return "join";
        case OperationKind::LineGraph: return "line";
        case OperationKind::Subdivision: return "subdivision";
        case OperationKind::SemiTotalPoint: return "semitotal";
    }
    return "?";
}

std::optional<OperationKind> operation_from_name(std::string_view name) {
    for (OperationKind k : {OperationKind::Complement, OperationKind::Cartesian, OperationKind::Direct,
                            OperationKind::Composition, OperationKind::Strong, OperationKind::Join,
                            OperationKind::LineGraph, OperationKind::Subdivision, OperationKind::SemiTotalPoint})
        if (name == operation_name(k)) return k;
    return std::nullopt;
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

namespace {

template <typename Rule>
Graph product_graph(const Graph& g1, const Graph& g2, Rule adjacent) {
    int n1 = g1.vertex_count();
    int n2 = g2.vertex_count();
    Graph h(n1 * n2);
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n2; ++j) {
            int x = i * n2 + j;
            for (int i2 = i; i2 < n1; ++i2)
                for (int j2 = (i2 == i ? j + 1 : 0); j2 < n2; ++j2)
                    if (adjacent(i, j, i2, j2)) h.add_edge(x, i2 * n2 + j2);
        }
    return h;
}

}  // namespace

Graph cartesian(const Graph& g1, const Graph& g2) {
    return product_graph(g1, g2, [&](int i, int j, int i2, int j2) {
        return (i == i2 && g2.has_edge(j, j2)) || (j == j2 && g1.has_edge(i, i2));
    });
}

Graph direct_product(const Graph& g1, const Graph& g2) {
    return product_graph(g1, g2, [&](int i, int j, int i2, int j2) {
        return g1.has_edge(i, i2) && g2.has_edge(j, j2);
    });
}

Graph composition(const Graph& g1, const Graph& g2) {
    return product_graph(g1, g2, [&](int i, int j, int i2, int j2) {
        return g1.has_edge(i, i2) || (i == i2 && g2.has_edge(j, j2));
    });
}

Graph strong_product(const Graph& g1, const Graph& g2) {
    return product_graph(g1, g2, [&](int i, int j, int i2, int j2) {
        return (i == i2 && g2.has_edge(j, j2)) || (j == j2 && g1.has_edge(i, i2)) ||
               (g1.has_edge(i, i2) && g2.has_edge(j, j2));
    });
}

Graph join(const Graph& g1, const Graph& g2) {
    int n1 = g1.vertex_count();
    int n2 = g2.vertex_count();
    Graph h(n1 + n2);
    for (auto [u, v] : g1.edges()) h.add_edge(u, v);
    for (auto [u, v] : g2.edges()) h.add_edge(n1 + u, n1 + v);
    for (int u = 0; u < n1; ++u)
        for (int v = 0; v < n2; ++v) h.add_edge(u, n1 + v);
    return h;
}

LineGraphResult line_graph(const Graph& g) {
    LineGraphResult res;
    res.vertex_edges = g.edges();
    int m = static_cast<int>(res.vertex_edges.size());
    res.graph = Graph(m);
    for (int x = 0; x < m; ++x) {
        auto [a, b] = res.vertex_edges[x];
        for (int y = x + 1; y < m; ++y) {
            auto [c, d] = res.vertex_edges[y];
            if (a == c || a == d || b == c || b == d) res.graph.add_edge(x, y);
        }
    }
    return res;
}

Graph subdivision(const Graph& g) {
    int n = g.vertex_count();
    auto es = g.edges();
    Graph h(n + static_cast<int>(es.size()));
    for (int j = 0; j < static_cast<int>(es.size()); ++j) {
        h.add_edge(es[j].first, n + j);
        h.add_edge(es[j].second, n + j);
    }
    return h;
}

Graph semi_total_point(const Graph& g) {
    int n = g.vertex_count();
    auto es = g.edges();
    Graph h(n + static_cast<int>(es.size()));
    for (int j = 0; j < static_cast<int>(es.size()); ++j) {
        h.add_edge(es[j].first, es[j].second);
        h.add_edge(es[j].first, n + j);
        h.add_edge(es[j].second, n + j);
    }
    return h;
}

Graph merged_double_semi_total(int n) {
    if (n < 3) throw std::invalid_argument("merged double semi-total point graph needs n >= 3, got " + std::to_string(n));
    Graph h(3 * n);
    for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        int mid = 2 * n + i;
        h.add_edge(i, j);
        h.add_edge(n + i, n + j);
        h.add_edge(mid, i);
        h.add_edge(mid, j);
        h.add_edge(mid, n + i);
        h.add_edge(mid, n + j);
    }
    return h;
}

}  // namespace regtool
