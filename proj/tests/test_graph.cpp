#include <set>
#include <stdexcept>

#include "doctest.h"

#include "regtool/census.hpp"
#include "regtool/families.hpp"
#include "regtool/graph.hpp"
#include "regtool/ops.hpp"
#include "test_util.hpp"

using namespace regtool;
using regtool::test::random_graph;
using regtool::test::random_permutation;

TEST_CASE("from_edge_list basics and errors") {
    Graph k3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(k3.edge_count() == 3);
    CHECK(k3.has_edge(0, 2));

    Graph k1 = Graph::from_edge_list(1, {});
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);

    Graph c4 = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);

    // duplicates collapse
    Graph dup = Graph::from_edge_list(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, {{0, 3}}), doctest::Contains("(0,3)"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, {{1, 1}}), doctest::Contains("(1,1)"), std::invalid_argument);
}

TEST_CASE("degree and common neighbors") {
    CHECK(complete(3).degree(0) == 2);
    Graph octa = join(cycle(4), edgeless(2));
    for (int v = 0; v < 6; ++v) CHECK(octa.degree(v) == 4);
    CHECK(petersen().degree(7) == 3);

    CHECK(complete(4).common_neighbors(0, 1) == 2);
    for (auto [u, v] : octa.edges()) CHECK(octa.common_neighbors(u, v) == 2);

    Graph pet = petersen();
    for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v)
            if (!pet.has_edge(u, v)) CHECK(pet.common_neighbors(u, v) == 1);

    CHECK_THROWS_AS((void)pet.common_neighbors(3, 3), std::invalid_argument);
    CHECK_THROWS_AS((void)pet.degree(10), std::out_of_range);
}

TEST_CASE("regular_degree") {
    CHECK(regular_degree(cycle(5)) == 2);
    CHECK(!regular_degree(complete_bipartite(1, 3)).has_value());
    CHECK(regular_degree(merged_double_semi_total(3)) == 4);
    CHECK(regular_degree(Graph(0)) == 0);
    CHECK(regular_degree(edgeless(4)) == 0);
}

TEST_CASE("edge pair cross edges") {
    Graph k4 = complete(4);
    CHECK(edge_pair_cross_edges(k4, make_edge_pair(k4, {0, 1}, {2, 3})) == 4);

    Graph c4 = cycle(4);
    CHECK(edge_pair_cross_edges(c4, make_edge_pair(c4, {0, 1}, {2, 3})) == 2);

    Graph two_k2 = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK(edge_pair_cross_edges(two_k2, make_edge_pair(two_k2, {0, 1}, {2, 3})) == 0);

    auto shared = make_edge_pair(k4, {0, 1}, {1, 2});
    CHECK(!shared.disjoint);
    CHECK_THROWS_AS((void)edge_pair_cross_edges(k4, shared), std::invalid_argument);
    CHECK_THROWS_AS((void)make_edge_pair(c4, {0, 2}, {1, 2}), std::invalid_argument);  // (0,2) not an edge
    CHECK_THROWS_AS((void)make_edge_pair(c4, {0, 1}, {1, 0}), std::invalid_argument);  // same edge twice
}

TEST_CASE("pair connectivity pattern") {
    Graph c4 = cycle(4);
    CHECK(pair_connectivity_pattern(c4, make_edge_pair(c4, {0, 1}, {2, 3})) ==
          PairPattern{true, true, false, false});

    Graph p4 = path(4);
    CHECK(pair_connectivity_pattern(p4, make_edge_pair(p4, {0, 1}, {2, 3})) ==
          PairPattern{true, false, false, false});

    Graph k4 = complete(4);
    CHECK(pair_connectivity_pattern(k4, make_edge_pair(k4, {0, 1}, {2, 3})) ==
          PairPattern{true, true, true, true});
}

TEST_CASE("pattern predicates") {
    Graph pet = petersen();
    CHECK(is_triangle_free(pet));
    CHECK(is_c4_free(pet));

    Graph k4 = complete(4);
    CHECK(!is_k4_free(k4));
    CHECK(!is_diamond_free(k4));

    Graph c4 = cycle(4);
    CHECK(!is_c4_free(c4));
    CHECK(is_diamond_free(c4));
    CHECK(is_k4_free(c4));

    Graph diamond = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(!is_diamond_free(diamond));
    CHECK(is_k4_free(diamond));
}

TEST_CASE("structural predicates") {
    CHECK(is_complete(complete(5)));
    CHECK(!is_complete(cycle(4)));
    CHECK(is_edgeless(edgeless(3)));
    CHECK(is_edgeless(Graph(0)));

    Graph c3c5 = disjoint_union(cycle(3), cycle(5));
    CHECK(is_disjoint_union_of_cycles(c3c5));
    CHECK(!is_connected(c3c5));

    Graph k3k2 = disjoint_union(complete(3), complete(2));
    CHECK(is_disjoint_union_of_triangles_and_edges(k3k2));
    CHECK(!is_disjoint_union_of_cycles(k3k2));

    Graph p3 = path(3);
    CHECK(!is_complete(p3));
    CHECK(!is_edgeless(p3));
    CHECK(!is_disjoint_union_of_cycles(p3));
    CHECK(!is_disjoint_union_of_triangles_and_edges(p3));

    CHECK(components(c3c5).size() == 2);
    CHECK(is_connected(petersen()));
}

TEST_CASE("isomorphism") {
    CHECK(are_isomorphic(cycle(5), complement(cycle(5))));
    CHECK(!are_isomorphic(path(4), complete_bipartite(1, 3)));
    CHECK(are_isomorphic(Graph(0), Graph(0)));

    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(1 + t % 8, 0.5, rng);
        Graph h = relabel(g, random_permutation(g.vertex_count(), rng));
        CHECK(are_isomorphic(g, h));
    }
}

TEST_CASE("canonical form") {
    std::mt19937 rng(11);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(1 + t % 9, 0.4, rng);
        Graph h = relabel(g, random_permutation(g.vertex_count(), rng));
        CHECK(canonical_form(g) == canonical_form(h));
    }

    CHECK(canonical_form(complete(3)) != canonical_form(path(3)));

    // canonical forms separate exactly the isomorphism classes of all labeled
    // graphs: 1, 2, 4, 11, 34, 156 classes for n = 1..6
    const unsigned expected[] = {1, 1, 2, 4, 11, 34, 156};
    for (int n = 1; n <= 6; ++n) {
        std::vector<std::pair<int, int>> cells;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) cells.emplace_back(u, v);
        std::set<std::string> forms;
        for (unsigned long mask = 0; mask < (1ul << cells.size()); ++mask) {
            Graph g(n);
            for (std::size_t i = 0; i < cells.size(); ++i)
                if (mask >> i & 1) g.add_edge(cells[i].first, cells[i].second);
            forms.insert(canonical_form(g));
        }
        CHECK(forms.size() == expected[n]);
    }
}

TEST_CASE("canonical form is invariant on regular graphs") {
    // regular graphs refine to a single color class, which exercises the
    // deep search; a stale-best bug here once produced duplicate census rows
    std::mt19937 rng(67);
    for (const Graph& g : enumerate_regular(9, 4, true)) {
        std::string canon = canonical_form(g);
        for (int t = 0; t < 3; ++t)
            CHECK(canonical_form(relabel(g, random_permutation(9, rng))) == canon);
    }
}

TEST_CASE("are_isomorphic agrees with canonical_form") {
    std::mt19937 rng(13);
    for (int t = 0; t < 120; ++t) {
        int n = 1 + t % 7;
        Graph a = random_graph(n, 0.5, rng);
        Graph b = random_graph(n, 0.5, rng);
        CHECK(are_isomorphic(a, b) == (canonical_form(a) == canonical_form(b)));
    }
}

TEST_CASE("common neighbor count properties") {
    std::mt19937 rng(17);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(2 + t % 9, 0.5, rng);
        int n = g.vertex_count();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                CHECK(g.common_neighbors(u, v) == g.common_neighbors(v, u));

        auto k = regular_degree(g);
        if (k) {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    if (g.has_edge(u, v))
                        CHECK(g.common_neighbors(u, v) <= *k - 1);
                    else
                        CHECK(g.common_neighbors(u, v) <= *k);
                }
        }
    }
}

TEST_CASE("cross edges equal line graph common neighbors") {
    std::mt19937 rng(19);
    int checked = 0;
    for (int t = 0; t < 60 && checked < 200; ++t) {
        Graph g = random_graph(4 + t % 6, 0.5, rng);
        LineGraphResult lg = line_graph(g);
        int m = static_cast<int>(lg.vertex_edges.size());
        for (int x = 0; x < m; ++x)
            for (int y = x + 1; y < m; ++y) {
                EdgePair p = make_edge_pair(g, lg.vertex_edges[x], lg.vertex_edges[y]);
                if (!p.disjoint) continue;
                CHECK(edge_pair_cross_edges(g, p) == lg.graph.common_neighbors(x, y));
                ++checked;
            }
    }
    CHECK(checked >= 100);
}
