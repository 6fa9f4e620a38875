#include <stdexcept>

#include "doctest.h"

#include "regtool/classify.hpp"
#include "regtool/families.hpp"
#include "regtool/graph.hpp"
#include "regtool/ops.hpp"

using namespace regtool;

TEST_CASE("generate dispatch and validation") {
    CHECK(generate({Family::Complete, {4}}) == complete(4));
    CHECK(generate({Family::Cycle, {5}}) == cycle(5));
    CHECK(generate({Family::CompleteBipartite, {2, 3}}) == complete_bipartite(2, 3));
    CHECK(generate({Family::Petersen, {}}) == petersen());

    CHECK_THROWS_WITH_AS((void)generate({Family::Cycle, {2}}), doctest::Contains("n >= 3"),
                         std::invalid_argument);
    CHECK_THROWS_AS((void)generate({Family::Cycle, {}}), std::invalid_argument);
    CHECK_THROWS_AS((void)generate({Family::Octahedron, {1}}), std::invalid_argument);
    CHECK_THROWS_AS((void)generate({Family::CompleteBipartite, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS((void)generate({Family::DisjointUnion, {}}), std::invalid_argument);
}

TEST_CASE("family names round trip") {
    for (Family f : {Family::Cycle, Family::Path, Family::Complete, Family::CompleteBipartite,
                     Family::CompleteMultipartite, Family::Edgeless, Family::Octahedron, Family::Petersen,
                     Family::DisjointUnion, Family::MergedDoubleRC})
        CHECK(family_from_name(family_name(f)) == f);
    CHECK(!family_from_name("moebius").has_value());
}

TEST_CASE("octahedron") {
    CHECK(are_isomorphic(octahedron(), join(cycle(4), edgeless(2))));
    ClassificationReport r = classify(octahedron());
    CHECK(r.edge_regular == Cond{CondStatus::Yes, 2});
    CHECK(r.regular_k == 4);
}

TEST_CASE("petersen") {
    ClassificationReport r = classify(petersen());
    REQUIRE(r.srg.has_value());
    CHECK(r.srg->n == 10);
    CHECK(r.srg->k == 3);
    CHECK(r.srg->lambda == 0);
    CHECK(r.srg->mu == 1);
}

TEST_CASE("cycles are 2-regular and connected") {
    for (int n = 3; n <= 9; ++n) {
        Graph c = cycle(n);
        CHECK(regular_degree(c) == 2);
        CHECK(is_connected(c));
    }
}

TEST_CASE("balanced complete bipartite graphs") {
    for (int m = 1; m <= 4; ++m) {
        Graph g = complete_bipartite(m, m);
        CHECK(regular_degree(g) == m);
        CHECK(is_triangle_free(g));
    }
}

TEST_CASE("triangle-free regular families are edge-regular with lambda 0") {
    std::vector<Graph> members{cycle(4), cycle(7), complete_bipartite(3, 3), petersen(),
                               generate({Family::DisjointUnion, {4, 6}})};
    for (const Graph& g : members) {
        REQUIRE(regular_degree(g).has_value());
        REQUIRE(is_triangle_free(g));
        CHECK(classify(g).edge_regular == Cond{CondStatus::Yes, 0});
    }
}

TEST_CASE("disjoint union") {
    Graph two_k2 = disjoint_union(complete(2), complete(2));
    CHECK(two_k2.vertex_count() == 4);
    CHECK(regular_degree(two_k2) == 1);

    Graph c3c4 = disjoint_union(cycle(3), cycle(4));
    CHECK(c3c4.vertex_count() == 7);
    CHECK(regular_degree(c3c4) == 2);
    CHECK(c3c4 == generate({Family::DisjointUnion, {3, 4}}));

    CHECK(disjoint_union(cycle(5), Graph(0)) == cycle(5));

    // part sizes: 1 -> K1, 2 -> K2, m >= 3 -> C_m
    Graph mix = generate({Family::DisjointUnion, {1, 2, 3}});
    CHECK(mix.vertex_count() == 6);
    CHECK(mix.degree(0) == 0);
    CHECK(mix.edge_count() == 4);
}
