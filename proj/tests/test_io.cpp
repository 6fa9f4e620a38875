#include <set>
#include <stdexcept>

#include "doctest.h"

#include "regtool/families.hpp"
#include "regtool/graph.hpp"
#include "regtool/io.hpp"
#include "test_util.hpp"

using namespace regtool;
using regtool::test::random_graph;

TEST_CASE("graph6 encoding of known graphs") {
    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(encode_graph6(Graph(0)) == "?");
    CHECK(encode_graph6(complete(3)) == "Bw");
    CHECK(encode_graph6(cycle(5)) == "Dhc");
    CHECK(decode_graph6("@") == Graph(1));
    CHECK(decode_graph6("?") == Graph(0));
    CHECK(decode_graph6("Dhc") == cycle(5));
}

TEST_CASE("graph6 round trip is the identity") {
    // exhaustive on 4 vertices, with injectivity
    std::set<std::string> seen;
    for (unsigned mask = 0; mask < 64; ++mask) {
        Graph g(4);
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if (mask >> bit & 1) g.add_edge(u, v);
        std::string s = encode_graph6(g);
        CHECK(decode_graph6(s) == g);
        seen.insert(s);
    }
    CHECK(seen.size() == 64);

    std::mt19937 rng(23);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(t % 11, 0.5, rng);
        CHECK(decode_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS_WITH_AS(decode_graph6("~??"), doctest::Contains("long form"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(decode_graph6("D"), doctest::Contains("truncated"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(decode_graph6("B\x05"), doctest::Contains("position"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(decode_graph6("@@"), doctest::Contains("trailing"), std::invalid_argument);
    CHECK_THROWS_AS(decode_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(decode_graph6(encode_graph6(Graph(63))), std::invalid_argument);
    CHECK_THROWS_AS(encode_graph6(Graph(63)), std::invalid_argument);
    CHECK_NOTHROW((void)encode_graph6(Graph(62)));
    // whitespace tolerated
    CHECK(decode_graph6("Bw\n") == complete(3));
}

TEST_CASE("decoding junk either throws or yields a graph that re-encodes") {
    std::mt19937 rng(71);
    for (int t = 0; t < 300; ++t) {
        std::string s;
        int len = static_cast<int>(rng() % 8);
        for (int i = 0; i < len; ++i) s.push_back(static_cast<char>(rng() % 256));
        try {
            Graph g = decode_graph6(s);
            CHECK(decode_graph6(encode_graph6(g)) == g);
        } catch (const std::invalid_argument&) {
            // rejected with a diagnostic: fine
        }
    }
}

TEST_CASE("edge list round trip") {
    CHECK(read_edge_list("3 3\n0 1\n1 2\n2 0\n") == complete(3));
    CHECK(read_edge_list("2 0\n") == Graph(2));
    CHECK(read_edge_list("  3   1 \n\n 0\t2\n") == Graph::from_edge_list(3, {{0, 2}}));

    CHECK(write_edge_list(complete(3)) == "3 3\n0 1\n0 2\n1 2\n");
    CHECK(write_edge_list(Graph(2)) == "2 0\n");

    std::mt19937 rng(29);
    for (int t = 0; t < 50; ++t) {
        Graph g = random_graph(t % 9, 0.5, rng);
        CHECK(read_edge_list(write_edge_list(g)) == g);
    }
}

TEST_CASE("edge list errors carry line numbers") {
    CHECK_THROWS_WITH_AS(read_edge_list("3 1\n0 3\n"), doctest::Contains("line 2"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(read_edge_list("3 1\n0 0\n"), doctest::Contains("loop"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(read_edge_list("x y\n"), doctest::Contains("line 1"), std::invalid_argument);
    CHECK_THROWS_AS(read_edge_list("3 2\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(read_edge_list("2 1\n0 1\n0 1 junk\n"), std::invalid_argument);
}

TEST_CASE("dot export") {
    std::string k2 = export_dot(complete(2));
    CHECK(k2 == "graph {\n  0;\n  1;\n  0 -- 1;\n}\n");

    std::string empty2 = export_dot(Graph(2));
    CHECK(empty2.find("--") == std::string::npos);
    CHECK(empty2.find("0;") != std::string::npos);
    CHECK(empty2.find("1;") != std::string::npos);

    std::string c3 = export_dot(complete(3));
    std::size_t edges = 0;
    for (std::size_t at = c3.find("--"); at != std::string::npos; at = c3.find("--", at + 1)) ++edges;
    CHECK(edges == 3);

    std::vector<std::string> labels{"a", "b"};
    CHECK(export_dot(complete(2), &labels).find("[label=\"a\"]") != std::string::npos);
    std::vector<std::string> bad{"a"};
    CHECK_THROWS_AS((void)export_dot(complete(2), &bad), std::invalid_argument);
}
