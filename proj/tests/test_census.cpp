#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "doctest.h"

#include "regtool/census.hpp"
#include "regtool/families.hpp"
#include "regtool/graph.hpp"
#include "regtool/io.hpp"
#include "regtool/ops.hpp"

using namespace regtool;

namespace {

// Independent recount used as the oracle for the backtracking enumerator:
// assign every upper-triangle cell in row-major order with plain degree-cap
// pruning, no neighborhood fixing, then dedupe by canonical form.
void oracle_count(int n, int k, int& classes, int& connected_classes) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) cells.emplace_back(i, j);
    std::vector<int> deg(n, 0);
    std::vector<std::pair<int, int>> chosen;
    std::set<std::string> all, conn;

    auto rec = [&](auto&& self, std::size_t at) -> void {
        if (at == cells.size()) {
            for (int v = 0; v < n; ++v)
                if (deg[v] != k) return;
            Graph g = Graph::from_edge_list(n, chosen);
            std::string canon = canonical_form(g);
            all.insert(canon);
            if (is_connected(g)) conn.insert(canon);
            return;
        }
        auto [i, j] = cells[at];
        bool row_ends = (j == n - 1);
        // skip the edge
        if (!row_ends || deg[i] == k) self(self, at + 1);
        // or take it
        if (deg[i] < k && deg[j] < k && (!row_ends || deg[i] + 1 == k)) {
            chosen.emplace_back(i, j);
            ++deg[i];
            ++deg[j];
            self(self, at + 1);
            chosen.pop_back();
            --deg[i];
            --deg[j];
        }
    };
    rec(rec, 0);
    classes = static_cast<int>(all.size());
    connected_classes = static_cast<int>(conn.size());
}

}  // namespace

TEST_CASE("enumerate_regular matches known counts") {
    CHECK(enumerate_regular(5, 2, true).size() == 1);
    CHECK(are_isomorphic(enumerate_regular(5, 2, true)[0], cycle(5)));

    auto cubic6 = enumerate_regular(6, 3, true);
    REQUIRE(cubic6.size() == 2);
    bool saw_k33 = false, saw_prism = false;
    for (const Graph& g : cubic6) {
        if (are_isomorphic(g, complete_bipartite(3, 3))) saw_k33 = true;
        // the prism: complement of C6
        Graph c6c(6);
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (!cycle(6).has_edge(u, v)) c6c.add_edge(u, v);
        if (are_isomorphic(g, c6c)) saw_prism = true;
    }
    CHECK(saw_k33);
    CHECK(saw_prism);

    CHECK(enumerate_regular(8, 3, true).size() == 5);
    CHECK(enumerate_regular(4, 3, true).size() == 1);

    // 1-regular connected graphs exist only on two vertices
    CHECK(enumerate_regular(4, 1, true).empty());
    CHECK(enumerate_regular(4, 1, false).size() == 1);

    // odd n*k: no such graphs
    CHECK(enumerate_regular(5, 3, false).empty());

    CHECK_THROWS_AS((void)enumerate_regular(11, 2, false), std::invalid_argument);
    CHECK_THROWS_AS((void)enumerate_regular(4, 4, false), std::invalid_argument);
}

TEST_CASE("enumerate_regular agrees with an independent recount") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 3}, {5, 2}, {6, 2}, {6, 3}, {7, 2}, {7, 4}}) {
        int classes = 0, connected_classes = 0;
        oracle_count(n, k, classes, connected_classes);
        CHECK(enumerate_regular(n, k, false).size() == static_cast<std::size_t>(classes));
        CHECK(enumerate_regular(n, k, true).size() == static_cast<std::size_t>(connected_classes));
    }
}

TEST_CASE("run_census basics") {
    auto recs = run_census(6, true);

    // connected regular classes per n: 1,1,1,2,2,5
    std::vector<int> per_n(7, 0);
    for (const auto& r : recs) ++per_n[r.n];
    CHECK(per_n[1] == 1);
    CHECK(per_n[2] == 1);
    CHECK(per_n[3] == 1);
    CHECK(per_n[4] == 2);
    CHECK(per_n[5] == 2);
    CHECK(per_n[6] == 5);

    // no two records share a canonical form; sorted by (n, k, canonical)
    std::set<std::string> canon;
    for (const auto& r : recs) CHECK(canon.insert(r.canonical).second);
    for (std::size_t i = 1; i < recs.size(); ++i) {
        auto key = [](const CensusRecord& r) { return std::tuple{r.n, r.k, r.canonical}; };
        CHECK(key(recs[i - 1]) < key(recs[i]));
    }

    // every record satisfies lambda <= k-1 and mu <= k when non-vacuous
    for (const auto& r : recs) {
        if (r.report.edge_regular.yes()) CHECK(r.report.edge_regular.value <= r.k - 1);
        if (r.report.pseudo.yes()) CHECK(r.report.pseudo.value <= r.k);
    }

    // octahedron appears as SRG (6,4,2,4)
    bool octa = false;
    for (const auto& r : recs)
        if (r.n == 6 && r.k == 4 && r.report.srg && r.report.srg->lambda == 2 && r.report.srg->mu == 4)
            octa = true;
    CHECK(octa);
}

TEST_CASE("census SRG of order 5 is the pentagon") {
    auto recs = run_census(5, true);
    std::vector<CensusRecord> hits = query(recs, [](const CensusRecord& r) {
        return r.n == 5 && r.report.srg && r.report.srg->lambda && r.report.srg->mu;
    });
    REQUIRE(hits.size() == 1);
    CHECK(are_isomorphic(decode_graph6(hits[0].g6), cycle(5)));
    CHECK(hits[0].report.srg->lambda == 0);
    CHECK(hits[0].report.srg->mu == 1);
}

TEST_CASE("complete graphs report vacuous mu") {
    for (const auto& r : run_census(4, false))
        if (r.k == r.n - 1 && r.n >= 2) CHECK(r.report.pseudo.vacuous());
}

TEST_CASE("census at order nine") {
    auto recs = run_census(9, true);

    // connected regular classes at n=9: (9,2)=1, (9,4)=16, (9,6)=4, (9,8)=1
    std::map<int, int> at9;
    for (const auto& r : recs)
        if (r.n == 9) ++at9[r.k];
    CHECK(at9 == std::map<int, int>{{2, 1}, {4, 16}, {6, 4}, {8, 1}});

    // strict SRGs on 9 vertices: the rook graph (9,4,1,2) and K_{3,3,3} (9,6,3,6)
    auto srgs = query(recs, [](const CensusRecord& r) {
        return r.n == 9 && r.report.srg && r.report.srg->lambda && r.report.srg->mu;
    });
    REQUIRE(srgs.size() == 2);
    CHECK(srgs[0].k == 4);
    CHECK(*srgs[0].report.srg->lambda == 1);
    CHECK(*srgs[0].report.srg->mu == 2);
    CHECK(are_isomorphic(decode_graph6(srgs[0].g6), cartesian(complete(3), complete(3))));
    CHECK(srgs[1].k == 6);
    CHECK(*srgs[1].report.srg->lambda == 3);
    CHECK(*srgs[1].report.srg->mu == 6);
    CHECK(are_isomorphic(decode_graph6(srgs[1].g6), complete_multipartite({3, 3, 3})));

    // exactly one edge-regular (9,4,1) class: the rook graph
    auto er941 = query(recs, [](const CensusRecord& r) {
        return r.n == 9 && r.k == 4 && r.report.edge_regular.yes() && r.report.edge_regular.value == 1;
    });
    REQUIRE(er941.size() == 1);
    CHECK(are_isomorphic(decode_graph6(er941[0].g6), cartesian(complete(3), complete(3))));

    // no line graph in range is pseudo with mu=3 (checked again in the sweeps)
    auto mu3 = query(recs, [](const CensusRecord& r) {
        ClassificationReport rep = classify(line_graph(decode_graph6(r.g6)).graph);
        return rep.pseudo.yes() && rep.pseudo.value == 3;
    });
    CHECK(mu3.empty());
}

TEST_CASE("catalog round trip and query") {
    auto recs = run_census(5, false);
    std::stringstream buf;
    write_catalog(buf, recs);
    auto back = read_catalog(buf);
    REQUIRE(back.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(back[i].g6 == recs[i].g6);
        CHECK(back[i].canonical == recs[i].canonical);
        CHECK(back[i].report == recs[i].report);
    }

    nlohmann::json j = record_to_json(recs[0]);
    CHECK(j.contains("g6"));
    CHECK(j.contains("n"));
    CHECK(j.contains("k"));
    CHECK(j.contains("classification"));

    std::stringstream bad("{\"g6\": \"Bw\", \"n\": 3");
    CHECK_THROWS_WITH_AS((void)read_catalog(bad), doctest::Contains("line 1"), std::invalid_argument);
}

TEST_CASE("census output does not depend on the thread budget") {
    const char* saved = std::getenv("REGTOOL_THREADS");
    std::string saved_value = saved ? saved : "";

    setenv("REGTOOL_THREADS", "1", 1);
    auto serial = run_census(6, false);
    setenv("REGTOOL_THREADS", "4", 1);
    auto parallel = run_census(6, false);

    if (saved)
        setenv("REGTOOL_THREADS", saved_value.c_str(), 1);
    else
        unsetenv("REGTOOL_THREADS");

    std::stringstream a, b;
    write_catalog(a, serial);
    write_catalog(b, parallel);
    CHECK(a.str() == b.str());
}
