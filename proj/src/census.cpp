#include "regtool/census.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "regtool/io.hpp"

namespace regtool {

namespace {

// Labeled k-regular graphs on n vertices with N(0) = {1..k}. Every
// isomorphism class has such a representative, so the restriction only prunes
// relabelings; the canonical dedupe afterwards guarantees one graph per class.
struct RegularEnumerator {
    int n;
    int k;
    Graph g;
    std::vector<int> deg;
    std::vector<Graph> out;

    RegularEnumerator(int n_, int k_) : n(n_), k(k_), g(n_), deg(n_, 0) {}

    void run() {
        if (k > 0) {
            for (int v = 1; v <= k; ++v) link(0, v);
        }
        rec();
    }

    void link(int u, int v) {
        g.add_edge(u, v);
        ++deg[u];
        ++deg[v];
    }

    void rec() {
        int u = -1;
        for (int x = 0; x < n; ++x)
            if (deg[x] < k) {
                u = x;
                break;
            }
        if (u < 0) {
            out.push_back(g);
            return;
        }
        int need = k - deg[u];
        std::vector<int> cands;
        for (int v = u + 1; v < n; ++v)
            if (deg[v] < k && !g.has_edge(u, v)) cands.push_back(v);
        if (static_cast<int>(cands.size()) < need) return;
        std::vector<int> pick;
        choose(u, cands, 0, need, pick);
    }

    void choose(int u, const std::vector<int>& cands, std::size_t at, int need, std::vector<int>& pick) {
        if (need == 0) {
            Graph saved = g;
            std::vector<int> saved_deg = deg;
            for (int v : pick) link(u, v);
            rec();
            g = std::move(saved);
            deg = std::move(saved_deg);
            return;
        }
        if (cands.size() - at < static_cast<std::size_t>(need)) return;
        pick.push_back(cands[at]);
        choose(u, cands, at + 1, need - 1, pick);
        pick.pop_back();
        choose(u, cands, at + 1, need, pick);
    }
};

}  // namespace

std::vector<Graph> enumerate_regular(int n, int k, bool connected_only) {
    if (n < 1 || n > 10) throw std::invalid_argument("enumerate_regular supports 1 <= n <= 10");
    if (k < 0 || k >= n) throw std::invalid_argument("enumerate_regular needs 0 <= k < n");
    if ((static_cast<long>(n) * k) % 2 != 0) return {};  // no k-regular graph exists

    RegularEnumerator en(n, k);
    en.run();

    std::vector<Graph> result;
    std::unordered_set<std::string> seen;
    for (const Graph& g : en.out) {
        if (connected_only && !is_connected(g)) continue;
        std::string canon = canonical_form(g);
        if (seen.insert(canon).second) result.push_back(g);
    }
    return result;
}

int thread_budget() {
    if (const char* env = std::getenv("REGTOOL_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<CensusRecord> run_census(int max_n, bool connected_only) {
    if (max_n < 1 || max_n > 10) throw std::invalid_argument("run_census supports 1 <= max_n <= 10");

    std::vector<std::pair<int, int>> cells;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 0; k < n; ++k)
            if ((n * k) % 2 == 0) cells.emplace_back(n, k);

    auto run_cell = [connected_only](std::pair<int, int> cell) {
        auto [n, k] = cell;
        std::vector<CensusRecord> recs;
        for (const Graph& g : enumerate_regular(n, k, connected_only)) {
            CensusRecord rec;
            rec.canonical = canonical_form(g);
            rec.g6 = encode_graph6(g);
            rec.n = n;
            rec.k = k;
            rec.report = classify(g);
            recs.push_back(std::move(rec));
        }
        std::sort(recs.begin(), recs.end(),
                  [](const CensusRecord& a, const CensusRecord& b) { return a.canonical < b.canonical; });
        return recs;
    };

    std::vector<CensusRecord> out;
    if (thread_budget() <= 1) {
        for (auto cell : cells)
            for (auto& rec : run_cell(cell)) out.push_back(std::move(rec));
    } else {
        // Cells run concurrently; the merge below is in fixed cell order, so
        // the output does not depend on scheduling.
        std::vector<std::future<std::vector<CensusRecord>>> futs;
        futs.reserve(cells.size());
        for (auto cell : cells)
            futs.push_back(std::async(std::launch::async, run_cell, cell));
        for (auto& f : futs)
            for (auto& rec : f.get()) out.push_back(std::move(rec));
    }
    return out;
}

std::vector<CensusRecord> query(const std::vector<CensusRecord>& records,
                                const std::function<bool(const CensusRecord&)>& pred) {
    std::vector<CensusRecord> out;
    for (const auto& rec : records)
        if (pred(rec)) out.push_back(rec);
    return out;
}

nlohmann::json record_to_json(const CensusRecord& rec) {
    nlohmann::json j;
    j["g6"] = rec.g6;
    j["n"] = rec.n;
    j["k"] = rec.k;
    j["classification"] = to_json(rec.report);
    return j;
}

CensusRecord record_from_json(const nlohmann::json& j) {
    CensusRecord rec;
    rec.g6 = j.at("g6").get<std::string>();
    rec.n = j.at("n").get<int>();
    rec.k = j.at("k").get<int>();
    Graph g = decode_graph6(rec.g6);
    if (g.vertex_count() != rec.n)
        throw std::invalid_argument("catalog record: n=" + std::to_string(rec.n) +
                                    " does not match its graph6 field (" + rec.g6 + ")");
    rec.canonical = canonical_form(g);
    rec.report = classify(g);
    return rec;
}

void write_catalog(std::ostream& out, const std::vector<CensusRecord>& records) {
    for (const auto& rec : records) out << record_to_json(rec).dump() << "\n";
}

std::vector<CensusRecord> read_catalog(std::istream& in) {
    std::vector<CensusRecord> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw std::invalid_argument("catalog line " + std::to_string(lineno) + ": " + e.what());
        }
        out.push_back(record_from_json(j));
    }
    return out;
}

}  // namespace regtool
