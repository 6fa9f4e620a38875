#ifndef REGTOOL_CENSUS_HPP
#define REGTOOL_CENSUS_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "regtool/classify.hpp"
#include "regtool/graph.hpp"

#include "json.hpp"

namespace regtool {

struct CensusRecord {
    std::string canonical;
    std::string g6;
    int n = 0;
    int k = 0;
    ClassificationReport report;
};

// One representative per isomorphism class of (connected) k-regular graphs on
// n vertices, by backtracking over the adjacency structure with vertex 0's
// neighborhood fixed to {1..k}, followed by canonical-form dedupe.
// Requires 0 <= k < n <= 10 (n = 10 cells can take minutes).
// Odd n*k yields the empty list: no such graphs.
std::vector<Graph> enumerate_regular(int n, int k, bool connected_only);

// All regular graphs for n = 1..max_n and every feasible k, classified.
// Records are sorted by (n, k, canonical); output is deterministic and
// independent of the number of worker threads.
std::vector<CensusRecord> run_census(int max_n, bool connected_only);

std::vector<CensusRecord> query(const std::vector<CensusRecord>& records,
                                const std::function<bool(const CensusRecord&)>& pred);

// JSONL catalog: one record per line with keys g6, n, k, classification.
nlohmann::json record_to_json(const CensusRecord& rec);
CensusRecord record_from_json(const nlohmann::json& j);
void write_catalog(std::ostream& out, const std::vector<CensusRecord>& records);
std::vector<CensusRecord> read_catalog(std::istream& in);

// Worker count: REGTOOL_THREADS when set, else hardware concurrency.
int thread_budget();

}  // namespace regtool

#endif
