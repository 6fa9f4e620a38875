#ifndef REGTOOL_CLASSIFY_HPP
#define REGTOOL_CLASSIFY_HPP

#include <optional>
#include <string>
#include <utility>

#include "regtool/graph.hpp"

#include "json.hpp"

namespace regtool {

// A common-neighbor condition over a class of vertex pairs. Vacuous means the
// graph has no pairs of that class to constrain the value (edgeless graphs
// for the adjacent condition, complete graphs for the non-adjacent one).
enum class CondStatus { No, Vacuous, Yes };

struct Cond {
    CondStatus status = CondStatus::No;
    int value = 0;  // meaningful only when status == Yes

    bool yes() const { return status == CondStatus::Yes; }
    bool vacuous() const { return status == CondStatus::Vacuous; }
    bool no() const { return status == CondStatus::No; }
    bool operator==(const Cond&) const = default;
};

// Strongly regular parameter tuple; a vacuous lambda or mu is recorded as
// nullopt rather than an arbitrary number.
struct SrgParams {
    int n = 0;
    int k = 0;
    std::optional<int> lambda;
    std::optional<int> mu;
    bool operator==(const SrgParams&) const = default;
};

struct ClassificationReport {
    int n = 0;
    std::optional<int> regular_k;            // absent when irregular
    Cond edge_regular;                       // lambda over adjacent pairs
    Cond pseudo;                             // mu over non-adjacent pairs
    std::optional<SrgParams> srg;
    std::optional<std::pair<int, int>> deza; // value pair {a,b}, a <= b, over ALL pairs
    bool operator==(const ClassificationReport&) const = default;
};

// Common-neighbor count profile over adjacent (resp. non-adjacent) pairs,
// independent of regularity: Yes(c) if constant, Vacuous if no such pairs.
Cond adjacent_common_profile(const Graph& g);
Cond nonadjacent_common_profile(const Graph& g);

// Full regularity profile. Irregular graphs are never edge-regular, pseudo
// strongly regular, or SRG (the definitions all include regularity). srg is
// present when the graph is regular and both conditions hold, at most one of
// them vacuously.
ClassificationReport classify(const Graph& g);

// Compare against an asserted parameter tuple; a vacuous condition matches
// any asserted lambda (resp. mu).
bool is_edge_regular_with(const Graph& g, int n, int k, int lambda);
bool is_pseudo_with(const Graph& g, int n, int k, int mu);
bool is_srg_with(const Graph& g, int n, int k, int lambda, int mu);

std::string to_text(const ClassificationReport& r);
nlohmann::json to_json(const ClassificationReport& r);

}  // namespace regtool

#endif
