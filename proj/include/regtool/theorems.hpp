#ifndef REGTOOL_THEOREMS_HPP
#define REGTOOL_THEOREMS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regtool/classify.hpp"
#include "regtool/graph.hpp"

#include "json.hpp"

namespace regtool {

enum class TheoremId {
    ComplementDuality,
    ComplementSrgCorollary,
    CartesianEdge,
    CartesianPseudo,
    DirectEdge,
    DirectPseudoNonexistence,
    CompositionEdge,
    CompositionPseudo,
    StrongEdge,
    StrongPseudoNonexistence,
    JoinEdge,
    JoinPseudo,
    LineEdge,
    LineMuAtMost4,
    LineNoMu3,
    LinePseudoCharacterization,
    SubdivisionEdge,
    SubdivisionPseudoNonexistence,
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

// One theorem applied to concrete input(s). The predicted side is computed
// only from input parameters and the theorem's formulas; the observed side
// only from brute-force classification of the constructed graph. A verdict
// that is not applicable (precondition failed) or vacuous (a degenerate
// boundary the statement implicitly excludes) is logged, not failed.
struct TheoremVerdict {
    TheoremId theorem = TheoremId::ComplementDuality;
    std::string inputs;
    bool applicable = true;
    bool hypothesis_holds = false;
    std::optional<std::vector<int>> predicted;
    std::string observed;
    bool vacuous = false;
    bool agree = true;
    std::string detail;
};

nlohmann::json verdict_to_json(const TheoremVerdict& v);
std::string verdict_to_text(const TheoremVerdict& v);

// Complement: edge-regular (n,k,lambda) <=> complement pseudo
// (n, n-k-1, n-2k+lambda), checked in both directions.
TheoremVerdict verify_complement_duality(const Graph& g);
// SRG (n,k,lambda,mu) => complement SRG (n, n-k-1, n-2-2k+mu, n-2k+lambda).
TheoremVerdict verify_complement_srg_corollary(const Graph& g);

// Products of edge-regular factors; hypotheses are the equalities between the
// common-neighbor counts of the adjacent-pair types that actually occur.
TheoremVerdict verify_cartesian_edge(const Graph& g1, const Graph& g2);
TheoremVerdict verify_direct_edge(const Graph& g1, const Graph& g2);
TheoremVerdict verify_composition_edge(const Graph& g1, const Graph& g2);
TheoremVerdict verify_strong_edge(const Graph& g1, const Graph& g2);

TheoremVerdict verify_cartesian_pseudo(const Graph& g1, const Graph& g2);
TheoremVerdict verify_composition_pseudo(const Graph& g1, const Graph& g2);

TheoremVerdict verify_join_edge(const Graph& g1, const Graph& g2);
TheoremVerdict verify_join_pseudo(const Graph& g1, const Graph& g2);

// Line graph of an edge-regular graph is edge-regular iff the graph is
// triangle-free or complete (stated for connected inputs).
TheoremVerdict verify_line_edge(const Graph& g);
// Non-adjacent line-graph vertices are disjoint edges: at most 4 cross edges.
TheoremVerdict verify_line_mu_bound(const Graph& g);
// mu in {0,1,2,4} characterization of pseudo strongly regular line graphs.
TheoremVerdict verify_line_pseudo_characterization(const Graph& g);

// Subdivision is edge-regular iff the input is a disjoint union of cycles.
TheoremVerdict verify_subdivision_edge(const Graph& g);

// Bounded census sweeps for the nonexistence claims; they can only be
// falsified, not proven, at this scale.
TheoremVerdict verify_direct_pseudo_nonexistence(int max_n);
TheoremVerdict verify_strong_pseudo_nonexistence(int max_n);
TheoremVerdict verify_line_no_mu3(int max_n);
TheoremVerdict verify_subdivision_pseudo_nonexistence(int max_n);

struct VerifyAllOptions {
    int pair_product_cap = 36;  // cartesian/direct/composition/strong pairs with n1*n2 <= cap
    int join_sum_cap = 12;      // join pairs with n1+n2 <= cap
    int sweep_max_n = 0;        // > 0 also runs the four nonexistence sweeps
};

// Every applicable verifier over the corpus (single graphs plus all ordered
// pairs within the caps). Any disagreement is a build-failing event.
std::vector<TheoremVerdict> verify_all(const std::vector<Graph>& corpus, const VerifyAllOptions& opts = {});

int count_disagreements(const std::vector<TheoremVerdict>& verdicts);

}  // namespace regtool

#endif
