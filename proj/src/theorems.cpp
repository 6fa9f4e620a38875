#include "regtool/theorems.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>

#include "regtool/census.hpp"
#include "regtool/io.hpp"
#include "regtool/ops.hpp"

namespace regtool {

const char* theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::ComplementDuality: return "complement-duality";
        case TheoremId::ComplementSrgCorollary: return "complement-srg-corollary";
        case TheoremId::CartesianEdge: return "cartesian-edge";
        case TheoremId::CartesianPseudo: return "cartesian-pseudo";
        case TheoremId::DirectEdge: return "direct-edge";
        case TheoremId::DirectPseudoNonexistence: return "direct-pseudo-nonexistence";
        case TheoremId::CompositionEdge: return "composition-edge";
        case TheoremId::CompositionPseudo: return "composition-pseudo";
        case TheoremId::StrongEdge: return "strong-edge";
        case TheoremId::StrongPseudoNonexistence: return "strong-pseudo-nonexistence";
        case TheoremId::JoinEdge: return "join-edge";
        case TheoremId::JoinPseudo: return "join-pseudo";
        case TheoremId::LineEdge: return "line-edge";
        case TheoremId::LineMuAtMost4: return "line-mu-bound";
        case TheoremId::LineNoMu3: return "line-no-mu3";
        case TheoremId::LinePseudoCharacterization: return "line-pseudo-characterization";
        case TheoremId::SubdivisionEdge: return "subdivision-edge";
        case TheoremId::SubdivisionPseudoNonexistence: return "subdivision-pseudo-nonexistence";
    }
    return "?";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
    for (TheoremId id : {TheoremId::ComplementDuality, TheoremId::ComplementSrgCorollary, TheoremId::CartesianEdge,
                         TheoremId::CartesianPseudo, TheoremId::DirectEdge, TheoremId::DirectPseudoNonexistence,
                         TheoremId::CompositionEdge, TheoremId::CompositionPseudo, TheoremId::StrongEdge,
                         TheoremId::StrongPseudoNonexistence, TheoremId::JoinEdge, TheoremId::JoinPseudo,
                         TheoremId::LineEdge, TheoremId::LineMuAtMost4, TheoremId::LineNoMu3,
                         TheoremId::LinePseudoCharacterization, TheoremId::SubdivisionEdge,
                         TheoremId::SubdivisionPseudoNonexistence})
        if (name == theorem_name(id)) return id;
    return std::nullopt;
}

namespace {

// (n, k, lambda-or-mu) of a factor; nullopt value means the condition holds
// vacuously (no pairs of that class), which leaves the parameter free.
struct RegParams {
    int n = 0;
    int k = 0;
    std::optional<int> val;
};

std::optional<RegParams> er_params(const ClassificationReport& r) {
    if (!r.regular_k || r.edge_regular.no()) return std::nullopt;
    RegParams p{r.n, *r.regular_k, std::nullopt};
    if (r.edge_regular.yes()) p.val = r.edge_regular.value;
    return p;
}

std::optional<RegParams> ps_params(const ClassificationReport& r) {
    if (!r.regular_k || r.pseudo.no()) return std::nullopt;
    RegParams p{r.n, *r.regular_k, std::nullopt};
    if (r.pseudo.yes()) p.val = r.pseudo.value;
    return p;
}

// Equality of the common-neighbor counts of the pair types that actually
// occur (nullopt entries are types with no pairs and drop out).
struct EqResult {
    bool consistent = true;
    std::optional<int> value;
};

EqResult all_equal(std::initializer_list<std::optional<int>> counts) {
    EqResult r;
    for (const auto& c : counts) {
        if (!c) continue;
        if (!r.value)
            r.value = c;
        else if (*r.value != *c)
            r.consistent = false;
    }
    return r;
}

std::string cond_short(const Cond& c) {
    switch (c.status) {
        case CondStatus::Yes: return std::to_string(c.value);
        case CondStatus::Vacuous: return "vac";
        default: return "mixed";
    }
}

std::string short_profile(const ClassificationReport& r) {
    if (!r.regular_k) return "irregular";
    return "k=" + std::to_string(*r.regular_k) + " lambda=" + cond_short(r.edge_regular) +
           " mu=" + cond_short(r.pseudo);
}

std::string inputs_of(const Graph& g) { return encode_graph6(g); }
std::string inputs_of(const Graph& a, const Graph& b) { return encode_graph6(a) + " " + encode_graph6(b); }

std::vector<int> tuple_of(int n, int k, std::optional<int> v) {
    std::vector<int> t{n, k};
    if (v) t.push_back(*v);
    return t;
}

// Shared conclusion check for the edge-regular product/join theorems.
void conclude_edge(TheoremVerdict& v, bool hyp, int pn, int pk, std::optional<int> plam, const Graph& result) {
    ClassificationReport rep = classify(result);
    v.observed = short_profile(rep);
    v.hypothesis_holds = hyp;
    if (hyp) {
        v.predicted = tuple_of(pn, pk, plam);
        if (rep.edge_regular.vacuous()) {
            v.vacuous = true;
            v.detail += "result has no adjacent pairs; logged. ";
            return;
        }
        v.agree = rep.n == pn && rep.regular_k && *rep.regular_k == pk && rep.edge_regular.yes() &&
                  (!plam || rep.edge_regular.value == *plam);
    } else {
        v.agree = !rep.edge_regular.yes();
        if (!v.agree) v.detail += "hypothesis fails but result is edge-regular. ";
    }
}

void conclude_pseudo(TheoremVerdict& v, bool hyp, int pn, int pk, std::optional<int> pmu, const Graph& result) {
    ClassificationReport rep = classify(result);
    v.observed = short_profile(rep);
    v.hypothesis_holds = hyp;
    if (hyp) {
        v.predicted = tuple_of(pn, pk, pmu);
        if (rep.pseudo.vacuous()) {
            v.vacuous = true;
            v.detail += "result has no non-adjacent pairs; logged. ";
            return;
        }
        v.agree = rep.n == pn && rep.regular_k && *rep.regular_k == pk && rep.pseudo.yes() &&
                  (!pmu || rep.pseudo.value == *pmu);
    } else {
        v.agree = !rep.pseudo.yes();
        if (!v.agree) v.detail += "hypothesis fails but result is pseudo strongly regular. ";
    }
}

TheoremVerdict not_applicable(TheoremId id, std::string inputs, std::string why) {
    TheoremVerdict v;
    v.theorem = id;
    v.inputs = std::move(inputs);
    v.applicable = false;
    v.detail = std::move(why);
    return v;
}

}  // namespace

nlohmann::json verdict_to_json(const TheoremVerdict& v) {
    nlohmann::json j;
    j["theorem"] = theorem_name(v.theorem);
    j["inputs"] = v.inputs;
    j["applicable"] = v.applicable;
    j["hypothesis"] = v.hypothesis_holds;
    j["predicted"] = v.predicted ? nlohmann::json(*v.predicted) : nlohmann::json();
    j["observed"] = v.observed;
    j["vacuous"] = v.vacuous;
    j["agree"] = v.agree;
    j["detail"] = v.detail;
    return j;
}

std::string verdict_to_text(const TheoremVerdict& v) {
    std::ostringstream out;
    if (!v.applicable)
        out << "skip     ";
    else if (!v.agree)
        out << "DISAGREE ";
    else if (v.vacuous)
        out << "logged   ";
    else
        out << "agree    ";
    out << theorem_name(v.theorem) << " [" << v.inputs << "]";
    out << " hypothesis=" << (v.applicable ? (v.hypothesis_holds ? "true" : "false") : "-");
    if (v.predicted) {
        out << " predicted=(";
        for (std::size_t i = 0; i < v.predicted->size(); ++i) out << (i ? "," : "") << (*v.predicted)[i];
        out << ")";
    }
    if (!v.observed.empty()) out << " observed=[" << v.observed << "]";
    if (!v.detail.empty()) out << " -- " << v.detail;
    return out.str();
}

TheoremVerdict verify_complement_duality(const Graph& g) {
    TheoremVerdict v;
    v.theorem = TheoremId::ComplementDuality;
    v.inputs = inputs_of(g);
    Graph gc = complement(g);
    ClassificationReport r = classify(g);
    ClassificationReport rc = classify(gc);
    v.observed = short_profile(r) + " | complement " + short_profile(rc);
    v.hypothesis_holds = r.edge_regular.yes();
    v.agree = true;

    int n = g.vertex_count();
    // forward: edge-regular(G) <=> pseudo(G^c), with the parameter map
    if (r.edge_regular.yes() != rc.pseudo.yes()) {
        v.agree = false;
        v.detail += "edge-regular(G) and pseudo(G^c) differ. ";
    } else if (r.edge_regular.yes()) {
        int k = *r.regular_k;
        int lam = r.edge_regular.value;
        v.predicted = std::vector<int>{n, n - k - 1, n - 2 * k + lam};
        if (*rc.regular_k != n - k - 1 || rc.pseudo.value != n - 2 * k + lam) {
            v.agree = false;
            v.detail += "complement parameters do not match (n,n-k-1,n-2k+lambda). ";
        }
    }
    // reverse: edge-regular(G^c) <=> pseudo(G)
    if (rc.edge_regular.yes() != r.pseudo.yes()) {
        v.agree = false;
        v.detail += "edge-regular(G^c) and pseudo(G) differ. ";
    } else if (rc.edge_regular.yes()) {
        int kc = *rc.regular_k;
        int lamc = rc.edge_regular.value;
        if (*r.regular_k != n - kc - 1 || r.pseudo.value != n - 2 * kc + lamc) {
            v.agree = false;
            v.detail += "reverse-direction parameters do not match. ";
        }
    }
    if (r.edge_regular.vacuous() || rc.edge_regular.vacuous()) {
        v.vacuous = true;
        v.detail += "edgeless/complete boundary; logged. ";
    }
    return v;
}

TheoremVerdict verify_complement_srg_corollary(const Graph& g) {
    ClassificationReport r = classify(g);
    if (!r.srg || !r.srg->lambda || !r.srg->mu)
        return not_applicable(TheoremId::ComplementSrgCorollary, inputs_of(g),
                              "input is not strongly regular with both parameters non-vacuous");
    TheoremVerdict v;
    v.theorem = TheoremId::ComplementSrgCorollary;
    v.inputs = inputs_of(g);
    v.hypothesis_holds = true;
    int n = r.srg->n, k = r.srg->k, lam = *r.srg->lambda, mu = *r.srg->mu;
    v.predicted = std::vector<int>{n, n - k - 1, n - 2 - 2 * k + mu, n - 2 * k + lam};
    ClassificationReport rc = classify(complement(g));
    v.observed = short_profile(rc);
    v.agree = rc.srg && rc.srg->lambda && rc.srg->mu && rc.srg->n == n && rc.srg->k == n - k - 1 &&
              *rc.srg->lambda == n - 2 - 2 * k + mu && *rc.srg->mu == n - 2 * k + lam;
    return v;
}

TheoremVerdict verify_cartesian_edge(const Graph& g1, const Graph& g2) {
    auto p1 = er_params(classify(g1));
    auto p2 = er_params(classify(g2));
    if (!p1 || !p2)
        return not_applicable(TheoremId::CartesianEdge, inputs_of(g1, g2), "inputs are not both edge-regular");
    TheoremVerdict v;
    v.theorem = TheoremId::CartesianEdge;
    v.inputs = inputs_of(g1, g2);
    // adjacent pairs move in G1 (count lambda1) or in G2 (count lambda2)
    EqResult eq = all_equal({p1->val, p2->val});
    conclude_edge(v, eq.consistent, p1->n * p2->n, p1->k + p2->k, eq.value, cartesian(g1, g2));
    return v;
}

TheoremVerdict verify_direct_edge(const Graph& g1, const Graph& g2) {
    auto p1 = er_params(classify(g1));
    auto p2 = er_params(classify(g2));
    if (!p1 || !p2)
        return not_applicable(TheoremId::DirectEdge, inputs_of(g1, g2), "inputs are not both edge-regular");
    TheoremVerdict v;
    v.theorem = TheoremId::DirectEdge;
    v.inputs = inputs_of(g1, g2);
    std::optional<int> plam;
    if (p1->val && p2->val) plam = *p1->val * *p2->val;
    // unconditional: the product is edge-regular with (n1n2, k1k2, lambda1*lambda2)
    conclude_edge(v, true, p1->n * p2->n, p1->k * p2->k, plam, direct_product(g1, g2));
    return v;
}

TheoremVerdict verify_composition_edge(const Graph& g1, const Graph& g2) {
    auto p1 = er_params(classify(g1));
    auto p2 = er_params(classify(g2));
    if (!p1 || !p2)
        return not_applicable(TheoremId::CompositionEdge, inputs_of(g1, g2), "inputs are not both edge-regular");
    TheoremVerdict v;
    v.theorem = TheoremId::CompositionEdge;
    v.inputs = inputs_of(g1, g2);
    // cross-group adjacent pairs: lambda1*n2 + 2*k2; same-group: k1*n2 + lambda2
    std::optional<int> cross, ingroup;
    if (p1->val) cross = *p1->val * p2->n + 2 * p2->k;
    if (p2->val) ingroup = p1->k * p2->n + *p2->val;
    EqResult eq = all_equal({cross, ingroup});
    conclude_edge(v, eq.consistent, p1->n * p2->n, p1->k * p2->n + p2->k, eq.value, composition(g1, g2));
    return v;
}

TheoremVerdict verify_strong_edge(const Graph& g1, const Graph& g2) {
    auto p1 = er_params(classify(g1));
    auto p2 = er_params(classify(g2));
    if (!p1 || !p2)
        return not_applicable(TheoremId::StrongEdge, inputs_of(g1, g2), "inputs are not both edge-regular");
    TheoremVerdict v;
    v.theorem = TheoremId::StrongEdge;
    v.inputs = inputs_of(g1, g2);
    // in-row: lambda2 + k1*lambda2 + 2k1; in-column: lambda1 + k2*lambda1 + 2k2;
    // diagonal: lambda1*lambda2 + 2*lambda1 + 2*lambda2 + 2
    std::optional<int> inrow, incol, diag;
    if (p2->val) inrow = *p2->val + p1->k * *p2->val + 2 * p1->k;
    if (p1->val) incol = *p1->val + p2->k * *p1->val + 2 * p2->k;
    if (p1->val && p2->val) diag = *p1->val * *p2->val + 2 * *p1->val + 2 * *p2->val + 2;
    EqResult eq = all_equal({inrow, incol, diag});
    conclude_edge(v, eq.consistent, p1->n * p2->n, p1->k + p2->k + p1->k * p2->k, eq.value,
                  strong_product(g1, g2));
    return v;
}

TheoremVerdict verify_join_edge(const Graph& g1, const Graph& g2) {
    auto p1 = er_params(classify(g1));
    auto p2 = er_params(classify(g2));
    if (!p1 || !p2)
        return not_applicable(TheoremId::JoinEdge, inputs_of(g1, g2), "inputs are not both edge-regular");
    TheoremVerdict v;
    v.theorem = TheoremId::JoinEdge;
    v.inputs = inputs_of(g1, g2);
    if (p1->n == 0 || p2->n == 0) {
        v.vacuous = true;
        v.observed = short_profile(classify(join(g1, g2)));
        v.detail = "empty factor: the join is the other input unchanged; logged.";
        return v;
    }
    bool reg = p1->k + p2->n == p2->k + p1->n;
    // within G1: lambda1 + n2; within G2: lambda2 + n1; cross: k1 + k2
    std::optional<int> a, b, c;
    if (p1->val) a = *p1->val + p2->n;
    if (p2->val) b = *p2->val + p1->n;
    if (p1->n > 0 && p2->n > 0) c = p1->k + p2->k;
    EqResult eq = all_equal({a, b, c});
    conclude_edge(v, reg && eq.consistent, p1->n + p2->n, p1->k + p2->n, eq.value, join(g1, g2));
    if (!reg) v.detail += "join is not regular (k1+n2 != k2+n1). ";
    return v;
}

TheoremVerdict verify_join_pseudo(const Graph& g1, const Graph& g2) {
    auto p1 = ps_params(classify(g1));
    auto p2 = ps_params(classify(g2));
    if (!p1 || !p2)
        return not_applicable(TheoremId::JoinPseudo, inputs_of(g1, g2),
                              "inputs are not both pseudo strongly regular");
    TheoremVerdict v;
    v.theorem = TheoremId::JoinPseudo;
    v.inputs = inputs_of(g1, g2);
    if (p1->n == 0 || p2->n == 0) {
        v.vacuous = true;
        v.observed = short_profile(classify(join(g1, g2)));
        v.detail = "empty factor: the join is the other input unchanged; logged.";
        return v;
    }
    bool reg = p1->k + p2->n == p2->k + p1->n;
    // non-adjacent pairs live within one side: mu1 + n2 or mu2 + n1
    std::optional<int> a, b;
    if (p1->val) a = *p1->val + p2->n;
    if (p2->val) b = *p2->val + p1->n;
    EqResult eq = all_equal({a, b});
    conclude_pseudo(v, reg && eq.consistent, p1->n + p2->n, p1->k + p2->n, eq.value, join(g1, g2));
    return v;
}

TheoremVerdict verify_cartesian_pseudo(const Graph& g1, const Graph& g2) {
    TheoremVerdict v;
    v.theorem = TheoremId::CartesianPseudo;
    v.inputs = inputs_of(g1, g2);
    bool h = (is_complete(g1) && is_edgeless(g2)) || (is_complete(g2) && is_edgeless(g1));
    Graph prod = cartesian(g1, g2);
    ClassificationReport rep = classify(prod);
    v.observed = short_profile(rep);
    v.hypothesis_holds = h;
    if (h) {
        // copies of a complete graph: pseudo with mu = 0
        int pk = regular_degree(g1).value_or(0) + regular_degree(g2).value_or(0);
        v.predicted = std::vector<int>{g1.vertex_count() * g2.vertex_count(), pk, 0};
        if (rep.pseudo.vacuous()) {
            v.vacuous = true;
            v.detail = "product has no non-adjacent pairs; logged.";
            return v;
        }
        v.agree = rep.pseudo.yes() && rep.pseudo.value == 0;
        return v;
    }
    if (is_complete(g1) || is_edgeless(g1) || is_complete(g2) || is_edgeless(g2)) {
        // A complete or edgeless factor is only vacuously pseudo; the
        // statement's only-if direction does not constrain these (e.g. two
        // complete factors give a rook graph, pseudo with mu = 2).
        v.vacuous = true;
        v.detail = "complete/edgeless factor outside hypothesis; excluded from falsification and logged.";
        return v;
    }
    v.agree = !rep.pseudo.yes();
    if (!v.agree) v.detail = "hypothesis fails but product is pseudo strongly regular.";
    return v;
}

TheoremVerdict verify_composition_pseudo(const Graph& g1, const Graph& g2) {
    auto p1 = ps_params(classify(g1));
    auto p2 = ps_params(classify(g2));
    if (!p1 || !p2)
        return not_applicable(TheoremId::CompositionPseudo, inputs_of(g1, g2),
                              "inputs are not both pseudo strongly regular");
    TheoremVerdict v;
    v.theorem = TheoremId::CompositionPseudo;
    v.inputs = inputs_of(g1, g2);
    // cross-group non-adjacent pairs: mu1*n2; same-group: k1*n2 + mu2.
    // With both present the equality forces mu1 = k1 and mu2 = 0.
    std::optional<int> cross, ingroup;
    if (p1->val) cross = *p1->val * p2->n;
    if (p2->val) ingroup = p1->k * p2->n + *p2->val;
    EqResult eq = all_equal({cross, ingroup});
    conclude_pseudo(v, eq.consistent, p1->n * p2->n, p1->k * p2->n + p2->k, eq.value, composition(g1, g2));
    return v;
}

TheoremVerdict verify_line_edge(const Graph& g) {
    ClassificationReport r = classify(g);
    auto p = er_params(r);
    if (!p) return not_applicable(TheoremId::LineEdge, inputs_of(g), "input is not edge-regular");
    TheoremVerdict v;
    v.theorem = TheoremId::LineEdge;
    v.inputs = inputs_of(g);
    bool tri_free = is_triangle_free(g);
    bool h = tri_free || is_complete(g);
    LineGraphResult lg = line_graph(g);
    ClassificationReport rep = classify(lg.graph);
    v.observed = short_profile(rep);
    v.hypothesis_holds = h;
    if (rep.edge_regular.vacuous()) {
        v.vacuous = true;
        v.detail = "line graph has no adjacent pairs; logged.";
        return v;
    }
    if (h) {
        int m = g.edge_count();
        int plam = (is_complete(g) && !tri_free) ? p->k - 1 : p->k - 2;
        v.predicted = std::vector<int>{m, 2 * p->k - 2, plam};
        v.agree = rep.n == m && rep.regular_k && *rep.regular_k == 2 * p->k - 2 && rep.edge_regular.yes() &&
                  rep.edge_regular.value == plam;
        return v;
    }
    bool all_complete_components = true;
    for (const auto& comp : components(g))
        for (std::size_t i = 0; i < comp.size() && all_complete_components; ++i)
            for (std::size_t j = i + 1; j < comp.size(); ++j)
                if (!g.has_edge(comp[i], comp[j])) {
                    all_complete_components = false;
                    break;
                }
    if (all_complete_components) {
        // Disjoint complete components satisfy the conclusion but not the
        // stated hypothesis; the statement assumes a connected input.
        v.vacuous = true;
        v.detail = "disjoint union of complete components; outside the stated hypothesis, logged.";
        return v;
    }
    v.agree = !rep.edge_regular.yes();
    if (!v.agree) v.detail = "hypothesis fails but line graph is edge-regular.";
    return v;
}

TheoremVerdict verify_line_mu_bound(const Graph& g) {
    TheoremVerdict v;
    v.theorem = TheoremId::LineMuAtMost4;
    v.inputs = inputs_of(g);
    v.hypothesis_holds = true;
    auto es = g.edges();
    int worst = 0;
    long pairs = 0;
    for (std::size_t x = 0; x < es.size(); ++x)
        for (std::size_t y = x + 1; y < es.size(); ++y) {
            auto [a, b] = es[x];
            auto [c, d] = es[y];
            if (a == c || a == d || b == c || b == d) continue;
            ++pairs;
            worst = std::max(worst, edge_pair_cross_edges(g, make_edge_pair(g, es[x], es[y])));
        }
    LineGraphResult lg = line_graph(g);
    ClassificationReport rep = classify(lg.graph);
    v.observed = "max cross=" + std::to_string(worst) + " over " + std::to_string(pairs) +
                 " disjoint pairs; line graph " + short_profile(rep);
    v.predicted = std::vector<int>{4};
    v.agree = worst <= 4 && !(rep.pseudo.yes() && rep.pseudo.value > 4);
    if (pairs == 0) {
        v.vacuous = true;
        v.detail = "no disjoint edge pairs; bound holds vacuously.";
    }
    return v;
}

TheoremVerdict verify_line_pseudo_characterization(const Graph& g) {
    TheoremVerdict v;
    v.theorem = TheoremId::LinePseudoCharacterization;
    v.inputs = inputs_of(g);
    ClassificationReport r = classify(g);
    v.applicable = r.regular_k && !r.pseudo.no();
    if (!v.applicable) v.detail += "input is not pseudo strongly regular; checked informationally. ";

    LineGraphResult lg = line_graph(g);
    Cond prof = nonadjacent_common_profile(lg.graph);
    ClassificationReport rep = classify(lg.graph);
    v.observed = "line graph " + short_profile(rep) + ", disjoint-pair profile " + cond_short(prof);
    v.hypothesis_holds = v.applicable;
    if (prof.vacuous()) {
        v.vacuous = true;
        v.detail += "no disjoint edge pairs in the input; logged.";
        return v;
    }
    std::optional<int> mu;
    if (prof.yes()) mu = prof.value;

    bool dia_free = is_diamond_free(g);
    bool k4_free = is_k4_free(g);
    bool c4_free = is_c4_free(g);
    bool all_c4 = true, all_p4 = true;
    auto es = g.edges();
    for (std::size_t x = 0; x < es.size() && (all_c4 || all_p4); ++x)
        for (std::size_t y = x + 1; y < es.size(); ++y) {
            auto [a, b] = es[x];
            auto [c, d] = es[y];
            if (a == c || a == d || b == c || b == d) continue;
            PairPattern pat = pair_connectivity_pattern(g, make_edge_pair(g, es[x], es[y]));
            all_c4 = all_c4 && pat.in_c4;
            all_p4 = all_p4 && pat.in_p4;
        }

    bool b4 = (mu == std::optional<int>(4)) == (is_complete(g) && g.vertex_count() >= 4);
    bool b2 = (mu == std::optional<int>(2)) == (dia_free && k4_free && all_c4);
    bool b1 = (mu == std::optional<int>(1)) == (dia_free && k4_free && c4_free && all_p4);
    bool b0 = (mu == std::optional<int>(0)) == is_disjoint_union_of_triangles_and_edges(g);
    v.agree = b4 && b2 && b1 && b0;
    if (!v.agree) {
        v.detail += "failed branch(es):";
        if (!b4) v.detail += " mu=4<=>complete";
        if (!b2) v.detail += " mu=2<=>(diamond,K4)-free+C4";
        if (!b1) v.detail += " mu=1<=>(diamond,K4,C4)-free+P4";
        if (!b0) v.detail += " mu=0<=>triangles+edges";
    }
    return v;
}

TheoremVerdict verify_subdivision_edge(const Graph& g) {
    TheoremVerdict v;
    v.theorem = TheoremId::SubdivisionEdge;
    v.inputs = inputs_of(g);
    bool h = is_disjoint_union_of_cycles(g);
    Graph s = subdivision(g);
    ClassificationReport rep = classify(s);
    v.observed = short_profile(rep);
    v.hypothesis_holds = h;
    if (h) {
        v.predicted = std::vector<int>{2 * g.vertex_count(), 2, 0};
        v.agree = rep.n == 2 * g.vertex_count() && rep.regular_k && *rep.regular_k == 2 &&
                  rep.edge_regular.yes() && rep.edge_regular.value == 0;
    } else {
        v.agree = !rep.edge_regular.yes();
        if (rep.edge_regular.vacuous()) {
            v.vacuous = true;
            v.detail = "edgeless input; subdivision vacuously edge-regular, logged.";
        }
    }
    return v;
}

namespace {

bool strictly_pseudo_nondegenerate(const ClassificationReport& r, const Graph& g) {
    return r.regular_k && r.pseudo.yes() && !is_complete(g) && !is_edgeless(g);
}

}  // namespace

TheoremVerdict verify_direct_pseudo_nonexistence(int max_n) {
    TheoremVerdict v;
    v.theorem = TheoremId::DirectPseudoNonexistence;
    v.inputs = "connected census n<=" + std::to_string(max_n);
    v.hypothesis_holds = true;
    auto records = run_census(max_n, /*connected_only=*/true);
    long checked = 0, skipped = 0, counterexamples = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        Graph g1 = decode_graph6(records[i].g6);
        for (std::size_t j = i; j < records.size(); ++j) {
            if (records[i].n * records[j].n > 36) continue;
            Graph g2 = decode_graph6(records[j].g6);
            if (!strictly_pseudo_nondegenerate(records[i].report, g1) ||
                !strictly_pseudo_nondegenerate(records[j].report, g2)) {
                ++skipped;
                continue;
            }
            ++checked;
            if (classify(direct_product(g1, g2)).pseudo.yes()) {
                ++counterexamples;
                v.detail += "counterexample: " + records[i].g6 + " x " + records[j].g6 + ". ";
            }
        }
    }
    v.agree = counterexamples == 0;
    v.observed = std::to_string(checked) + " strictly-pseudo pairs checked, " + std::to_string(skipped) +
                 " degenerate pairs skipped, " + std::to_string(counterexamples) + " counterexamples";
    v.detail += "no counterexample up to n=" + std::to_string(max_n) + " (bounded sweep, not a proof).";
    return v;
}

TheoremVerdict verify_strong_pseudo_nonexistence(int max_n) {
    TheoremVerdict v;
    v.theorem = TheoremId::StrongPseudoNonexistence;
    v.inputs = "connected census n<=" + std::to_string(max_n);
    v.hypothesis_holds = true;
    auto records = run_census(max_n, /*connected_only=*/true);
    long checked = 0, skipped = 0, counterexamples = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        Graph g1 = decode_graph6(records[i].g6);
        for (std::size_t j = i; j < records.size(); ++j) {
            if (records[i].n * records[j].n > 36) continue;
            Graph g2 = decode_graph6(records[j].g6);
            if (!strictly_pseudo_nondegenerate(records[i].report, g1) ||
                !strictly_pseudo_nondegenerate(records[j].report, g2)) {
                ++skipped;
                continue;
            }
            ++checked;
            if (classify(strong_product(g1, g2)).pseudo.yes()) {
                ++counterexamples;
                v.detail += "counterexample: " + records[i].g6 + " x " + records[j].g6 + ". ";
            }
        }
    }
    v.agree = counterexamples == 0;
    v.observed = std::to_string(checked) + " strictly-pseudo pairs checked, " + std::to_string(skipped) +
                 " degenerate pairs skipped, " + std::to_string(counterexamples) + " counterexamples";
    v.detail += "no counterexample up to n=" + std::to_string(max_n) + " (bounded sweep, not a proof).";
    return v;
}

TheoremVerdict verify_line_no_mu3(int max_n) {
    TheoremVerdict v;
    v.theorem = TheoremId::LineNoMu3;
    v.inputs = "connected census n<=" + std::to_string(max_n);
    v.hypothesis_holds = true;
    auto records = run_census(max_n, /*connected_only=*/true);
    long checked = 0, hits = 0;
    for (const auto& rec : records) {
        Graph g = decode_graph6(rec.g6);
        ++checked;
        ClassificationReport rep = classify(line_graph(g).graph);
        if (rep.pseudo.yes() && rep.pseudo.value == 3) {
            ++hits;
            v.detail += "counterexample: " + rec.g6 + ". ";
        }
    }
    v.agree = hits == 0;
    v.observed = std::to_string(checked) + " regular graphs checked, " + std::to_string(hits) +
                 " line graphs pseudo with mu=3";
    v.detail += "no line graph with mu=3 up to n=" + std::to_string(max_n) + ".";
    return v;
}

TheoremVerdict verify_subdivision_pseudo_nonexistence(int max_n) {
    TheoremVerdict v;
    v.theorem = TheoremId::SubdivisionPseudoNonexistence;
    v.inputs = "connected census n<=" + std::to_string(max_n);
    v.hypothesis_holds = true;
    auto records = run_census(max_n, /*connected_only=*/true);
    long checked = 0, skipped = 0, counterexamples = 0, structure_bad = 0;
    for (const auto& rec : records) {
        Graph g = decode_graph6(rec.g6);
        if (is_edgeless(g)) {
            ++skipped;  // S(G) = G; nothing is subdivided
            continue;
        }
        ++checked;
        Graph s = subdivision(g);
        ClassificationReport rep = classify(s);
        if (rep.pseudo.yes()) {
            ++counterexamples;
            v.detail += "counterexample: " + rec.g6 + ". ";
        }
        // the structured argument: a regular subdivision forces a 2-regular input
        if (rep.regular_k && !regular_degree(g).has_value() ) ++structure_bad;
        if (rep.regular_k && regular_degree(g) && *regular_degree(g) != 2) ++structure_bad;
    }
    v.agree = counterexamples == 0 && structure_bad == 0;
    v.observed = std::to_string(checked) + " graphs checked, " + std::to_string(skipped) +
                 " edgeless skipped, " + std::to_string(counterexamples) + " pseudo subdivisions, " +
                 std::to_string(structure_bad) + " regularity-structure violations";
    v.detail += "S(G) regular only for 2-regular G; even cycles only; no pseudo case up to n=" +
                std::to_string(max_n) + ".";
    return v;
}

std::vector<TheoremVerdict> verify_all(const std::vector<Graph>& corpus, const VerifyAllOptions& opts) {
    std::vector<TheoremVerdict> out;
    for (const Graph& g : corpus) {
        out.push_back(verify_complement_duality(g));
        out.push_back(verify_complement_srg_corollary(g));
        out.push_back(verify_line_edge(g));
        out.push_back(verify_line_mu_bound(g));
        out.push_back(verify_line_pseudo_characterization(g));
        out.push_back(verify_subdivision_edge(g));
    }
    for (const Graph& g1 : corpus) {
        for (const Graph& g2 : corpus) {
            long prod = static_cast<long>(g1.vertex_count()) * g2.vertex_count();
            if (prod > 0 && prod <= opts.pair_product_cap) {
                out.push_back(verify_cartesian_edge(g1, g2));
                out.push_back(verify_direct_edge(g1, g2));
                out.push_back(verify_composition_edge(g1, g2));
                out.push_back(verify_strong_edge(g1, g2));
                out.push_back(verify_cartesian_pseudo(g1, g2));
                out.push_back(verify_composition_pseudo(g1, g2));
            }
            if (g1.vertex_count() + g2.vertex_count() <= opts.join_sum_cap) {
                out.push_back(verify_join_edge(g1, g2));
                out.push_back(verify_join_pseudo(g1, g2));
            }
        }
    }
    if (opts.sweep_max_n > 0) {
        out.push_back(verify_direct_pseudo_nonexistence(opts.sweep_max_n));
        out.push_back(verify_strong_pseudo_nonexistence(opts.sweep_max_n));
        out.push_back(verify_line_no_mu3(opts.sweep_max_n));
        out.push_back(verify_subdivision_pseudo_nonexistence(opts.sweep_max_n));
    }
    return out;
}

int count_disagreements(const std::vector<TheoremVerdict>& verdicts) {
    int bad = 0;
    for (const auto& v : verdicts)
        if (v.applicable && !v.agree) ++bad;
    return bad;
}

}  // namespace regtool
