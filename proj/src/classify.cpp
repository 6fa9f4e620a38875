#include "regtool/classify.hpp"

#include <set>
#include <sstream>

namespace regtool {

namespace {

Cond common_profile(const Graph& g, bool adjacent) {
    int n = g.vertex_count();
    bool any = false;
    int value = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v) != adjacent) continue;
            int c = g.common_neighbors(u, v);
            if (!any) {
                any = true;
                value = c;
            } else if (c != value) {
                return Cond{CondStatus::No, 0};
            }
        }
    }
    if (!any) return Cond{CondStatus::Vacuous, 0};
    return Cond{CondStatus::Yes, value};
}

}  // namespace

Cond adjacent_common_profile(const Graph& g) { return common_profile(g, true); }
Cond nonadjacent_common_profile(const Graph& g) { return common_profile(g, false); }

ClassificationReport classify(const Graph& g) {
    ClassificationReport r;
    r.n = g.vertex_count();
    r.regular_k = regular_degree(g);

    if (r.regular_k) {
        r.edge_regular = adjacent_common_profile(g);
        r.pseudo = nonadjacent_common_profile(g);
        bool er_ok = !r.edge_regular.no();
        bool ps_ok = !r.pseudo.no();
        bool both_vacuous = r.edge_regular.vacuous() && r.pseudo.vacuous();
        if (er_ok && ps_ok && !both_vacuous) {
            SrgParams p;
            p.n = r.n;
            p.k = *r.regular_k;
            if (r.edge_regular.yes()) p.lambda = r.edge_regular.value;
            if (r.pseudo.yes()) p.mu = r.pseudo.value;
            r.srg = p;
        }
    }

    std::set<int> values;
    for (int u = 0; u < r.n && values.size() <= 2; ++u)
        for (int v = u + 1; v < r.n && values.size() <= 2; ++v)
            values.insert(g.common_neighbors(u, v));
    if (values.empty()) {
        r.deza = std::pair{0, 0};  // no pairs at all (n <= 1)
    } else if (values.size() == 1) {
        r.deza = std::pair{*values.begin(), *values.begin()};
    } else if (values.size() == 2) {
        r.deza = std::pair{*values.begin(), *values.rbegin()};
    }
    return r;
}

bool is_edge_regular_with(const Graph& g, int n, int k, int lambda) {
    ClassificationReport r = classify(g);
    if (r.n != n || !r.regular_k || *r.regular_k != k) return false;
    return r.edge_regular.vacuous() || (r.edge_regular.yes() && r.edge_regular.value == lambda);
}

bool is_pseudo_with(const Graph& g, int n, int k, int mu) {
    ClassificationReport r = classify(g);
    if (r.n != n || !r.regular_k || *r.regular_k != k) return false;
    return r.pseudo.vacuous() || (r.pseudo.yes() && r.pseudo.value == mu);
}

bool is_srg_with(const Graph& g, int n, int k, int lambda, int mu) {
    ClassificationReport r = classify(g);
    if (!r.srg || r.srg->n != n || r.srg->k != k) return false;
    if (r.srg->lambda && *r.srg->lambda != lambda) return false;
    if (r.srg->mu && *r.srg->mu != mu) return false;
    return true;
}

namespace {

std::string cond_text(const Cond& c, const char* sym) {
    switch (c.status) {
        case CondStatus::Yes:
            return std::string("yes ") + sym + "=" + std::to_string(c.value);
        case CondStatus::Vacuous:
            return "vacuous";
        default:
            return "no";
    }
}

}  // namespace

std::string to_text(const ClassificationReport& r) {
    std::ostringstream out;
    out << "n: " << r.n << "\n";
    if (r.regular_k)
        out << "k: " << *r.regular_k << "\n";
    else
        out << "k: irregular\n";
    out << "edge-regular: " << cond_text(r.edge_regular, "lambda") << "\n";
    out << "pseudo: " << cond_text(r.pseudo, "mu") << "\n";
    if (r.srg) {
        out << "srg: (" << r.srg->n << "," << r.srg->k << ",";
        if (r.srg->lambda)
            out << *r.srg->lambda;
        else
            out << "-";
        out << ",";
        if (r.srg->mu)
            out << *r.srg->mu;
        else
            out << "-";
        out << ")\n";
    } else {
        out << "srg: no\n";
    }
    if (r.deza)
        out << "deza: {" << r.deza->first << "," << r.deza->second << "}\n";
    else
        out << "deza: no\n";
    return out.str();
}

namespace {

const char* status_name(CondStatus s) {
    switch (s) {
        case CondStatus::Yes: return "yes";
        case CondStatus::Vacuous: return "vacuous";
        default: return "no";
    }
}

}  // namespace

nlohmann::json to_json(const ClassificationReport& r) {
    nlohmann::json j;
    j["n"] = r.n;
    j["k"] = r.regular_k ? nlohmann::json(*r.regular_k) : nlohmann::json();
    j["edge_regular"] = status_name(r.edge_regular.status);
    j["lambda"] = r.edge_regular.yes() ? nlohmann::json(r.edge_regular.value) : nlohmann::json();
    j["pseudo"] = status_name(r.pseudo.status);
    j["mu"] = r.pseudo.yes() ? nlohmann::json(r.pseudo.value) : nlohmann::json();
    if (r.srg) {
        nlohmann::json s;
        s["n"] = r.srg->n;
        s["k"] = r.srg->k;
        s["lambda"] = r.srg->lambda ? nlohmann::json(*r.srg->lambda) : nlohmann::json();
        s["mu"] = r.srg->mu ? nlohmann::json(*r.srg->mu) : nlohmann::json();
        j["srg"] = s;
    } else {
        j["srg"] = nlohmann::json();
    }
    j["deza"] = r.deza ? nlohmann::json::array({r.deza->first, r.deza->second}) : nlohmann::json();
    return j;
}

}  // namespace regtool
