#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "regtool/census.hpp"
#include "regtool/classify.hpp"
#include "regtool/families.hpp"
#include "regtool/graph.hpp"
#include "regtool/io.hpp"
#include "regtool/ops.hpp"
#include "regtool/theorems.hpp"

namespace {

using namespace regtool;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

// .g6 files hold one graph6 line per graph; .el files hold a single edge list.
std::vector<Graph> read_graph_file(const std::string& path) {
    std::string text = slurp(path);
    std::vector<Graph> out;
    if (ends_with(path, ".g6")) {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            try {
                out.push_back(decode_graph6(line));
            } catch (const std::exception& e) {
                throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
            }
        }
        if (out.empty()) throw std::runtime_error(path + ": no graphs found");
    } else if (ends_with(path, ".el")) {
        try {
            out.push_back(read_edge_list(text));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ": " + e.what());
        }
    } else {
        throw std::runtime_error("unknown graph file extension (use .g6 or .el): " + path);
    }
    return out;
}

Graph read_single_graph(const std::string& path) { return read_graph_file(path).front(); }

void write_graph(const Graph& g, const std::string& path) {
    std::string line = encode_graph6(g) + "\n";
    if (path.empty() || path == "-") {
        std::cout << line;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << line;
}

int run_classify(const std::string& path, bool json) {
    auto graphs = read_graph_file(path);
    bool first = true;
    for (const Graph& g : graphs) {
        ClassificationReport r = classify(g);
        if (json) {
            std::cout << to_json(r).dump() << "\n";
        } else {
            if (!first) std::cout << "\n";
            std::cout << to_text(r);
        }
        first = false;
    }
    return 0;
}

int run_op(const std::string& kind_name, const std::vector<std::string>& inputs, const std::string& out_path) {
    auto kind = operation_from_name(kind_name);
    if (!kind) throw CLI::ValidationError("op", "unknown operation kind: " + kind_name);
    bool binary = *kind == OperationKind::Cartesian || *kind == OperationKind::Direct ||
                  *kind == OperationKind::Composition || *kind == OperationKind::Strong ||
                  *kind == OperationKind::Join;
    if (binary && inputs.size() != 2)
        throw CLI::ValidationError("op", std::string(operation_name(*kind)) + " takes two input graphs");
    if (!binary && inputs.size() != 1)
        throw CLI::ValidationError("op", std::string(operation_name(*kind)) + " takes one input graph");

    Graph a = read_single_graph(inputs[0]);
    Graph result;
    switch (*kind) {
        case OperationKind::Complement: result = complement(a); break;
        case OperationKind::Cartesian: result = cartesian(a, read_single_graph(inputs[1])); break;
        case OperationKind::Direct: result = direct_product(a, read_single_graph(inputs[1])); break;
        case OperationKind::Composition: result = composition(a, read_single_graph(inputs[1])); break;
        case OperationKind::Strong: result = strong_product(a, read_single_graph(inputs[1])); break;
        case OperationKind::Join: result = join(a, read_single_graph(inputs[1])); break;
        case OperationKind::LineGraph: result = line_graph(a).graph; break;
        case OperationKind::Subdivision: result = subdivision(a); break;
        case OperationKind::SemiTotalPoint: result = semi_total_point(a); break;
    }
    write_graph(result, out_path);
    return 0;
}

int run_family(const std::string& name, const std::vector<int>& params, const std::string& out_path) {
    auto fam = family_from_name(name);
    if (!fam) throw CLI::ValidationError("family", "unknown family: " + name);
    FamilySpec spec{*fam, params};
    write_graph(generate(spec), out_path);
    return 0;
}

void print_verdicts(const std::vector<TheoremVerdict>& verdicts, bool json) {
    for (const auto& v : verdicts) {
        if (json)
            std::cout << verdict_to_json(v).dump() << "\n";
        else
            std::cout << verdict_to_text(v) << "\n";
    }
    if (!json) {
        int skipped = 0, logged = 0;
        for (const auto& v : verdicts) {
            if (!v.applicable) ++skipped;
            else if (v.vacuous) ++logged;
        }
        std::cout << "verdicts: " << verdicts.size() << "  disagreements: " << count_disagreements(verdicts)
                  << "  vacuous-logged: " << logged << "  not-applicable: " << skipped << "\n";
    }
}

int run_verify(const std::string& theorem, bool all, int max_n, const std::vector<std::string>& inputs,
               bool json) {
    std::vector<TheoremVerdict> verdicts;
    if (all) {
        auto records = run_census(max_n, /*connected_only=*/true);
        std::vector<Graph> corpus;
        corpus.reserve(records.size());
        for (const auto& rec : records) corpus.push_back(decode_graph6(rec.g6));
        VerifyAllOptions opts;
        opts.sweep_max_n = max_n;
        verdicts = verify_all(corpus, opts);
    } else {
        auto id = theorem_from_name(theorem);
        if (!id) throw CLI::ValidationError("verify", "unknown theorem id: " + theorem);
        std::vector<Graph> graphs;
        for (const auto& path : inputs) graphs.push_back(read_single_graph(path));
        auto need = [&](std::size_t n) {
            if (graphs.size() != n)
                throw CLI::ValidationError("verify", std::string(theorem_name(*id)) + " takes " +
                                                         std::to_string(n) + " input graph(s)");
        };
        switch (*id) {
            case TheoremId::ComplementDuality: need(1); verdicts.push_back(verify_complement_duality(graphs[0])); break;
            case TheoremId::ComplementSrgCorollary: need(1); verdicts.push_back(verify_complement_srg_corollary(graphs[0])); break;
            case TheoremId::CartesianEdge: need(2); verdicts.push_back(verify_cartesian_edge(graphs[0], graphs[1])); break;
            case TheoremId::CartesianPseudo: need(2); verdicts.push_back(verify_cartesian_pseudo(graphs[0], graphs[1])); break;
            case TheoremId::DirectEdge: need(2); verdicts.push_back(verify_direct_edge(graphs[0], graphs[1])); break;
            case TheoremId::DirectPseudoNonexistence: need(0); verdicts.push_back(verify_direct_pseudo_nonexistence(max_n)); break;
            case TheoremId::CompositionEdge: need(2); verdicts.push_back(verify_composition_edge(graphs[0], graphs[1])); break;
            case TheoremId::CompositionPseudo: need(2); verdicts.push_back(verify_composition_pseudo(graphs[0], graphs[1])); break;
            case TheoremId::StrongEdge: need(2); verdicts.push_back(verify_strong_edge(graphs[0], graphs[1])); break;
            case TheoremId::StrongPseudoNonexistence: need(0); verdicts.push_back(verify_strong_pseudo_nonexistence(max_n)); break;
            case TheoremId::JoinEdge: need(2); verdicts.push_back(verify_join_edge(graphs[0], graphs[1])); break;
            case TheoremId::JoinPseudo: need(2); verdicts.push_back(verify_join_pseudo(graphs[0], graphs[1])); break;
            case TheoremId::LineEdge: need(1); verdicts.push_back(verify_line_edge(graphs[0])); break;
            case TheoremId::LineMuAtMost4: need(1); verdicts.push_back(verify_line_mu_bound(graphs[0])); break;
            case TheoremId::LineNoMu3: need(0); verdicts.push_back(verify_line_no_mu3(max_n)); break;
            case TheoremId::LinePseudoCharacterization: need(1); verdicts.push_back(verify_line_pseudo_characterization(graphs[0])); break;
            case TheoremId::SubdivisionEdge: need(1); verdicts.push_back(verify_subdivision_edge(graphs[0])); break;
            case TheoremId::SubdivisionPseudoNonexistence: need(0); verdicts.push_back(verify_subdivision_pseudo_nonexistence(max_n)); break;
        }
    }
    print_verdicts(verdicts, json);
    return count_disagreements(verdicts) > 0 ? 1 : 0;
}

int run_census_cmd(int max_n, bool connected, const std::string& out_path) {
    auto records = run_census(max_n, connected);
    if (out_path.empty() || out_path == "-") {
        write_catalog(std::cout, records);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open file for writing: " + out_path);
        write_catalog(out, records);
    }
    return 0;
}

// Filters: n, k, lambda, mu (integers), edge_regular/pseudo (yes|no|vacuous),
// srg/deza (true|false). srg=true means both parameters non-vacuous.
int run_query(const std::string& catalog_path, const std::vector<std::string>& filters) {
    std::ifstream in(catalog_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + catalog_path);
    auto records = read_catalog(in);

    std::vector<std::pair<std::string, std::string>> kvs;
    for (const auto& f : filters) {
        auto eq = f.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("query", "filter must be key=value: " + f);
        std::string key = f.substr(0, eq);
        std::string value = f.substr(eq + 1);
        if (key == "n" || key == "k" || key == "lambda" || key == "mu") {
            if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
                throw CLI::ValidationError("query", "filter " + key + " needs an integer, got: " + value);
        } else if (key == "edge_regular" || key == "pseudo") {
            if (value != "yes" && value != "no" && value != "vacuous")
                throw CLI::ValidationError("query", "filter " + key + " takes yes|no|vacuous, got: " + value);
        } else if (key == "srg" || key == "deza") {
            if (value != "true" && value != "false")
                throw CLI::ValidationError("query", "filter " + key + " takes true|false, got: " + value);
        } else {
            throw CLI::ValidationError("query", "unknown filter key: " + key);
        }
        kvs.emplace_back(std::move(key), std::move(value));
    }

    auto pred = [&kvs](const CensusRecord& rec) {
        for (const auto& [key, value] : kvs) {
            const ClassificationReport& r = rec.report;
            if (key == "n") {
                if (rec.n != std::stoi(value)) return false;
            } else if (key == "k") {
                if (rec.k != std::stoi(value)) return false;
            } else if (key == "lambda") {
                if (!r.edge_regular.yes() || r.edge_regular.value != std::stoi(value)) return false;
            } else if (key == "mu") {
                if (!r.pseudo.yes() || r.pseudo.value != std::stoi(value)) return false;
            } else if (key == "edge_regular") {
                std::string s = r.edge_regular.yes() ? "yes" : r.edge_regular.vacuous() ? "vacuous" : "no";
                if (s != value) return false;
            } else if (key == "pseudo") {
                std::string s = r.pseudo.yes() ? "yes" : r.pseudo.vacuous() ? "vacuous" : "no";
                if (s != value) return false;
            } else if (key == "srg") {
                bool strict = r.srg && r.srg->lambda && r.srg->mu;
                if (strict != (value == "true")) return false;
            } else if (key == "deza") {
                if (r.deza.has_value() != (value == "true")) return false;
            }
        }
        return true;
    };

    for (const auto& rec : query(records, pred)) std::cout << record_to_json(rec).dump() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"regtool: edge-regular and pseudo strongly regular graph toolkit"};
    app.require_subcommand(1);

    std::string classify_path;
    bool classify_json = false;
    auto* c = app.add_subcommand("classify", "classify a graph file (.g6 or .el)");
    c->add_option("file", classify_path, "input graph file")->required();
    c->add_flag("--json", classify_json, "emit JSON (one document per graph)");

    std::string op_kind, op_out;
    std::vector<std::string> op_inputs;
    auto* o = app.add_subcommand("op", "apply a graph operation");
    o->add_option("--kind", op_kind,
                  "operation: complement|cartesian|direct|composition|strong|join|line|subdivision|semitotal")
        ->required();
    o->add_option("inputs", op_inputs, "input graph file(s)")->required();
    o->add_option("-o,--output", op_out, "output graph6 file (default stdout)");

    std::string family_sel, family_out;
    std::vector<int> family_params;
    auto* f = app.add_subcommand("family", "generate a named graph family member");
    f->add_option("name", family_sel,
                  "family: cycle|path|complete|complete-bipartite|complete-multipartite|edgeless|"
                  "octahedron|petersen|disjoint-union|merged-double-rc")
        ->required();
    f->add_option("params", family_params, "family parameters");
    f->add_option("-o,--output", family_out, "output graph6 file (default stdout)");

    std::string verify_theorem;
    bool verify_all_flag = false;
    int verify_max_n = 6;
    bool verify_json = false;
    std::vector<std::string> verify_inputs;
    auto* v = app.add_subcommand("verify", "run theorem verifiers; exit 1 on any disagreement");
    v->add_option("--theorem", verify_theorem, "theorem id (see README)");
    v->add_flag("--all", verify_all_flag, "run every verifier over the connected census");
    v->add_option("--max-n", verify_max_n, "census bound for --all and the nonexistence sweeps")
        ->check(CLI::Range(1, 10));
    v->add_flag("--json", verify_json, "emit JSONL verdicts");
    v->add_option("inputs", verify_inputs, "input graph file(s)");

    int census_max_n = 8;
    bool census_connected = false;
    std::string census_out;
    auto* s = app.add_subcommand("census", "enumerate and classify all small regular graphs");
    s->add_option("--max-n", census_max_n, "largest vertex count")->check(CLI::Range(1, 10));
    s->add_flag("--connected", census_connected, "connected graphs only");
    s->add_option("-o,--output", census_out, "output JSONL catalog (default stdout)");

    std::string query_catalog;
    std::vector<std::string> query_filters;
    auto* q = app.add_subcommand("query", "filter a census catalog");
    q->add_option("catalog", query_catalog, "JSONL catalog file")->required();
    q->add_option("--filter", query_filters, "key=value (n, k, lambda, mu, edge_regular, pseudo, srg, deza)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*c) return run_classify(classify_path, classify_json);
        if (*o) return run_op(op_kind, op_inputs, op_out);
        if (*f) return run_family(family_sel, family_params, family_out);
        if (*v) {
            if (!verify_all_flag && verify_theorem.empty())
                throw CLI::ValidationError("verify", "need --theorem <id> or --all");
            return run_verify(verify_theorem, verify_all_flag, verify_max_n, verify_inputs, verify_json);
        }
        if (*s) return run_census_cmd(census_max_n, census_connected, census_out);
        if (*q) return run_query(query_catalog, query_filters);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
