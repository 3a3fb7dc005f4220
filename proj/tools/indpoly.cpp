// indpoly: command-line front end for the independence polynomial toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 input parse error, 3 numeric failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "indpoly/analysis.hpp"
#include "indpoly/census.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/graph_io.hpp"
#include "indpoly/plot.hpp"
#include "indpoly/theorems.hpp"

using namespace indpoly;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kNumeric = 3 };

struct InputOptions {
    std::string input;
    std::string graph;
    std::string gen;
    std::string format = "g6";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--input,-i", in.input, "Graph file (graph6 lines or edge list)");
    cmd->add_option("--graph,-g", in.graph, "Inline graph6 string");
    cmd->add_option("--gen", in.gen, "Generator: path:N cycle:N complete:N edgeless:N star:N kbip:A,B");
    cmd->add_option("--format", in.format, "Input format")->check(CLI::IsMember({"g6", "edgelist"}));
}

Graph generate(const std::string& desc) {
    const auto colon = desc.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("generator must be NAME:ARGS");
    const std::string name = desc.substr(0, colon), args = desc.substr(colon + 1);
    if (name == "kbip") {
        const auto comma = args.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("kbip needs A,B");
        return complete_bipartite(std::stoi(args.substr(0, comma)), std::stoi(args.substr(comma + 1)));
    }
    const int n = std::stoi(args);
    if (name == "path") return path(n);
    if (name == "cycle") return cycle(n);
    if (name == "complete") return complete(n);
    if (name == "edgeless") return edgeless(n);
    if (name == "star") return star(n);
    throw std::invalid_argument("unknown generator: " + name);
}

struct NamedGraph {
    std::string id;
    Graph graph;
};

std::vector<NamedGraph> load_graphs(const InputOptions& in) {
    const int sources = !in.input.empty() + !in.graph.empty() + !in.gen.empty();
    if (sources != 1) throw std::invalid_argument("give exactly one of --input, --graph, --gen");
    if (!in.graph.empty()) return {{"1", parse_graph6(in.graph)}};
    if (!in.gen.empty()) return {{in.gen, generate(in.gen)}};

    std::ifstream file(in.input);
    if (!file) throw ParseError("cannot open " + in.input, 0);
    if (in.format == "edgelist") return {{"1", parse_edge_list(file)}};
    std::vector<NamedGraph> out;
    std::string line;
    for (std::size_t lineno = 1; std::getline(file, line); ++lineno) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back({std::to_string(lineno), parse_graph6(line)});
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.offset());
        }
    }
    return out;
}

/// Writes to --output when given, else stdout.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::runtime_error("cannot write " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::string format_root(const ComplexRoot& r) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g %c %.12gi", r.re, r.im < 0 ? '-' : '+', std::abs(r.im));
    std::string s = buf;
    if (r.multiplicity > 1) s += "  (x" + std::to_string(r.multiplicity) + ")";
    return s;
}

void print_report(std::ostream& os, const AnalysisReport& r) {
    os << "graph " << r.graph_id << ": order " << r.order << ", alpha " << r.independence_number << '\n'
       << "  i(G,x) = " << r.polynomial.to_string() << '\n'
       << "  unimodal " << r.verdict.unimodal << ", log-concave " << r.verdict.log_concave
       << ", strictly log-concave " << r.verdict.strictly_log_concave << ", Newton " << r.verdict.newton_satisfied
       << '\n';
    if (r.M) os << "  M = " << *r.M << '\n';
    for (const auto& [root, cls] : r.roots) {
        os << "  root " << format_root(root) << (cls.in_sector ? "  in-sector" : "  outside-sector")
           << (cls.boundary_flag() ? "  [boundary]" : "") << '\n';
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Independence polynomials, leafy extensions and root geometry"};
    app.require_subcommand(1);

    InputOptions in;
    std::string output;
    bool as_json = false;
    double tol = kDefaultTolerance;
    unsigned jobs = 1;

    auto* poly = app.add_subcommand("poly", "Print i(G,x)");
    auto* construct = app.add_subcommand("construct", "Apply a construction and emit graph6");
    auto* roots = app.add_subcommand("roots", "Roots of i(G,x) as CSV");
    auto* analyze = app.add_subcommand("analyze", "Full per-graph analysis");
    auto* corpus = app.add_subcommand("corpus", "Census over a graph6 corpus");
    auto* theorem1 = app.add_subcommand("theorem1", "Check strict log-concavity of G^{k*} for k > M");
    auto* theorem2 = app.add_subcommand("theorem2", "Check the circle-region criterion for G*");
    auto* plot = app.add_subcommand("plot", "SVG scatter of independence roots");

    for (auto* cmd : {poly, construct, roots, analyze, corpus, theorem1, theorem2, plot}) {
        add_input_options(cmd, in);
        cmd->add_option("--output,-o", output, "Output file (default stdout)");
        cmd->add_flag("--json", as_json, "JSON output");
        cmd->add_option("--tol", tol, "Boundary tolerance")->check(CLI::PositiveNumber);
        cmd->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    }

    std::string op;
    int k = 1, m = 1;
    std::string other;
    construct->add_option("--op", op, "leafy | iterated | lex | join | union")
        ->required()
        ->check(CLI::IsMember({"leafy", "iterated", "lex", "join", "union"}));
    construct->add_option("--k", k, "Iterations for --op iterated")->check(CLI::NonNegativeNumber);
    construct->add_option("--m", m, "Blob size for --op lex")->check(CLI::PositiveNumber);
    construct->add_option("--with", other, "Second graph (graph6) for join/union");

    int lex = 1;
    theorem2->add_option("--lex", lex, "Apply the check to G[K̄_m] using the substitution identity")
        ->check(CLI::PositiveNumber);

    bool fail_fast = false;
    std::string csv_path, plot_path;
    corpus->add_flag("--fail-fast", fail_fast, "Stop at the first bad line");
    corpus->add_option("--csv", csv_path, "Also write all roots as CSV");
    corpus->add_option("--plot", plot_path, "Also write an SVG root plot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    AnalysisConfig acfg;
    acfg.tol = tol;

    try {
        if (corpus->parsed()) {
            if (in.input.empty()) throw std::invalid_argument("corpus requires --input");
            CorpusConfig cfg;
            cfg.analysis = acfg;
            cfg.jobs = jobs;
            cfg.fail_fast = fail_fast;
            cfg.format = in.format == "edgelist" ? CorpusConfig::Format::EdgeList : CorpusConfig::Format::Graph6;
            std::ifstream file(in.input);
            if (!file) throw ParseError("cannot open " + in.input, 0);
            auto result = run_corpus(file, cfg);
            Sink sink(output);
            if (as_json) {
                json reports = json::array();
                for (const auto& r : result.reports) reports.push_back(r);
                sink.out() << json{{"summary", result.summary}, {"reports", reports}}.dump(2) << '\n';
            }
            std::ostream& human = as_json && output.empty() ? std::cerr : std::cout;
            human << format_summary(result.summary);
            if (!result.boundary_roots.empty()) {
                human << "boundary-flagged roots:\n";
                for (const auto& b : result.boundary_roots)
                    human << "  graph " << b.graph_id << ": " << format_root(b.root.root) << '\n';
            }
            for (const auto& f : result.failures) human << "line " << f.line << ": " << f.message << '\n';
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path, std::ios::binary);
                if (!csv) throw std::runtime_error("cannot write " + csv_path);
                csv << kRootsCsvHeader << '\n';
                for (const auto& r : result.reports) csv << roots_csv_rows(r);
            }
            if (!plot_path.empty()) emit_plot(result.reports, plot_path);
            for (const auto& f : result.failures)
                if (f.kind == 2) return kParse;
            return result.failures.empty() ? kOk : kNumeric;
        }

        auto graphs = load_graphs(in);

        if (construct->parsed()) {
            Sink sink(output);
            for (const auto& [id, g] : graphs) {
                Graph out;
                if (op == "leafy") out = leafy_extension(g);
                else if (op == "iterated") out = iterated_leafy_extension(g, k);
                else if (op == "lex") out = lexicographic_edgeless(g, m);
                else {
                    if (other.empty()) throw std::invalid_argument("--op " + op + " requires --with");
                    Graph h = parse_graph6(other);
                    out = op == "join" ? join(g, h) : disjoint_union(g, h);
                }
                sink.out() << to_graph6(out) << '\n';
            }
            return kOk;
        }

        if (plot->parsed()) {
            if (output.empty()) throw std::invalid_argument("plot requires --output");
            CorpusConfig cfg;
            cfg.analysis = acfg;
            cfg.jobs = jobs;
            std::vector<Graph> gs;
            for (const auto& ng : graphs) gs.push_back(ng.graph.with_label(ng.id));
            emit_plot(run_graphs(gs, cfg).reports, output);
            return kOk;
        }

        Sink sink(output);
        std::ostream& os = sink.out();
        json all = json::array();

        if (roots->parsed() && !as_json) os << kRootsCsvHeader << '\n';
        for (const auto& [id, g] : graphs) {
            if (poly->parsed()) {
                const auto p = independence_polynomial(g);
                if (as_json) all.push_back({{"graph_id", id}, {"coefficients", p}});
                else os << p.to_string() << '\n';
            } else if (roots->parsed() || analyze->parsed()) {
                const auto r = analyze_graph(g, id, acfg);
                if (as_json) all.push_back(roots->parsed() ? json{{"graph_id", id}, {"roots", json(r)["roots"]}} : json(r));
                else if (roots->parsed()) os << roots_csv_rows(r);
                else print_report(os, r);
            } else if (theorem1->parsed()) {
                Theorem1Config cfg;
                cfg.tol = tol;
                const auto r = check_theorem1(g, cfg);
                json j = {{"graph_id", id},        {"M", r.M},
                          {"k", r.k},              {"degree", r.degree},
                          {"strictly_log_concave", r.strictly_log_concave},
                          {"roots_in_sector", r.roots_strictly_in_sector},
                          {"roots_not_in_sector", r.roots_not_strictly_in_sector},
                          {"holds", r.conclusion_holds()}};
                if (as_json) all.push_back(j);
                else
                    os << "graph " << id << ": M = " << r.M << ", k = " << r.k << ", degree " << r.degree
                       << ", strictly log-concave " << r.strictly_log_concave << ", roots in sector "
                       << r.roots_strictly_in_sector << "/" << r.degree << (r.conclusion_holds() ? "  OK" : "  FAILED")
                       << '\n';
            } else if (theorem2->parsed()) {
                const auto r = lex > 1 ? check_theorem2(substitute_lexicographic(independence_polynomial(g), lex),
                                                        g.order() * lex, tol)
                                       : check_theorem2(g, tol);
                json j = {{"graph_id", id},
                          {"order", r.order},
                          {"hypothesis", r.hypothesis},
                          {"hypothesis_boundary", r.hypothesis_boundary},
                          {"extension_log_concave", r.extension_log_concave},
                          {"extension_strictly_log_concave", r.extension_strictly_log_concave},
                          {"extension_roots_outside_sector", r.extension_roots_outside_sector},
                          {"extension_roots_on_sector_boundary", r.extension_roots_on_sector_boundary},
                          {"implication_holds", r.implication_holds()}};
                if (as_json) all.push_back(j);
                else
                    os << "graph " << id << ": order " << r.order << ", roots outside circles " << r.hypothesis
                       << ", i(G*) log-concave " << r.extension_log_concave << " (strict "
                       << r.extension_strictly_log_concave << "), i(G*) roots outside sector "
                       << r.extension_roots_outside_sector << '\n';
            }
        }
        if (as_json) os << all.dump(2) << '\n';
        return kOk;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const NumericError& e) {
        std::cerr << "numeric failure: " << e.what() << " (residual " << e.residual() << ")\n";
        return kNumeric;
    } catch (const PoleError& e) {
        std::cerr << "numeric failure: " << e.what() << '\n';
        return kNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
