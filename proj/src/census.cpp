#include "indpoly/census.hpp"

#include <atomic>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <variant>

#include "indpoly/errors.hpp"
#include "indpoly/graph_io.hpp"

namespace indpoly {

void CensusSummary::add(const AnalysisReport& r) {
    ++graphs_processed;
    total_roots += r.counts.total;
    roots_outside_sector += r.counts.outside_sector;
    roots_on_sector_boundary += r.counts.sector_boundary;
    right_half_plane_roots += r.counts.right_half_plane;
    roots_on_imaginary_axis += r.counts.imaginary_axis;
    roots_inside_region += r.counts.inside_region;
    if (!r.verdict.unimodal) ++non_unimodal_count;
    if (!r.verdict.log_concave) ++non_log_concave_count;
    if (!r.verdict.strictly_log_concave) ++non_strictly_log_concave_count;
    if (r.very_well_covered.value_or(false)) {
        ++very_well_covered_count;
        if (!r.verdict.unimodal) ++very_well_covered_non_unimodal;
    }
}

namespace {

struct Job {
    std::size_t line = 0;
    std::string id;
    std::variant<Graph, std::string> input;  // graph, or parse error message
};

using Outcome = std::variant<AnalysisReport, CorpusFailure>;

CorpusResult execute(std::vector<Job> jobs, const CorpusConfig& config,
                     const std::function<void(const AnalysisReport&)>& on_report) {
    std::vector<std::optional<Outcome>> outcomes(jobs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> abort{false};

    auto worker = [&] {
        IndependencePolynomialEngine engine(config.analysis.memo_capacity);
        for (std::size_t i = next++; i < jobs.size() && !abort; i = next++) {
            const Job& job = jobs[i];
            if (const auto* msg = std::get_if<std::string>(&job.input)) {
                outcomes[i] = CorpusFailure{job.line, job.id, *msg, 2};
            } else {
                try {
                    outcomes[i] = analyze_graph(std::get<Graph>(job.input), job.id, config.analysis, engine);
                    continue;
                } catch (const std::exception& e) {
                    outcomes[i] = CorpusFailure{job.line, job.id, e.what(), 3};
                }
            }
            if (config.fail_fast) abort = true;
        }
    };

    const unsigned n = std::max(1u, config.jobs);
    if (n == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    }

    CorpusResult result;
    for (auto& slot : outcomes) {
        if (!slot) continue;  // not reached after a fail-fast abort
        Outcome& o = *slot;
        if (auto* f = std::get_if<CorpusFailure>(&o)) {
            if (config.fail_fast) {
                if (f->kind == 2) throw ParseError("line " + std::to_string(f->line) + ": " + f->message, 0);
                throw NumericError(f->message, {}, 0.0);
            }
            ++result.summary.failures;
            result.failures.push_back(std::move(*f));
            continue;
        }
        auto& report = std::get<AnalysisReport>(o);
        result.summary.add(report);
        for (const auto& r : report.roots)
            if (r.classification.boundary_flag()) result.boundary_roots.push_back({report.graph_id, r});
        if (on_report) on_report(report);
        if (config.keep_reports) result.reports.push_back(std::move(report));
    }
    return result;
}

}  // namespace

CorpusResult run_corpus(std::istream& in, const CorpusConfig& config,
                        const std::function<void(const AnalysisReport&)>& on_report) {
    std::vector<Job> jobs;
    if (config.format == CorpusConfig::Format::EdgeList) {
        try {
            jobs.push_back({1, "1", parse_edge_list(in)});
        } catch (const ParseError& e) {
            jobs.push_back({1, "1", std::string(e.what())});
        }
        return execute(std::move(jobs), config, on_report);
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::string id = std::to_string(lineno);
        try {
            jobs.push_back({lineno, id, parse_graph6(line)});
        } catch (const ParseError& e) {
            jobs.push_back({lineno, id, std::string(e.what())});
        }
    }
    return execute(std::move(jobs), config, on_report);
}

CorpusResult run_corpus(const std::string& path, const CorpusConfig& config,
                        const std::function<void(const AnalysisReport&)>& on_report) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    return run_corpus(in, config, on_report);
}

CorpusResult run_graphs(const std::vector<Graph>& graphs, const CorpusConfig& config) {
    std::vector<Job> jobs;
    jobs.reserve(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        std::string id = graphs[i].label().empty() ? std::to_string(i + 1) : graphs[i].label();
        jobs.push_back({i + 1, std::move(id), graphs[i]});
    }
    return execute(std::move(jobs), config, {});
}

std::string format_summary(const CensusSummary& s) {
    std::ostringstream out;
    out << "graphs processed:             " << s.graphs_processed << '\n'
        << "failures:                     " << s.failures << '\n'
        << "total roots:                  " << s.total_roots << '\n'
        << "roots outside sector:         " << s.roots_outside_sector << '\n'
        << "roots on sector boundary:     " << s.roots_on_sector_boundary << '\n'
        << "  outside incl. boundary:     " << s.roots_outside_sector_closed() << '\n'
        << "roots inside circle region:   " << s.roots_inside_region << '\n'
        << "right half-plane roots:       " << s.right_half_plane_roots << '\n'
        << "roots on imaginary axis:      " << s.roots_on_imaginary_axis << '\n'
        << "non-unimodal graphs:          " << s.non_unimodal_count << '\n'
        << "non-log-concave graphs:       " << s.non_log_concave_count << '\n'
        << "non-strictly-log-concave:     " << s.non_strictly_log_concave_count << '\n'
        << "very well-covered graphs:     " << s.very_well_covered_count << '\n'
        << "  of which non-unimodal:      " << s.very_well_covered_non_unimodal << '\n';
    return out.str();
}

void to_json(nlohmann::json& j, const CensusSummary& s) {
    j = {{"graphs_processed", s.graphs_processed},
         {"failures", s.failures},
         {"total_roots", s.total_roots},
         {"roots_outside_sector", s.roots_outside_sector},
         {"roots_on_sector_boundary", s.roots_on_sector_boundary},
         {"roots_outside_sector_closed", s.roots_outside_sector_closed()},
         {"right_half_plane_roots", s.right_half_plane_roots},
         {"roots_on_imaginary_axis", s.roots_on_imaginary_axis},
         {"roots_inside_region", s.roots_inside_region},
         {"non_unimodal_count", s.non_unimodal_count},
         {"non_log_concave_count", s.non_log_concave_count},
         {"non_strictly_log_concave_count", s.non_strictly_log_concave_count},
         {"very_well_covered_count", s.very_well_covered_count},
         {"very_well_covered_non_unimodal", s.very_well_covered_non_unimodal}};
}

}  // namespace indpoly
