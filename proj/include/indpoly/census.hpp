#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "indpoly/analysis.hpp"

namespace indpoly {

/// Aggregate over a corpus. Root counts are weighted by multiplicity and
/// boundary-flagged roots are never counted on either side of a boundary.
struct CensusSummary {
    std::size_t graphs_processed = 0;
    std::size_t failures = 0;
    long total_roots = 0;
    long roots_outside_sector = 0;
    long roots_on_sector_boundary = 0;
    long right_half_plane_roots = 0;
    long roots_on_imaginary_axis = 0;
    long roots_inside_region = 0;
    std::size_t non_unimodal_count = 0;
    std::size_t non_log_concave_count = 0;
    std::size_t non_strictly_log_concave_count = 0;
    std::size_t very_well_covered_count = 0;
    std::size_t very_well_covered_non_unimodal = 0;

    /// Roots outside the sector when boundary roots are counted as outside
    /// (the closed-complement reading).
    long roots_outside_sector_closed() const { return roots_outside_sector + roots_on_sector_boundary; }

    void add(const AnalysisReport& report);
    friend bool operator==(const CensusSummary&, const CensusSummary&) = default;
};

struct BoundaryRoot {
    std::string graph_id;
    ClassifiedRoot root;
};

struct CorpusFailure {
    std::size_t line = 0;
    std::string graph_id;
    std::string message;
    /// 2 = parse error, 3 = numeric failure (matches CLI exit codes).
    int kind = 2;
};

struct CorpusConfig {
    AnalysisConfig analysis;
    unsigned jobs = 1;
    bool fail_fast = false;
    bool keep_reports = true;
    enum class Format { Graph6, EdgeList } format = Format::Graph6;
};

struct CorpusResult {
    CensusSummary summary;
    /// In input order.
    std::vector<AnalysisReport> reports;
    std::vector<BoundaryRoot> boundary_roots;
    std::vector<CorpusFailure> failures;
};

/// Analyzes every graph6 line of `in` (blank lines skipped; graph_id is the
/// 1-based line number). Work is spread over `jobs` workers, each with its own
/// engine; results are collected in input order, so the outcome does not
/// depend on scheduling. With fail_fast the first failure is rethrown.
/// `on_report`, when set, is called in input order after all work completes.
CorpusResult run_corpus(std::istream& in, const CorpusConfig& config,
                        const std::function<void(const AnalysisReport&)>& on_report = {});
CorpusResult run_corpus(const std::string& path, const CorpusConfig& config,
                        const std::function<void(const AnalysisReport&)>& on_report = {});

/// Analyzes already-parsed graphs with the same scheduling guarantees.
CorpusResult run_graphs(const std::vector<Graph>& graphs, const CorpusConfig& config);

std::string format_summary(const CensusSummary& s);

void to_json(nlohmann::json& j, const CensusSummary& s);

}  // namespace indpoly
