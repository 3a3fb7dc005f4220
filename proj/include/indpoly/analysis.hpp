#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "indpoly/engine.hpp"
#include "indpoly/geometry.hpp"
#include "indpoly/graph.hpp"
#include "indpoly/polynomial.hpp"
#include "indpoly/roots.hpp"
#include "indpoly/sequence.hpp"

namespace indpoly {

struct AnalysisConfig {
    double tol = kDefaultTolerance;
    /// Graphs above this order are refused by analyze_graph.
    int max_order = 128;
    /// Well-coveredness is evaluated only up to this order.
    int mis_vertex_cap = kDefaultMisVertexCap;
    std::size_t memo_capacity = kDefaultMemoCapacity;
    RootFinderConfig roots;
};

struct ClassifiedRoot {
    ComplexRoot root;
    RootClassification classification;
    friend bool operator==(const ClassifiedRoot&, const ClassifiedRoot&) = default;
};

/// Counts weighted by multiplicity.
struct RootCounts {
    int total = 0;
    int outside_sector = 0;
    int sector_boundary = 0;
    int inside_region = 0;
    int region_boundary = 0;
    int right_half_plane = 0;
    int imaginary_axis = 0;
    friend bool operator==(const RootCounts&, const RootCounts&) = default;
};

struct AnalysisReport {
    std::string graph_id;
    int order = 0;
    int independence_number = 0;
    IntPolynomial polynomial;
    SequenceVerdict verdict;
    /// Absent for the empty graph, which has no roots.
    std::optional<double> M;
    std::vector<ClassifiedRoot> roots;
    RootCounts counts;
    std::optional<bool> well_covered;
    std::optional<bool> very_well_covered;

    friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Polynomial, verdicts, roots and their classification for one graph.
/// Errors from the engine or root finder propagate prefixed with graph_id.
AnalysisReport analyze_graph(const Graph& g, const std::string& graph_id, const AnalysisConfig& config,
                             IndependencePolynomialEngine& engine);
AnalysisReport analyze_graph(const Graph& g, const std::string& graph_id = "0",
                             const AnalysisConfig& config = {});

RootCounts count_roots(const std::vector<ClassifiedRoot>& roots);

void to_json(nlohmann::json& j, const ComplexRoot& r);
void from_json(const nlohmann::json& j, ComplexRoot& r);
void to_json(nlohmann::json& j, const RootClassification& c);
void from_json(const nlohmann::json& j, RootClassification& c);
void to_json(nlohmann::json& j, const SequenceVerdict& v);
void from_json(const nlohmann::json& j, SequenceVerdict& v);
void to_json(nlohmann::json& j, const RootCounts& c);
void from_json(const nlohmann::json& j, RootCounts& c);
void to_json(nlohmann::json& j, const AnalysisReport& r);
void from_json(const nlohmann::json& j, AnalysisReport& r);

inline constexpr const char* kRootsCsvHeader =
    "graph_id,re,im,multiplicity,in_sector,outside_region,right_half_plane,boundary_flag";

/// CSV rows (no header) for the report's roots, full double precision.
std::string roots_csv_rows(const AnalysisReport& report);

}  // namespace indpoly
