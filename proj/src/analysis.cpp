#include "indpoly/analysis.hpp"

#include <cstdio>
#include <stdexcept>

#include "indpoly/errors.hpp"

namespace indpoly {

RootCounts count_roots(const std::vector<ClassifiedRoot>& roots) {
    RootCounts c;
    for (const auto& [root, cls] : roots) {
        const int m = root.multiplicity;
        c.total += m;
        if (cls.strictly_outside_sector()) c.outside_sector += m;
        if (cls.sector_boundary) c.sector_boundary += m;
        if (!cls.outside_region && !cls.region_boundary) c.inside_region += m;
        if (cls.region_boundary) c.region_boundary += m;
        if (cls.right_half_plane && !cls.axis_boundary) c.right_half_plane += m;
        if (cls.axis_boundary) c.imaginary_axis += m;
    }
    return c;
}

AnalysisReport analyze_graph(const Graph& g, const std::string& graph_id, const AnalysisConfig& config,
                             IndependencePolynomialEngine& engine) {
    if (g.order() > config.max_order)
        throw RefusalError("graph " + graph_id + ": order " + std::to_string(g.order()) + " exceeds cap " +
                           std::to_string(config.max_order));
    try {
        AnalysisReport r;
        r.graph_id = graph_id;
        r.order = g.order();
        r.polynomial = engine.compute(g);
        r.independence_number = r.polynomial.degree();
        r.verdict = diagnose(r.polynomial);
        if (r.independence_number >= 1) {
            const auto roots = find_roots(r.polynomial, config.roots);
            r.M = compute_M(roots);
            for (const auto& z : roots) r.roots.push_back({z, classify(z.value(), config.tol)});
        }
        r.counts = count_roots(r.roots);
        if (g.order() <= config.mis_vertex_cap) {
            r.well_covered = is_well_covered(g, config.mis_vertex_cap);
            r.very_well_covered = is_very_well_covered(g, config.mis_vertex_cap);
        }
        return r;
    } catch (const NumericError& e) {
        throw NumericError("graph " + graph_id + ": " + e.what(), e.best_iterate(), e.residual());
    } catch (const RefusalError& e) {
        throw RefusalError("graph " + graph_id + ": " + e.what());
    }
}

AnalysisReport analyze_graph(const Graph& g, const std::string& graph_id, const AnalysisConfig& config) {
    IndependencePolynomialEngine engine(config.memo_capacity);
    return analyze_graph(g, graph_id, config, engine);
}

void to_json(nlohmann::json& j, const ComplexRoot& r) {
    j = {{"re", r.re}, {"im", r.im}, {"multiplicity", r.multiplicity}};
}

void from_json(const nlohmann::json& j, ComplexRoot& r) {
    j.at("re").get_to(r.re);
    j.at("im").get_to(r.im);
    j.at("multiplicity").get_to(r.multiplicity);
}

void to_json(nlohmann::json& j, const RootClassification& c) {
    j = {{"in_sector", c.in_sector},
         {"outside_region", c.outside_region},
         {"right_half_plane", c.right_half_plane},
         {"sector_boundary", c.sector_boundary},
         {"region_boundary", c.region_boundary},
         {"axis_boundary", c.axis_boundary},
         {"boundary_flag", c.boundary_flag()}};
}

void from_json(const nlohmann::json& j, RootClassification& c) {
    j.at("in_sector").get_to(c.in_sector);
    j.at("outside_region").get_to(c.outside_region);
    j.at("right_half_plane").get_to(c.right_half_plane);
    j.at("sector_boundary").get_to(c.sector_boundary);
    j.at("region_boundary").get_to(c.region_boundary);
    j.at("axis_boundary").get_to(c.axis_boundary);
}

namespace {

nlohmann::json optional_index(const std::optional<std::size_t>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

std::optional<std::size_t> read_index(const nlohmann::json& j) {
    if (j.is_null()) return std::nullopt;
    return j.get<std::size_t>();
}

}  // namespace

void to_json(nlohmann::json& j, const SequenceVerdict& v) {
    j = {{"unimodal", v.unimodal},
         {"mode", {v.mode_first, v.mode_last}},
         {"unimodal_violation", optional_index(v.unimodal_violation)},
         {"log_concave", v.log_concave},
         {"log_concave_violation", optional_index(v.log_concave_violation)},
         {"strictly_log_concave", v.strictly_log_concave},
         {"strict_violation", optional_index(v.strict_violation)},
         {"newton_satisfied", v.newton_satisfied},
         {"newton_violation", optional_index(v.newton_violation)}};
}

void from_json(const nlohmann::json& j, SequenceVerdict& v) {
    j.at("unimodal").get_to(v.unimodal);
    v.mode_first = j.at("mode").at(0).get<std::size_t>();
    v.mode_last = j.at("mode").at(1).get<std::size_t>();
    v.unimodal_violation = read_index(j.at("unimodal_violation"));
    j.at("log_concave").get_to(v.log_concave);
    v.log_concave_violation = read_index(j.at("log_concave_violation"));
    j.at("strictly_log_concave").get_to(v.strictly_log_concave);
    v.strict_violation = read_index(j.at("strict_violation"));
    j.at("newton_satisfied").get_to(v.newton_satisfied);
    v.newton_violation = read_index(j.at("newton_violation"));
}

void to_json(nlohmann::json& j, const RootCounts& c) {
    j = {{"total", c.total},
         {"outside_sector", c.outside_sector},
         {"sector_boundary", c.sector_boundary},
         {"inside_region", c.inside_region},
         {"region_boundary", c.region_boundary},
         {"right_half_plane", c.right_half_plane},
         {"imaginary_axis", c.imaginary_axis}};
}

void from_json(const nlohmann::json& j, RootCounts& c) {
    j.at("total").get_to(c.total);
    j.at("outside_sector").get_to(c.outside_sector);
    j.at("sector_boundary").get_to(c.sector_boundary);
    j.at("inside_region").get_to(c.inside_region);
    j.at("region_boundary").get_to(c.region_boundary);
    j.at("right_half_plane").get_to(c.right_half_plane);
    j.at("imaginary_axis").get_to(c.imaginary_axis);
}

void to_json(nlohmann::json& j, const AnalysisReport& r) {
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& [root, cls] : r.roots) {
        nlohmann::json e = root;
        e["classification"] = cls;
        roots.push_back(std::move(e));
    }
    j = {{"graph_id", r.graph_id},
         {"order", r.order},
         {"independence_number", r.independence_number},
         {"coefficients", r.polynomial},
         {"sequence_verdict", r.verdict},
         {"M", r.M ? nlohmann::json(*r.M) : nlohmann::json(nullptr)},
         {"roots", std::move(roots)},
         {"counts", r.counts},
         {"well_covered", r.well_covered ? nlohmann::json(*r.well_covered) : nlohmann::json(nullptr)},
         {"very_well_covered",
          r.very_well_covered ? nlohmann::json(*r.very_well_covered) : nlohmann::json(nullptr)}};
}

void from_json(const nlohmann::json& j, AnalysisReport& r) {
    j.at("graph_id").get_to(r.graph_id);
    j.at("order").get_to(r.order);
    j.at("independence_number").get_to(r.independence_number);
    j.at("coefficients").get_to(r.polynomial);
    j.at("sequence_verdict").get_to(r.verdict);
    r.M = j.at("M").is_null() ? std::nullopt : std::optional<double>(j.at("M").get<double>());
    r.roots.clear();
    for (const auto& e : j.at("roots"))
        r.roots.push_back({e.get<ComplexRoot>(), e.at("classification").get<RootClassification>()});
    j.at("counts").get_to(r.counts);
    const auto& wc = j.at("well_covered");
    r.well_covered = wc.is_null() ? std::nullopt : std::optional<bool>(wc.get<bool>());
    const auto& vwc = j.at("very_well_covered");
    r.very_well_covered = vwc.is_null() ? std::nullopt : std::optional<bool>(vwc.get<bool>());
}

std::string roots_csv_rows(const AnalysisReport& report) {
    std::string out;
    char buf[256];
    for (const auto& [root, cls] : report.roots) {
        std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%d,%d,%d,%d,%d\n", root.re, root.im, root.multiplicity,
                      cls.in_sector ? 1 : 0, cls.outside_region ? 1 : 0, cls.right_half_plane ? 1 : 0,
                      cls.boundary_flag() ? 1 : 0);
        out += report.graph_id;
        out += buf;
    }
    return out;
}

}  // namespace indpoly
