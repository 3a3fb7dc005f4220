#pragma once

#include <string>
#include <vector>

#include "indpoly/analysis.hpp"

namespace indpoly {

struct PlotConfig {
    int width = 800;
    int height = 600;
    /// Fractional padding around the data bounds.
    double margin = 0.08;
    double point_radius = 2.0;
    std::string title = "Independence roots";
};

/// SVG scatter of every distinct root in `reports` with the sector rays
/// (arg = ±2π/3) and the two circles |z - (1/2 ± (√3/6)i)| = √3/3 overlaid.
/// In-sector roots are drawn blue, outside red, boundary-flagged orange.
/// Output is byte-identical for identical input. Throws std::invalid_argument
/// when there are no roots.
std::string render_svg(const std::vector<AnalysisReport>& reports, const PlotConfig& config = {});

/// render_svg written to `path`; throws std::runtime_error if unwritable.
void emit_plot(const std::vector<AnalysisReport>& reports, const std::string& path,
               const PlotConfig& config = {});

}  // namespace indpoly
