#include "indpoly/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <stdexcept>

namespace indpoly {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    // "-0.000" and "0.000" must print the same for byte-stable output.
    if (std::string(buf) == "-0.000") return "0.000";
    return buf;
}

struct Viewport {
    double xmin, xmax, ymin, ymax;
    double width, height;

    double sx(double x) const { return (x - xmin) / (xmax - xmin) * width; }
    double sy(double y) const { return (ymax - y) / (ymax - ymin) * height; }
};

}  // namespace

std::string render_svg(const std::vector<AnalysisReport>& reports, const PlotConfig& config) {
    struct Point {
        double re, im;
        int kind;  // 0 in sector, 1 outside, 2 boundary
    };
    std::vector<Point> pts;
    for (const auto& r : reports)
        for (const auto& [root, cls] : r.roots) {
            const int kind = cls.sector_boundary ? 2 : cls.in_sector ? 0 : 1;
            pts.push_back({root.re, root.im, kind});
        }
    if (pts.empty()) throw std::invalid_argument("render_svg: no roots to plot");

    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        if (a.re != b.re) return a.re < b.re;
        if (a.im != b.im) return a.im < b.im;
        return a.kind < b.kind;
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point& a, const Point& b) {
                              return a.re == b.re && a.im == b.im && a.kind == b.kind;
                          }),
              pts.end());

    const double r = region::kRadius, cy = region::kCentreIm, cx = region::kCentreRe;
    double xmin = std::min(0.0, cx - r), xmax = cx + r;
    double ymin = -(cy + r), ymax = cy + r;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.re);
        xmax = std::max(xmax, p.re);
        ymin = std::min(ymin, p.im);
        ymax = std::max(ymax, p.im);
    }
    const double padx = (xmax - xmin) * config.margin, pady = (ymax - ymin) * config.margin;
    Viewport v{xmin - padx, xmax + padx, ymin - pady, ymax + pady, double(config.width), double(config.height)};

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(config.width) +
           "\" height=\"" + std::to_string(config.height) + "\" viewBox=\"0 0 " + std::to_string(config.width) +
           " " + std::to_string(config.height) + "\">\n";
    out += "<title>" + config.title + "</title>\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Axes.
    out += "<g stroke=\"#999\" stroke-width=\"0.5\">\n";
    out += "<line x1=\"0.000\" y1=\"" + fmt(v.sy(0)) + "\" x2=\"" + fmt(v.width) + "\" y2=\"" + fmt(v.sy(0)) + "\"/>\n";
    out += "<line x1=\"" + fmt(v.sx(0)) + "\" y1=\"0.000\" x2=\"" + fmt(v.sx(0)) + "\" y2=\"" + fmt(v.height) + "\"/>\n";
    out += "</g>\n";

    // Sector rays from the origin at ±2π/3, long enough to leave the frame.
    const double reach = 2.0 * std::max({v.xmax - v.xmin, v.ymax - v.ymin, 1.0});
    out += "<g stroke=\"#2a7\" stroke-width=\"1\" stroke-dasharray=\"6,3\">\n";
    for (double sign : {1.0, -1.0}) {
        const double ex = -0.5 * reach, ey = sign * std::numbers::sqrt3 / 2.0 * reach;
        out += "<line x1=\"" + fmt(v.sx(0)) + "\" y1=\"" + fmt(v.sy(0)) + "\" x2=\"" + fmt(v.sx(ex)) +
               "\" y2=\"" + fmt(v.sy(ey)) + "\"/>\n";
    }
    out += "</g>\n";

    // Circles bounding the region.
    out += "<g fill=\"none\" stroke=\"#a3c\" stroke-width=\"1\">\n";
    for (double sign : {1.0, -1.0}) {
        out += "<ellipse cx=\"" + fmt(v.sx(cx)) + "\" cy=\"" + fmt(v.sy(sign * cy)) + "\" rx=\"" +
               fmt(r / (v.xmax - v.xmin) * v.width) + "\" ry=\"" + fmt(r / (v.ymax - v.ymin) * v.height) + "\"/>\n";
    }
    out += "</g>\n";

    static constexpr const char* colours[] = {"#1f4fd1", "#d11f1f", "#f08c00"};
    out += "<g stroke=\"none\">\n";
    for (const auto& p : pts) {
        out += "<circle cx=\"" + fmt(v.sx(p.re)) + "\" cy=\"" + fmt(v.sy(p.im)) + "\" r=\"" +
               fmt(config.point_radius) + "\" fill=\"" + colours[p.kind] + "\"/>\n";
    }
    out += "</g>\n</svg>\n";
    return out;
}

void emit_plot(const std::vector<AnalysisReport>& reports, const std::string& path, const PlotConfig& config) {
    const std::string svg = render_svg(reports, config);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write plot to " + path);
    out << svg;
    if (!out) throw std::runtime_error("failed writing plot to " + path);
}

}  // namespace indpoly
