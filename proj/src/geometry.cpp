#include "indpoly/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "indpoly/errors.hpp"

namespace indpoly {

SectorTest in_sector(std::complex<double> z, double tol) {
    const double mag = std::abs(z);
    if (mag == 0.0) throw std::invalid_argument("sector test is undefined at the origin");
    const double re = z.real(), im = std::abs(z.imag());
    SectorTest t;
    t.in_sector = re < 0.0 && im < std::numbers::sqrt3 * -re;
    t.boundary = std::abs(im - std::numbers::sqrt3 * std::abs(re)) <= tol * mag || std::abs(re) <= tol * mag;
    return t;
}

RegionTest outside_region(std::complex<double> z, double tol) {
    const std::complex<double> upper(region::kCentreRe, region::kCentreIm);
    const std::complex<double> lower(region::kCentreRe, -region::kCentreIm);
    const double d1 = std::abs(z - upper), d2 = std::abs(z - lower);
    const double slack = tol * std::max(1.0, std::abs(z));
    RegionTest t;
    t.outside = d1 > region::kRadius && d2 > region::kRadius;
    t.boundary = std::abs(d1 - region::kRadius) <= slack || std::abs(d2 - region::kRadius) <= slack;
    return t;
}

RootClassification classify(std::complex<double> z, double tol) {
    const auto s = in_sector(z, tol);
    const auto r = outside_region(z, tol);
    RootClassification c;
    c.in_sector = s.in_sector;
    c.sector_boundary = s.boundary;
    c.outside_region = r.outside;
    c.region_boundary = r.boundary;
    c.right_half_plane = right_half_plane(z);
    c.axis_boundary = std::abs(z.real()) <= tol * std::abs(z);
    return c;
}

double compute_M(std::span<const ComplexRoot> roots) {
    if (roots.empty()) throw std::invalid_argument("compute_M requires at least one root");
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& r : roots) {
        const double norm2 = r.re * r.re + r.im * r.im;
        if (norm2 == 0.0) throw std::invalid_argument("compute_M: root at the origin");
        best = std::max(best, (std::abs(r.im) / std::numbers::sqrt3 + std::abs(r.re)) / norm2);
    }
    return best;
}

std::complex<double> map_root_leafy(std::complex<double> r, int k, double tol) {
    if (k < 1) throw std::invalid_argument("map_root_leafy requires k >= 1");
    const double a = r.real(), b = r.imag();
    const double denom = (1.0 - k * a) * (1.0 - k * a) + double(k) * k * b * b;
    if (std::sqrt(denom) <= tol * std::max(1.0, k * std::abs(r)))
        throw PoleError("map_root_leafy: root is at the pole 1/" + std::to_string(k));
    return {(a - k * a * a - k * b * b) / denom, b / denom};
}

std::vector<ComplexRoot> assemble_iterated_roots(std::span<const ComplexRoot> base_roots, int n, int alpha,
                                                 int k) {
    if (k < 1) throw std::invalid_argument("assemble_iterated_roots requires k >= 1");
    if (alpha > n || alpha < 0) throw std::invalid_argument("assemble_iterated_roots requires 0 <= alpha <= n");
    if (total_multiplicity(base_roots) != alpha)
        throw std::invalid_argument("base root multiplicities do not sum to alpha");
    std::vector<ComplexRoot> out;
    for (const auto& r : base_roots) {
        const auto z = map_root_leafy(r.value(), k);
        out.push_back({z.real(), z.imag(), r.multiplicity});
    }
    if (n > alpha) out.push_back({-1.0 / k, 0.0, n - alpha});
    for (int l = 1; l <= k - 1; ++l) out.push_back({-1.0 / l, 0.0, n << (k - l - 1)});

    if (static_cast<std::size_t>(total_multiplicity(out)) != (static_cast<std::size_t>(n) << (k - 1)))
        throw std::logic_error("assembled root multiplicities do not total n 2^(k-1)");
    return out;
}

std::complex<double> mobius_map(std::complex<double> z, double tol) {
    const auto denom = 1.0 + z;
    if (std::abs(denom) <= tol * std::max(1.0, std::abs(z)))
        throw PoleError("mobius_map: pole at z = -1");
    return z / denom;
}

}  // namespace indpoly
