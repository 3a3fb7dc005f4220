#pragma once

#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "indpoly/roots.hpp"

namespace indpoly {

inline constexpr double kDefaultTolerance = 1e-9;

namespace region {
/// Circles bounding the set mapped outside the sector by z -> z / (1 + z).
inline constexpr double kRadius = std::numbers::sqrt3 / 3.0;
inline constexpr double kCentreRe = 0.5;
inline constexpr double kCentreIm = std::numbers::sqrt3 / 6.0;
}  // namespace region

struct SectorTest {
    bool in_sector = false;
    bool boundary = false;
};

/// Sector {2π/3 < |arg z| < 4π/3}, tested as Re z < 0 and |Im z| < √3 |Re z|.
/// `boundary` is set when ||Im z| - √3|Re z|| <= tol |z| or |Re z| <= tol |z|.
/// Throws std::invalid_argument at the origin.
SectorTest in_sector(std::complex<double> z, double tol = kDefaultTolerance);

struct RegionTest {
    bool outside = false;
    bool boundary = false;
};

/// Strictly outside both circles of radius √3/3 centred at 1/2 ± (√3/6)i.
RegionTest outside_region(std::complex<double> z, double tol = kDefaultTolerance);

/// Re z > 0. The imaginary axis counts as not right.
inline bool right_half_plane(std::complex<double> z) { return z.real() > 0.0; }

struct RootClassification {
    bool in_sector = false;
    bool outside_region = false;
    bool right_half_plane = false;
    bool sector_boundary = false;
    bool region_boundary = false;
    /// |Re z| <= tol |z|
    bool axis_boundary = false;

    bool boundary_flag() const { return sector_boundary || region_boundary || axis_boundary; }
    /// Outside the sector and not within tolerance of its boundary.
    bool strictly_outside_sector() const { return !in_sector && !sector_boundary; }
    bool strictly_in_sector() const { return in_sector && !sector_boundary; }
    friend bool operator==(const RootClassification&, const RootClassification&) = default;
};

RootClassification classify(std::complex<double> z, double tol = kDefaultTolerance);

/// max over roots of ((1/√3)|Im z| + |Re z|) / |z|^2.
double compute_M(std::span<const ComplexRoot> roots);

/// r / (1 - k r) via ((a - k a^2 - k b^2) + i b) / ((1 - k a)^2 + k^2 b^2).
/// Throws PoleError when r is within tolerance of 1/k.
std::complex<double> map_root_leafy(std::complex<double> r, int k, double tol = kDefaultTolerance);

/// Roots of i(G^{k*}) from the roots of i(G): each base root r maps to
/// r / (1 - k r); -1/k gets multiplicity n - alpha; -1/l gets n 2^(k-l-1)
/// for l = 1..k-1. Total multiplicity is n 2^(k-1).
std::vector<ComplexRoot> assemble_iterated_roots(std::span<const ComplexRoot> base_roots, int n, int alpha,
                                                 int k);

/// f(z) = z / (1 + z). Throws PoleError near z = -1.
std::complex<double> mobius_map(std::complex<double> z, double tol = kDefaultTolerance);

}  // namespace indpoly
