#pragma once

#include <complex>
#include <span>
#include <vector>

#include "indpoly/polynomial.hpp"

namespace indpoly {

/// One root of a polynomial together with its multiplicity.
struct ComplexRoot {
    double re = 0.0;
    double im = 0.0;
    int multiplicity = 1;

    std::complex<double> value() const { return {re, im}; }
    friend bool operator==(const ComplexRoot&, const ComplexRoot&) = default;
};

struct RootFinderConfig {
    int max_sweeps = 1000;
    /// A root is converged once its Aberth step is below step_tol * max(1, |z|).
    double step_tol = 1e-14;
    /// Acceptance bound on |p(z)| / (||p||_inf * max(1, |z|)^deg).
    double residual_tol = 1e-10;
};

/// All complex roots of p, multiplicities summing to deg p.
///
/// p is first split exactly into square-free factors over Z, so repeated roots
/// are reported once with their true multiplicity instead of as a numerical
/// cluster. Each factor is solved by Aberth-Ehrlich iteration on its
/// coefficients scaled by the largest magnitude; conjugate pairs are
/// symmetrised. Output is sorted by (re, im).
///
/// Throws std::invalid_argument for degree < 1 and NumericError when the
/// iteration does not converge or the residual check fails.
std::vector<ComplexRoot> find_roots(const IntPolynomial& p, const RootFinderConfig& config = {});

/// Aberth-Ehrlich on a real polynomial given by double coefficients (lowest
/// degree first, nonzero leading and constant terms). One entry per root.
std::vector<std::complex<double>> aberth_roots(std::span<const double> coeffs,
                                               const RootFinderConfig& config = {});

/// |p(z)| / (||p||_inf * max(1, |z|)^deg), evaluated without overflow.
double relative_residual(const IntPolynomial& p, std::complex<double> z);

/// Repeats each root by its multiplicity.
std::vector<std::complex<double>> expand(std::span<const ComplexRoot> roots);

int total_multiplicity(std::span<const ComplexRoot> roots);

/// Multiset comparison: every root of `a` is paired with a distinct root of
/// `b` at distance <= rel_tol * max(|z|, |w|).
bool roots_match(std::span<const ComplexRoot> a, std::span<const ComplexRoot> b, double rel_tol);

}  // namespace indpoly
