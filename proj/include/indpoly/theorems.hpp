#pragma once

#include <cstddef>
#include <vector>

#include "indpoly/analysis.hpp"

namespace indpoly {

struct Theorem1Config {
    double tol = kDefaultTolerance;
    /// Refuse when n 2^(k-1) exceeds this.
    std::size_t max_degree = std::size_t{1} << 14;
    RootFinderConfig roots;
};

/// Iterating the leafy extension k > M times: i(G^{k*}) built exactly through
/// transfer_iterated, its roots assembled from the roots of i(G).
struct Theorem1Report {
    int order = 0;
    int independence_number = 0;
    double M = 0.0;
    int k = 0;
    std::size_t degree = 0;
    IntPolynomial extension_polynomial;
    bool strictly_log_concave = false;
    std::vector<ComplexRoot> assembled_roots;
    /// Multiplicity-weighted counts over assembled_roots.
    int roots_strictly_in_sector = 0;
    int roots_not_strictly_in_sector = 0;

    bool all_roots_in_sector() const { return roots_not_strictly_in_sector == 0; }
    bool conclusion_holds() const { return strictly_log_concave && all_roots_in_sector(); }
};

/// k = max(1, ceil(M)) + 1. Throws RefusalError (message carries n 2^(k-1))
/// when the degree cap is exceeded; the empty graph is rejected.
Theorem1Report check_theorem1(const Graph& g, const Theorem1Config& config = {});

/// Root-location hypothesis on i(G) against log-concavity of i(G*).
struct Theorem2Report {
    int order = 0;
    IntPolynomial base_polynomial;
    IntPolynomial extension_polynomial;
    std::vector<ClassifiedRoot> base_roots;
    /// Roots of i(G*), assembled as r / (1 - r) plus -1 of multiplicity n - alpha.
    std::vector<ClassifiedRoot> extension_roots;
    /// Every root of i(G) strictly outside both circles.
    bool hypothesis = false;
    /// Some root of i(G) lies within tolerance of a circle.
    bool hypothesis_boundary = false;
    bool extension_log_concave = false;
    bool extension_strictly_log_concave = false;
    int extension_roots_outside_sector = 0;
    int extension_roots_on_sector_boundary = 0;

    bool implication_holds() const { return !hypothesis || extension_strictly_log_concave; }
};

Theorem2Report check_theorem2(const Graph& g, double tol = kDefaultTolerance, const RootFinderConfig& roots = {});

/// Same check starting from a known i(G) of an order-n graph; used for the
/// lexicographic products whose polynomial is obtained by substitution.
Theorem2Report check_theorem2(const IntPolynomial& base, int n, double tol = kDefaultTolerance,
                              const RootFinderConfig& roots = {});

}  // namespace indpoly
