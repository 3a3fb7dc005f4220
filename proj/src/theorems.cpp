#include "indpoly/theorems.hpp"

#include <cmath>
#include <stdexcept>

#include "indpoly/errors.hpp"

namespace indpoly {

Theorem1Report check_theorem1(const Graph& g, const Theorem1Config& config) {
    if (g.order() == 0) throw std::invalid_argument("check_theorem1 requires a nonempty graph");
    Theorem1Report r;
    r.order = g.order();
    const IntPolynomial base = independence_polynomial(g);
    r.independence_number = base.degree();
    const auto base_roots = find_roots(base, config.roots);
    r.M = compute_M(base_roots);
    r.k = std::max(1, static_cast<int>(std::ceil(r.M))) + 1;
    if (r.k - 1 >= 62 || (static_cast<std::size_t>(r.order) << (r.k - 1)) > config.max_degree) {
        throw RefusalError("theorem 1 check refused: M = " + std::to_string(r.M) + " needs k = " +
                           std::to_string(r.k) + ", degree n 2^(k-1) = " + std::to_string(r.order) + " * 2^" +
                           std::to_string(r.k - 1) + " exceeds cap " + std::to_string(config.max_degree));
    }
    r.degree = iterated_degree(r.order, r.k);
    r.extension_polynomial = transfer_iterated(base, r.order, r.k);
    r.strictly_log_concave = check_log_concave(r.extension_polynomial.coefficients(), true).holds;
    r.assembled_roots = assemble_iterated_roots(base_roots, r.order, r.independence_number, r.k);
    for (const auto& z : r.assembled_roots) {
        const auto s = in_sector(z.value(), config.tol);
        (s.in_sector && !s.boundary ? r.roots_strictly_in_sector : r.roots_not_strictly_in_sector) +=
            z.multiplicity;
    }
    return r;
}

Theorem2Report check_theorem2(const IntPolynomial& base, int n, double tol, const RootFinderConfig& roots) {
    if (base.degree() < 1) throw std::invalid_argument("check_theorem2 requires a graph with at least one vertex");
    Theorem2Report r;
    r.order = n;
    r.base_polynomial = base;
    r.extension_polynomial = transfer_leafy(base, n);

    const auto base_roots = find_roots(base, roots);
    r.hypothesis = true;
    for (const auto& z : base_roots) {
        const auto c = classify(z.value(), tol);
        r.base_roots.push_back({z, c});
        if (c.region_boundary) r.hypothesis_boundary = true;
        if (!c.outside_region || c.region_boundary) r.hypothesis = false;
    }
    for (const auto& z : assemble_iterated_roots(base_roots, n, base.degree(), 1)) {
        const auto c = classify(z.value(), tol);
        r.extension_roots.push_back({z, c});
        if (c.strictly_outside_sector()) r.extension_roots_outside_sector += z.multiplicity;
        if (c.sector_boundary) r.extension_roots_on_sector_boundary += z.multiplicity;
    }
    const auto& coeffs = r.extension_polynomial.coefficients();
    r.extension_log_concave = check_log_concave(coeffs, false).holds;
    r.extension_strictly_log_concave = check_log_concave(coeffs, true).holds;
    return r;
}

Theorem2Report check_theorem2(const Graph& g, double tol, const RootFinderConfig& roots) {
    return check_theorem2(independence_polynomial(g), g.order(), tol, roots);
}

}  // namespace indpoly
