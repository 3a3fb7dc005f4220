#include "indpoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "indpoly/errors.hpp"

namespace indpoly {

namespace {

using cplx = std::complex<double>;

constexpr int kPolishMaxDegree = 400;

std::vector<double> scaled_coefficients(const IntPolynomial& p) {
    BigInt biggest = 0;
    for (const auto& c : p.coefficients()) biggest = std::max(biggest, BigInt(abs(c)));
    const long e = static_cast<long>(msb(biggest));
    std::vector<double> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(scaled_to_double(c, e));
    return out;
}

// Newton correction p(z)/p'(z). For |z| > 1 the reversed polynomial is used
// so that Horner never overflows.
cplx newton_ratio(std::span<const double> a, cplx z) {
    const int d = static_cast<int>(a.size()) - 1;
    if (std::abs(z) <= 1.0) {
        cplx p = a[d], dp = 0.0;
        for (int i = d - 1; i >= 0; --i) {
            dp = dp * z + p;
            p = p * z + a[i];
        }
        return p / dp;
    }
    const cplx w = 1.0 / z;
    cplx r = a[0], dr = 0.0;
    for (int i = 1; i <= d; ++i) {
        dr = dr * w + r;
        r = r * w + a[i];
    }
    return z / (static_cast<double>(d) - w * dr / r);
}

// |p(z)| and a rounding-error bound for it, both divided by max(1,|z|)^d.
std::pair<double, double> scaled_value(std::span<const double> a, cplx z) {
    const int d = static_cast<int>(a.size()) - 1;
    cplx acc = 0.0;
    double bound = 0.0;
    if (std::abs(z) <= 1.0) {
        const double az = std::abs(z);
        for (int i = d; i >= 0; --i) {
            acc = acc * z + a[i];
            bound = bound * az + std::abs(a[i]);
        }
    } else {
        const cplx w = 1.0 / z;
        const double aw = std::abs(w);
        for (int i = 0; i <= d; ++i) {
            acc = acc * w + a[i];
            bound = bound * aw + std::abs(a[i]);
        }
    }
    return {std::abs(acc), bound};
}

void pair_conjugates(std::vector<cplx>& z) {
    std::vector<std::size_t> order(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return z[a].imag() > z[b].imag(); });
    std::vector<bool> used(z.size(), false);
    for (std::size_t i : order) {
        if (used[i]) continue;
        const double thr = 1e-10 * std::max(1.0, std::abs(z[i]));
        if (z[i].imag() <= thr) continue;
        std::size_t best = i;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (j == i || used[j]) continue;
            const double dist = std::abs(z[j] - std::conj(z[i]));
            if (dist < best_d) best_d = dist, best = j;
        }
        if (best == i) continue;
        used[i] = used[best] = true;
        const double re = 0.5 * (z[i].real() + z[best].real());
        const double im = 0.5 * (std::abs(z[i].imag()) + std::abs(z[best].imag()));
        z[i] = {re, im};
        z[best] = {re, -im};
    }
    for (std::size_t i = 0; i < z.size(); ++i)
        if (!used[i]) z[i] = {z[i].real(), 0.0};
}

std::vector<cplx> aberth_attempt(std::span<const double> a, const RootFinderConfig& cfg, double phase,
                                 bool& converged) {
    const int d = static_cast<int>(a.size()) - 1;
    const double radius = std::pow(std::abs(a[0] / a[d]), 1.0 / d);
    std::vector<cplx> z(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j)
        z[j] = std::polar(radius, 2.0 * std::numbers::pi * j / d + phase);
    std::vector<bool> done(z.size(), false);
    constexpr double eps = std::numeric_limits<double>::epsilon();
    for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
        bool all = true;
        for (int i = 0; i < d; ++i) {
            if (done[i]) continue;
            auto [val, bound] = scaled_value(a, z[i]);
            if (val <= 4.0 * eps * bound) {
                done[i] = true;
                continue;
            }
            const cplx ratio = newton_ratio(a, z[i]);
            cplx s = 0.0;
            for (int j = 0; j < d; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            const cplx step = ratio / (1.0 - ratio * s);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
            z[i] -= step;
            if (std::abs(step) < cfg.step_tol * std::max(1.0, std::abs(z[i])))
                done[i] = true;
            else
                all = false;
        }
        if (all) break;
    }
    converged = std::all_of(done.begin(), done.end(), [](bool b) { return b; });
    return z;
}

using Real50 = boost::multiprecision::cpp_bin_float_50;
using Complex50 = boost::multiprecision::cpp_complex_50;

// Aberth sweeps in 50-digit arithmetic on the exact coefficients. Double
// precision cannot separate close root clusters of large-coefficient factors.
void polish(const IntPolynomial& p, std::vector<cplx>& z, int max_sweeps) {
    const int d = p.degree();
    std::vector<Real50> a;
    a.reserve(static_cast<std::size_t>(d) + 1);
    for (const auto& c : p.coefficients()) a.emplace_back(c);
    std::vector<Complex50> w(z.begin(), z.end());
    const Real50 tol = Real50(1e-30);
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        Real50 worst = 0;
        for (int i = 0; i < d; ++i) {
            Complex50 v = a[d], dv = 0;
            for (int k = d - 1; k >= 0; --k) {
                dv = dv * w[i] + v;
                v = v * w[i] + a[k];
            }
            if (v == Complex50(0)) continue;
            const Complex50 ratio = v / dv;
            Complex50 s = 0;
            for (int j = 0; j < d; ++j)
                if (j != i) s += Complex50(1) / (w[i] - w[j]);
            const Complex50 step = ratio / (Complex50(1) - ratio * s);
            w[i] -= step;
            const Real50 size = boost::multiprecision::abs(w[i]);
            worst = std::max(worst, Real50(boost::multiprecision::abs(step) / std::max(Real50(1), size)));
        }
        if (worst < tol) break;
    }
    for (std::size_t i = 0; i < z.size(); ++i)
        z[i] = {static_cast<double>(w[i].real()), static_cast<double>(w[i].imag())};
}

double max_scaled_residual(std::span<const double> a, std::span<const cplx> z) {
    double norm = 0.0;
    for (double c : a) norm = std::max(norm, std::abs(c));
    double worst = 0.0;
    for (cplx r : z) worst = std::max(worst, scaled_value(a, r).first / norm);
    return worst;
}

}  // namespace

std::vector<std::complex<double>> aberth_roots(std::span<const double> coeffs, const RootFinderConfig& config) {
    if (coeffs.size() < 2) throw std::invalid_argument("aberth_roots requires degree >= 1");
    if (coeffs.back() == 0.0 || coeffs.front() == 0.0)
        throw std::invalid_argument("aberth_roots requires nonzero leading and constant terms");
    if (coeffs.size() == 2) return {cplx(-coeffs[0] / coeffs[1], 0.0)};

    std::vector<cplx> best;
    double best_res = std::numeric_limits<double>::infinity();
    for (double phase : {0.4, 1.1, 2.3}) {
        bool converged = false;
        auto z = aberth_attempt(coeffs, config, phase, converged);
        pair_conjugates(z);
        const double res = max_scaled_residual(coeffs, z);
        if (converged && res <= config.residual_tol) return z;
        if (res < best_res) best_res = res, best = z;
    }
    if (best_res <= config.residual_tol) return best;
    throw NumericError("Aberth iteration did not converge", best, best_res);
}

std::vector<ComplexRoot> find_roots(const IntPolynomial& p, const RootFinderConfig& config) {
    if (p.degree() < 1) throw std::invalid_argument("find_roots requires degree >= 1");
    std::vector<ComplexRoot> out;
    // Zero roots are split off exactly.
    int zeros = 0;
    while (p.coeff(zeros) == 0) ++zeros;
    std::vector<BigInt> rest(p.coefficients().begin() + zeros, p.coefficients().end());
    if (zeros > 0) out.push_back({0.0, 0.0, zeros});

    IntPolynomial q{std::move(rest)};
    if (q.degree() >= 1) {
        const auto factors = square_free_decomposition(q);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].degree() < 1) continue;
            const auto a = scaled_coefficients(factors[i]);
            auto zs = aberth_roots(a, config);
            if (factors[i].degree() >= 2 && factors[i].degree() <= kPolishMaxDegree) {
                polish(factors[i], zs, 60);
                pair_conjugates(zs);
            }
            for (cplx z : zs)
                out.push_back({z.real(), z.imag(), static_cast<int>(i) + 1});
        }
    }
    if (total_multiplicity(out) != p.degree())
        throw std::logic_error("root multiplicities do not sum to the degree");

    double worst = 0.0;
    for (const auto& r : out) worst = std::max(worst, relative_residual(p, r.value()));
    if (worst > config.residual_tol) {
        throw NumericError("root residual " + std::to_string(worst) + " exceeds tolerance", expand(out),
                           worst);
    }
    std::sort(out.begin(), out.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
        return a.re != b.re ? a.re < b.re : a.im < b.im;
    });
    return out;
}

double relative_residual(const IntPolynomial& p, std::complex<double> z) {
    if (p.is_zero()) return 0.0;
    const auto a = scaled_coefficients(p);
    double norm = 0.0;
    for (double c : a) norm = std::max(norm, std::abs(c));
    return scaled_value(a, z).first / norm;
}

std::vector<std::complex<double>> expand(std::span<const ComplexRoot> roots) {
    std::vector<cplx> out;
    for (const auto& r : roots)
        for (int m = 0; m < r.multiplicity; ++m) out.push_back(r.value());
    return out;
}

int total_multiplicity(std::span<const ComplexRoot> roots) {
    int total = 0;
    for (const auto& r : roots) total += r.multiplicity;
    return total;
}

bool roots_match(std::span<const ComplexRoot> a, std::span<const ComplexRoot> b, double rel_tol) {
    auto x = expand(a), y = expand(b);
    if (x.size() != y.size()) return false;
    std::vector<bool> used(y.size(), false);
    for (cplx z : x) {
        std::size_t best = y.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (used[j]) continue;
            const double dist = std::abs(z - y[j]);
            if (dist < best_d) best_d = dist, best = j;
        }
        if (best == y.size() || best_d > rel_tol * std::max(std::abs(z), std::abs(y[best]))) return false;
        used[best] = true;
    }
    return true;
}

}  // namespace indpoly
