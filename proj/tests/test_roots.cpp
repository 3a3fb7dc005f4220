#include <doctest.h>

#include <cmath>
#include <random>

#include "indpoly/engine.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/roots.hpp"
#include "support.hpp"

using namespace indpoly;

namespace {

double max_residual(const IntPolynomial& p, const std::vector<ComplexRoot>& roots) {
    double worst = 0.0;
    for (const auto& r : roots) worst = std::max(worst, relative_residual(p, r.value()));
    return worst;
}

}  // namespace

TEST_CASE("linear and quadratic roots") {
    auto r = find_roots(IntPolynomial{1, 2});
    REQUIRE(r.size() == 1);
    CHECK(r[0].re == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(r[0].im == 0.0);

    auto p4 = find_roots(IntPolynomial{1, 4, 3});
    REQUIRE(p4.size() == 2);
    CHECK(p4[0].re == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(p4[1].re == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));

    auto c5 = find_roots(IntPolynomial{1, 5, 5});
    REQUIRE(c5.size() == 2);
    CHECK(c5[0].re == doctest::Approx((-5.0 - std::sqrt(5.0)) / 10.0).epsilon(1e-14));
    CHECK(c5[1].re == doctest::Approx((-5.0 + std::sqrt(5.0)) / 10.0).epsilon(1e-14));
}

TEST_CASE("complex roots come in exact conjugate pairs") {
    // 1 + x + x^2: primitive cube roots of unity.
    auto r = find_roots(IntPolynomial{1, 1, 1});
    REQUIRE(r.size() == 2);
    CHECK(r[0].re == r[1].re);
    CHECK(r[0].im == -r[1].im);
    CHECK(r[0].re == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(std::abs(r[1].im) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("repeated roots are reported with their multiplicity") {
    auto r = find_roots(pow(IntPolynomial{1, 1}, 10) * IntPolynomial{1, 3});
    REQUIRE(r.size() == 2);
    CHECK(total_multiplicity(r) == 11);
    CHECK(r[0].re == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(r[0].multiplicity == 10);
    CHECK(r[1].multiplicity == 1);

    auto z = find_roots(IntPolynomial{0, 0, 1, 1});
    CHECK(total_multiplicity(z) == 3);
    CHECK(z[0].re == -1.0);
    CHECK(z[1].re == 0.0);
    CHECK(z[1].multiplicity == 2);

    CHECK_THROWS_AS(find_roots(IntPolynomial{5}), std::invalid_argument);
}

TEST_CASE("residual bound on shipped independence polynomials") {
    IndependencePolynomialEngine engine;
    for (const char* name : {"graphs_le6.g6", "connected7.g6"}) {
        for (const auto& g : indpoly::testing::load_corpus(name)) {
            auto p = engine.compute(g);
            auto roots = find_roots(p);
            CHECK(total_multiplicity(roots) == p.degree());
            CHECK(max_residual(p, roots) <= 1e-10);
        }
    }
}

TEST_CASE("high-degree polynomials with huge coefficients") {
    // i(G^{3*}) for G = C5: degree 20, exponent-heavy factors.
    auto p = transfer_iterated(IntPolynomial{1, 5, 5}, 5, 3);
    auto roots = find_roots(p);
    CHECK(total_multiplicity(roots) == 20);
    CHECK(max_residual(p, roots) <= 1e-10);

    auto big = transfer_leafy(substitute_lexicographic(independence_polynomial(path(6)), 11), 66);
    auto big_roots = find_roots(big);
    CHECK(total_multiplicity(big_roots) == 66);
    CHECK(max_residual(big, big_roots) <= 1e-10);
}

TEST_CASE("non-convergence raises NumericError with the best iterate") {
    RootFinderConfig cfg;
    cfg.max_sweeps = 1;
    const IntPolynomial hard = independence_polynomial(lexicographic_edgeless(cycle(7), 3));
    try {
        find_roots(hard, cfg);
        FAIL("expected NumericError");
    } catch (const NumericError& e) {
        CHECK(e.best_iterate().size() >= 3);
        CHECK(e.residual() > cfg.residual_tol);
    }
}

TEST_CASE("roots_match compares multisets") {
    std::vector<ComplexRoot> a{{-1.0, 0.0, 2}, {-0.5, 0.1, 1}};
    std::vector<ComplexRoot> b{{-0.5, 0.1, 1}, {-1.0, 0.0, 1}, {-1.0 + 1e-9, 0.0, 1}};
    CHECK(roots_match(a, b, 1e-6));
    std::vector<ComplexRoot> c{{-0.5, 0.1, 1}, {-1.0, 0.0, 1}, {-0.9, 0.0, 1}};
    CHECK_FALSE(roots_match(a, c, 1e-6));
    CHECK_FALSE(roots_match(a, std::vector<ComplexRoot>{{-1.0, 0.0, 2}}, 1e-6));
}
