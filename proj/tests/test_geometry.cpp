#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "indpoly/engine.hpp"
#include "indpoly/errors.hpp"
#include "indpoly/geometry.hpp"
#include "support.hpp"

using namespace indpoly;
using cplx = std::complex<double>;
constexpr double sqrt3 = std::numbers::sqrt3;

TEST_CASE("sector membership") {
    CHECK(in_sector({-1.0, 0.0}).in_sector);
    CHECK_FALSE(in_sector({-1.0, 0.0}).boundary);
    CHECK_FALSE(in_sector({1.0, 0.0}).in_sector);

    auto edge = in_sector({-1.0, sqrt3});
    CHECK_FALSE(edge.in_sector);
    CHECK(edge.boundary);
    CHECK(in_sector({-1.0, -sqrt3}).boundary);
    CHECK(in_sector({0.0, 1.0}).boundary);
    CHECK_THROWS_AS(in_sector({0.0, 0.0}), std::invalid_argument);

    CHECK(in_sector({-1.0, 1.7}).in_sector);
    CHECK_FALSE(in_sector({-1.0, 1.8}).in_sector);
}

TEST_CASE("M threshold") {
    CHECK(compute_M(std::vector<ComplexRoot>{{-1.0, 0.0, 1}}) == doctest::Approx(1.0));
    CHECK(compute_M(find_roots(IntPolynomial{1, 4, 3})) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(compute_M(find_roots(IntPolynomial{1, 5, 5})) ==
          doctest::Approx(10.0 / (5.0 - std::sqrt(5.0))).epsilon(1e-12));
    CHECK_THROWS_AS(compute_M(std::vector<ComplexRoot>{}), std::invalid_argument);
    CHECK_THROWS_AS(compute_M(std::vector<ComplexRoot>{{0.0, 0.0, 1}}), std::invalid_argument);

    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> neg(-10.0, -0.01);
    for (int rep = 0; rep < 100; ++rep) {
        const double r = neg(rng);
        std::vector<ComplexRoot> roots{{r, 0.0, 1}, {neg(rng), neg(rng), 1}};
        CHECK(compute_M(roots) >= 1.0 / std::abs(r) - 1e-12);
    }
}

TEST_CASE("leafy root map") {
    auto z = map_root_leafy({-1.0, 0.0}, 1);
    CHECK(z.real() == doctest::Approx(-0.5));
    CHECK(z.imag() == 0.0);
    auto w = map_root_leafy({0.0, 1.0}, 1);
    CHECK(w.real() == doctest::Approx(-0.5));
    CHECK(w.imag() == doctest::Approx(0.5));
    CHECK_THROWS_AS(map_root_leafy({0.5, 0.0}, 2), PoleError);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int rep = 0; rep < 1000; ++rep) {
        cplx r(u(rng), u(rng));
        const int k = 1 + rep % 7;
        auto m = map_root_leafy(r, k);
        auto direct = r / (1.0 - double(k) * r);
        CHECK(std::abs(m - direct) <= 1e-12 * std::max(1.0, std::abs(direct)));
        if (r.imag() != 0.0) CHECK(std::signbit(m.imag()) == std::signbit(r.imag()));
    }
}

TEST_CASE("k above the per-root threshold pushes the mapped root into the sector") {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    for (int rep = 0; rep < 10000; ++rep) {
        cplx r(u(rng), u(rng));
        if (std::abs(r) < 1e-3) continue;
        const double threshold = (std::abs(r.imag()) / sqrt3 + std::abs(r.real())) / std::norm(r);
        const int k = static_cast<int>(std::ceil(threshold)) + 1;
        CHECK(in_sector(map_root_leafy(r, k), 0.0).in_sector);
    }
}

TEST_CASE("assembled roots of iterated extensions") {
    auto k1 = assemble_iterated_roots(std::vector<ComplexRoot>{{-1.0, 0.0, 1}}, 1, 1, 1);
    REQUIRE(k1.size() == 1);
    CHECK(k1[0].re == doctest::Approx(-0.5));
    CHECK(total_multiplicity(k1) == 1);

    auto base = find_roots(IntPolynomial{1, 4, 3});
    auto assembled = assemble_iterated_roots(base, 4, 2, 2);
    CHECK(total_multiplicity(assembled) == 8);
    auto numeric = find_roots(transfer_iterated(IntPolynomial{1, 4, 3}, 4, 2));
    CHECK(roots_match(assembled, numeric, 1e-6));

    CHECK_THROWS_AS(assemble_iterated_roots(base, 4, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(assemble_iterated_roots(base, 4, 2, 0), std::invalid_argument);
}

TEST_CASE("assembled roots agree with numeric roots for random graphs") {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 60; ++rep) {
        Graph g = indpoly::testing::random_graph(1 + rep % 5, rng);
        auto p = independence_polynomial(g);
        auto base = find_roots(p);
        for (int k = 1; k <= 3; ++k) {
            auto assembled = assemble_iterated_roots(base, g.order(), p.degree(), k);
            auto numeric = find_roots(transfer_iterated(p, g.order(), k));
            CHECK(roots_match(assembled, numeric, 1e-6));
        }
    }
}

TEST_CASE("Mobius map") {
    auto a = mobius_map({-1.0, sqrt3});
    CHECK(a.real() == doctest::Approx(1.0));
    CHECK(a.imag() == doctest::Approx(sqrt3 / 3.0));
    CHECK(mobius_map({0.0, 0.0}) == cplx(0.0, 0.0));
    CHECK(mobius_map({0.5, 0.0}).real() == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(mobius_map({-1.0, 0.0}), PoleError);
}

TEST_CASE("region outside the two circles") {
    auto half = outside_region({0.5, 0.0});
    CHECK_FALSE(half.outside);
    CHECK_FALSE(half.boundary);
    auto minus_one = outside_region({-1.0, 0.0});
    CHECK(minus_one.outside);
    CHECK_FALSE(minus_one.boundary);
    CHECK(outside_region({0.0, 0.0}).boundary);
    CHECK(outside_region({1.0, 0.0}).boundary);
}

TEST_CASE("points outside both circles map into the sector under the inverse map") {
    // z / (1 - z) is the inverse of mobius_map and the k = 1 leafy root map.
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    int tested = 0;
    while (tested < 10000) {
        cplx z(u(rng), u(rng));
        auto t = outside_region(z, 1e-6);
        if (!t.outside || t.boundary || std::abs(z - 1.0) < 1e-6) continue;
        ++tested;
        CHECK(in_sector(map_root_leafy(z, 1), 0.0).in_sector);
    }
}

TEST_CASE("sector points map outside both circles") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    int tested = 0;
    while (tested < 10000) {
        cplx w(u(rng), u(rng));
        auto s = in_sector(w, 1e-6);
        if (!s.in_sector || s.boundary || std::abs(w + 1.0) < 1e-6) continue;
        ++tested;
        CHECK(outside_region(mobius_map(w), 0.0).outside);
    }
}

TEST_CASE("right half-plane") {
    CHECK_FALSE(right_half_plane({-1.0, 0.0}));
    CHECK(right_half_plane({1.0, 0.0}));
    CHECK_FALSE(right_half_plane({0.0, 1.0}));
    auto c = classify({0.0, 1.0});
    CHECK(c.axis_boundary);
    CHECK(c.boundary_flag());
}

TEST_CASE("classification invariant: in sector implies not right half-plane") {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int rep = 0; rep < 10000; ++rep) {
        auto c = classify({u(rng), u(rng)});
        if (c.in_sector) CHECK_FALSE(c.right_half_plane);
    }
}
