#include <doctest.h>

#include <random>

#include "indpoly/engine.hpp"
#include "indpoly/geometry.hpp"
#include "indpoly/roots.hpp"
#include "indpoly/sequence.hpp"
#include "support.hpp"

using namespace indpoly;

namespace {

std::vector<BigInt> seq(std::initializer_list<long long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("unimodality") {
    auto witness = check_unimodal(seq({1, 33, 24, 32, 16}));
    CHECK_FALSE(witness.unimodal);
    REQUIRE(witness.violation.has_value());
    CHECK(*witness.violation == 3);
    CHECK(witness.mode_first == 1);

    auto p4 = check_unimodal(seq({1, 4, 3}));
    CHECK(p4.unimodal);
    CHECK(p4.mode_first == 1);
    CHECK(p4.mode_last == 1);

    CHECK(check_unimodal(seq({1})).unimodal);
    auto plateau = check_unimodal(seq({1, 5, 5, 2, 2}));
    CHECK(plateau.unimodal);
    CHECK(plateau.mode_first == 1);
    CHECK(plateau.mode_last == 2);
    CHECK_THROWS_AS(check_unimodal(std::vector<BigInt>{}), std::invalid_argument);
}

TEST_CASE("log-concavity") {
    CHECK(check_log_concave(seq({1, 8, 21, 22, 8}), true).holds);
    auto bad = check_log_concave(seq({1, 33, 24, 32, 16}), false);
    CHECK_FALSE(bad.holds);
    CHECK(*bad.violation == 2);

    CHECK(check_log_concave(seq({1, 2, 4}), false).holds);
    auto strict = check_log_concave(seq({1, 2, 4}), true);
    CHECK_FALSE(strict.holds);
    CHECK(*strict.violation == 1);

    CHECK_THROWS_AS(check_log_concave(seq({1, 0, 1}), false), std::invalid_argument);
    CHECK_THROWS_AS(check_log_concave(seq({1, -2, 1}), true), std::invalid_argument);
}

TEST_CASE("Newton's inequality") {
    CHECK(check_newton(seq({1, 3, 3, 1})).holds);
    CHECK(check_newton(seq({1, 4, 3})).holds);
    CHECK_FALSE(check_newton(seq({1, 33, 24, 32, 16})).holds);
    // 1 + 2x + 2x^2 has complex roots; 1*1*4 < 2*2*2.
    CHECK_FALSE(check_newton(seq({1, 2, 2})).holds);
    CHECK(check_newton(seq({1, 7})).holds);
}

TEST_CASE("verdict implications on random positive sequences") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> len(1, 9), val(1, 60);
    for (int rep = 0; rep < 100000; ++rep) {
        std::vector<BigInt> s(static_cast<std::size_t>(len(rng)));
        for (auto& x : s) x = val(rng);
        auto v = diagnose(s);
        if (v.newton_satisfied) CHECK(v.log_concave);
        if (v.strictly_log_concave) CHECK(v.log_concave);
        if (v.log_concave) CHECK(v.unimodal);
    }
}

TEST_CASE("all roots strictly in the sector implies strict log-concavity on the shipped corpora") {
    IndependencePolynomialEngine engine;
    int covered = 0;
    for (const char* name : {"graphs_le6.g6", "connected7.g6", "connected8.g6"}) {
        for (const auto& g : indpoly::testing::load_corpus(name)) {
            auto p = engine.compute(g);
            if (p.degree() < 1) continue;
            bool all_in = true;
            for (const auto& r : find_roots(p)) {
                auto s = in_sector(r.value());
                all_in = all_in && s.in_sector && !s.boundary;
            }
            if (!all_in) continue;
            ++covered;
            CHECK(check_log_concave(p.coefficients(), true).holds);
        }
    }
    CHECK(covered > 11000);
}
