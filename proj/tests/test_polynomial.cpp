#include <doctest.h>

#include <random>

#include <json.hpp>

#include "indpoly/polynomial.hpp"

using namespace indpoly;

TEST_CASE("construction trims and reports degree") {
    CHECK(IntPolynomial{}.degree() == -1);
    CHECK(IntPolynomial{0, 0}.is_zero());
    CHECK(IntPolynomial{1, 2, 0, 0}.degree() == 1);
    CHECK(IntPolynomial{1, 4, 3}.coeff(5) == 0);
    CHECK(IntPolynomial{1, 4, 3}.to_string() == "1 + 4x + 3x^2");
    CHECK(IntPolynomial{1, -1, 0, 2}.to_string() == "1 - x + 2x^3");
}

TEST_CASE("arithmetic") {
    IntPolynomial one_plus_x{1, 1};
    CHECK(one_plus_x * one_plus_x == IntPolynomial{1, 2, 1});
    CHECK(pow(one_plus_x, 4) == IntPolynomial{1, 4, 6, 4, 1});
    CHECK(pow(one_plus_x, 0) == IntPolynomial{1});
    CHECK(IntPolynomial{1, 2} + IntPolynomial{0, -2} == IntPolynomial{1});
    CHECK(IntPolynomial{1, 2} - IntPolynomial{1, 2} == IntPolynomial{});
    CHECK(IntPolynomial::linear_power(1, 3, 3) == pow(IntPolynomial{1, 3}, 3));
    CHECK(IntPolynomial{2, 1}.shifted(2) == IntPolynomial{0, 0, 2, 1});
    CHECK(IntPolynomial{1, 4, 3}.derivative() == IntPolynomial{4, 6});

    IntPolynomial p{1, 4, 3};
    p.multiply_linear(1, 2);
    CHECK(p == IntPolynomial{1, 4, 3} * IntPolynomial{1, 2});
}

TEST_CASE("linear_power agrees with repeated multiplication on random inputs") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> small(-5, 5), expo(0, 12);
    for (int rep = 0; rep < 50; ++rep) {
        const int a = small(rng), b = small(rng);
        const unsigned e = static_cast<unsigned>(expo(rng));
        CHECK(IntPolynomial::linear_power(a, b, e) == pow(IntPolynomial::linear(a, b), e));
    }
}

TEST_CASE("composition and exact evaluation") {
    IntPolynomial p{1, 2};  // 1 + 2x
    IntPolynomial inner = pow(IntPolynomial{1, 1}, 2) - IntPolynomial{1};
    CHECK(p.compose(inner) == IntPolynomial{1, 4, 2});
    CHECK(IntPolynomial{1, 4, 3}.evaluate(BigRational(-1, 3)) == 0);
    CHECK(IntPolynomial{1, 4, 3}.evaluate(BigRational(1, 2)) == BigRational(15, 4));
    auto z = IntPolynomial{1, 0, 1}.evaluate(std::complex<double>(0, 1));
    CHECK(std::abs(z) < 1e-15);
}

TEST_CASE("coefficients beyond 64 bits stay exact") {
    auto big = pow(IntPolynomial{1, 7}, 60);
    CHECK(big.leading() == boost::multiprecision::pow(BigInt(7), 60));
    auto back = IntPolynomial::from_decimal_strings(big.to_decimal_strings());
    CHECK(back == big);
}

TEST_CASE("JSON uses decimal strings lowest degree first") {
    nlohmann::json j = IntPolynomial{1, 33, 24, 32, 16};
    CHECK(j.dump() == R"(["1","33","24","32","16"])");
    CHECK(j.get<IntPolynomial>() == IntPolynomial{1, 33, 24, 32, 16});
    CHECK_THROWS(nlohmann::json::parse(R"(["1","x"])").get<IntPolynomial>());
}

TEST_CASE("gcd, exact division and square-free decomposition") {
    IntPolynomial a{1, 1}, b{1, 2}, c{1, 1, 1};
    CHECK(gcd(a * b * b, b * c) == b);
    CHECK(gcd(a * 6, a * 4) == a);
    CHECK(divide_exact(a * b * c, c) == a * b);
    CHECK_THROWS_AS(divide_exact(a * b, c), std::domain_error);
    CHECK(content(IntPolynomial{4, 6, 10}) == 2);
    CHECK(primitive_part(IntPolynomial{-4, -6}) == IntPolynomial{2, 3});

    // (1+x)^3 (1+2x) (1+x+x^2)^2
    auto p = pow(a, 3) * b * pow(c, 2);
    auto f = square_free_decomposition(p);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == b);
    CHECK(f[1] == c);
    CHECK(f[2] == a);

    auto sq = square_free_decomposition(IntPolynomial{1, 4, 3});
    REQUIRE(sq.size() == 1);
    CHECK(sq[0] == IntPolynomial{1, 4, 3});
}

TEST_CASE("square-free decomposition reconstructs random products") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<int> coef(1, 4), mult(1, 4);
    for (int rep = 0; rep < 30; ++rep) {
        IntPolynomial p{1};
        for (int f = 0; f < 3; ++f) p *= pow(IntPolynomial{1, coef(rng), coef(rng)}, unsigned(mult(rng)));
        auto parts = square_free_decomposition(p);
        IntPolynomial rebuilt{1};
        for (std::size_t i = 0; i < parts.size(); ++i) rebuilt *= pow(parts[i], unsigned(i + 1));
        CHECK(primitive_part(rebuilt) == primitive_part(p));
        for (const auto& q : parts)
            if (q.degree() >= 1) CHECK(gcd(q, q.derivative()).degree() == 0);
    }
}

TEST_CASE("scaled_to_double handles huge values") {
    BigInt huge = BigInt(1) << 2000;
    CHECK(scaled_to_double(huge, 2000) == 1.0);
    CHECK(scaled_to_double(-huge * 3, 2001) == doctest::Approx(-1.5));
    CHECK(scaled_to_double(BigInt(5), 0) == 5.0);
}
