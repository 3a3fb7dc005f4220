#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

namespace indpoly {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with exact integer coefficients, lowest degree
/// first. Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coefficients);
    IntPolynomial(std::initializer_list<long long> coefficients);

    static IntPolynomial constant(const BigInt& c);
    static IntPolynomial monomial(const BigInt& c, int degree);
    /// a + b x
    static IntPolynomial linear(const BigInt& a, const BigInt& b);
    /// (a + b x)^e expanded by the binomial theorem.
    static IntPolynomial linear_power(const BigInt& a, const BigInt& b, unsigned e);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^k; zero past the degree.
    BigInt coeff(int k) const;
    const BigInt& leading() const { return coeffs_.back(); }

    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const BigInt& scalar);
    /// In-place multiplication by (a + b x); O(degree).
    IntPolynomial& multiply_linear(const BigInt& a, const BigInt& b);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Multiply by x^k.
    IntPolynomial shifted(int k) const;
    IntPolynomial derivative() const;
    /// p(q(x)) by Horner's scheme.
    IntPolynomial compose(const IntPolynomial& q) const;

    BigRational evaluate(const BigRational& x) const;
    /// Horner in double precision.
    std::complex<double> evaluate(std::complex<double> z) const;

    /// "1 + 4x + 3x^2"
    std::string to_string() const;
    std::vector<std::string> to_decimal_strings() const;
    static IntPolynomial from_decimal_strings(const std::vector<std::string>& digits);

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& p, unsigned e);

/// gcd of the coefficients (nonnegative); zero for the zero polynomial.
BigInt content(const IntPolynomial& p);
/// p / content(p), normalised to a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);
/// Exact quotient a / b; throws std::domain_error if b does not divide a in Z[x].
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);
/// Primitive gcd over Z[x] with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Square-free decomposition (Yun): factors[i] is the product of the
/// irreducible factors of multiplicity i + 1. Factors are primitive.
std::vector<IntPolynomial> square_free_decomposition(const IntPolynomial& p);

/// JSON array of decimal coefficient strings, lowest degree first.
void to_json(nlohmann::json& j, const IntPolynomial& p);
void from_json(const nlohmann::json& j, IntPolynomial& p);

/// Converts to double after scaling by 2^-scale_exponent; safe for
/// coefficients far beyond double range.
double scaled_to_double(const BigInt& value, long scale_exponent);

}  // namespace indpoly
