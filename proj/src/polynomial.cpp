#include "indpoly/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace indpoly {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
    coeffs_.reserve(coefficients.size());
    for (long long c : coefficients) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, int degree) {
    if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
    std::vector<BigInt> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const BigInt& a, const BigInt& b) {
    return IntPolynomial(std::vector<BigInt>{a, b});
}

IntPolynomial IntPolynomial::linear_power(const BigInt& a, const BigInt& b, unsigned e) {
    // c_j = C(e, j) a^(e-j) b^j
    std::vector<BigInt> binom(e + 1);
    binom[0] = 1;
    for (unsigned j = 0; j < e; ++j) binom[j + 1] = binom[j] * (e - j) / (j + 1);
    std::vector<BigInt> apow(e + 1), out(e + 1);
    apow[0] = 1;
    for (unsigned j = 1; j <= e; ++j) apow[j] = apow[j - 1] * a;
    BigInt bpow = 1;
    for (unsigned j = 0; j <= e; ++j) {
        out[j] = binom[j] * apow[e - j] * bpow;
        bpow *= b;
    }
    return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::coeff(int k) const {
    if (k < 0 || k > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) { return *this = *this * rhs; }

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::multiply_linear(const BigInt& a, const BigInt& b) {
    if (is_zero()) return *this;
    coeffs_.emplace_back(0);
    for (std::size_t i = coeffs_.size() - 1; i > 0; --i) {
        coeffs_[i] *= a;
        coeffs_[i] += coeffs_[i - 1] * b;
    }
    coeffs_[0] *= a;
    trim();
    return *this;
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<BigInt> v(static_cast<std::size_t>(k));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * i;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& q) const {
    IntPolynomial acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= q;
        acc += constant(*it);
    }
    return acc;
}

BigRational IntPolynomial::evaluate(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRational(*it);
    return acc;
}

std::complex<double> IntPolynomial::evaluate(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + static_cast<double>(*it);
    return acc;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const BigInt& c = coeffs_[k];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0 || mag != 1) out << mag;
        if (k >= 1) out << 'x';
        if (k >= 2) out << '^' << k;
    }
    return out.str();
}

std::vector<std::string> IntPolynomial::to_decimal_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.str());
    return out;
}

IntPolynomial IntPolynomial::from_decimal_strings(const std::vector<std::string>& digits) {
    std::vector<BigInt> v;
    v.reserve(digits.size());
    for (const auto& d : digits) {
        if (d.empty() || d.find_first_not_of("-0123456789") != std::string::npos)
            throw std::invalid_argument("not a decimal integer: '" + d + "'");
        v.emplace_back(d);
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial pow(const IntPolynomial& p, unsigned e) {
    IntPolynomial result = IntPolynomial::constant(1);
    IntPolynomial base = p;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return result;
}

BigInt content(const IntPolynomial& p) {
    BigInt g = 0;
    for (const auto& c : p.coefficients()) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return abs(g);
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt c = content(p);
    if (p.leading() < 0) c = -c;
    std::vector<BigInt> v = p.coefficients();
    for (auto& x : v) x /= c;
    return IntPolynomial(std::move(v));
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.is_zero()) return {};
    const int db = b.degree();
    if (a.degree() < db) throw std::domain_error("inexact polynomial division");
    std::vector<BigInt> rem = a.coefficients();
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db) + 1);
    const BigInt& lead = b.leading();
    for (int k = a.degree() - db; k >= 0; --k) {
        BigInt& top = rem[static_cast<std::size_t>(k + db)];
        if (top == 0) continue;
        BigInt r;
        divide_qr(top, lead, q[k], r);
        if (r != 0) throw std::domain_error("inexact polynomial division");
        for (int i = 0; i <= db; ++i) rem[k + i] -= q[k] * b.coefficients()[i];
    }
    for (const auto& r : rem)
        if (r != 0) throw std::domain_error("inexact polynomial division");
    return IntPolynomial(std::move(q));
}

namespace {

// a * lc(b)^(deg a - deg b + 1) mod b
IntPolynomial pseudo_remainder(IntPolynomial a, const IntPolynomial& b) {
    const int db = b.degree();
    const BigInt& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        BigInt la = a.leading();
        IntPolynomial t = b.shifted(a.degree() - db) * la;
        a *= lb;
        a -= t;
    }
    return a;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    IntPolynomial u = primitive_part(a), v = primitive_part(b);
    if (u.degree() < v.degree()) std::swap(u, v);
    while (!v.is_zero()) {
        IntPolynomial r = pseudo_remainder(u, v);
        u = std::move(v);
        v = primitive_part(r);
    }
    return primitive_part(u);
}

std::vector<IntPolynomial> square_free_decomposition(const IntPolynomial& p) {
    if (p.degree() < 1) return {};
    const IntPolynomial f = primitive_part(p);
    IntPolynomial g = gcd(f, f.derivative());
    IntPolynomial w = divide_exact(f, g);  // square-free part
    std::vector<IntPolynomial> out;
    while (w.degree() >= 1) {
        IntPolynomial y = gcd(w, g);
        out.push_back(divide_exact(w, y));
        g = divide_exact(g, y);
        w = std::move(y);
    }
    while (!out.empty() && out.back().degree() < 1) out.pop_back();
    return out;
}

void to_json(nlohmann::json& j, const IntPolynomial& p) { j = p.to_decimal_strings(); }

void from_json(const nlohmann::json& j, IntPolynomial& p) {
    p = IntPolynomial::from_decimal_strings(j.get<std::vector<std::string>>());
}

double scaled_to_double(const BigInt& value, long scale_exponent) {
    if (value == 0) return 0.0;
    const long bits = static_cast<long>(msb(abs(value))) + 1;
    const long drop = bits > 60 ? bits - 60 : 0;
    BigInt top = value >> static_cast<unsigned>(drop);
    if (value < 0 && drop > 0) top = -(abs(value) >> static_cast<unsigned>(drop));
    return std::ldexp(static_cast<double>(top), static_cast<int>(drop - scale_exponent));
}

}  // namespace indpoly
