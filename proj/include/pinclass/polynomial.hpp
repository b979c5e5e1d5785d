#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pinclass {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer polynomial in z, coefficients in ascending degree with no
/// trailing zeros.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::vector<BigInt> coeffs);
    IntPolynomial(std::initializer_list<long long> coeffs);

    static IntPolynomial constant(BigInt c);
    static IntPolynomial monomial(BigInt c, std::size_t degree);
    static IntPolynomial z() { return monomial(1, 1); }

    const std::vector<BigInt>& coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    BigInt leading() const { return c_.empty() ? BigInt(0) : c_.back(); }

    Rational evaluate(const Rational& x) const;
    double evaluate(double x) const;
    int sign_at(const Rational& x) const;

    IntPolynomial derivative() const;
    /// z^degree * p(1/z).
    IntPolynomial reversed() const;
    BigInt content() const;
    /// Divided by its content, leading coefficient positive.
    IntPolynomial primitive() const;

    IntPolynomial operator-() const;
    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial& operator+=(const IntPolynomial& b) { return *this = *this + b; }
    IntPolynomial& operator-=(const IntPolynomial& b) { return *this = *this - b; }
    IntPolynomial& operator*=(const IntPolynomial& b) { return *this = *this * b; }
    bool operator==(const IntPolynomial&) const = default;

    /// `z^5-4z^4+3z^3-2z^2-z+2` (descending) or `2-z-2z^2+...` (ascending).
    std::string to_string(bool ascending = false) const;
    static IntPolynomial parse(std::string_view text);

private:
    void trim();
    std::vector<BigInt> c_;
};

IntPolynomial pow(const IntPolynomial& p, unsigned e);

/// Exact quotient; throws std::domain_error when b does not divide a over Z.
IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

IntPolynomial squarefree_part(const IntPolynomial& p);

struct RootInterval {
    Rational lo;
    Rational hi; // lo == hi for an exactly located root
};

/// Disjoint intervals, in increasing order, each holding exactly one
/// distinct real root of p; endpoints are never roots unless lo == hi.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p);

/// Number of distinct real roots in (a, b].
std::size_t count_real_roots(const IntPolynomial& p, const Rational& a, const Rational& b);

/// Shrinks an isolating interval of p until hi - lo <= width.
RootInterval refine_root(const IntPolynomial& p, RootInterval iv, const Rational& width);

Rational to_rational(double x);

/// Numerator and denominator of a sum/product/quotient expression in z with
/// integer constants: + - * / ^ and parentheses, juxtaposition multiplies.
std::pair<IntPolynomial, IntPolynomial> parse_fraction(std::string_view text);

} // namespace pinclass
