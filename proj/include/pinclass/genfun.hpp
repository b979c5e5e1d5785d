#pragma once

#include "pinclass/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pinclass {

inline constexpr std::size_t kMaxSeriesLength = 1'000'000;
inline constexpr double kDefaultTolerance = 1e-9;

/// num/den in lowest terms with den(0) > 0.
class RationalGF {
public:
    RationalGF() : den_(IntPolynomial::constant(1)) {}
    RationalGF(IntPolynomial num, IntPolynomial den = IntPolynomial::constant(1));

    static RationalGF parse(std::string_view text); // "(1-z)/(1-2z-z^3)"

    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }
    bool has_zero_constant_term() const { return num_.coeff(0) == 0; }

    /// Coefficients of z^0..z^n.
    std::vector<BigInt> series(std::size_t n) const;

    friend RationalGF operator+(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator-(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator*(const RationalGF& a, const RationalGF& b);
    friend RationalGF operator/(const RationalGF& a, const RationalGF& b);
    bool operator==(const RationalGF&) const = default;

    std::string to_string() const;

private:
    IntPolynomial num_;
    IntPolynomial den_;
};

/// 1/(1 - (ga+g1+g2+g3+g4) + g1 g3 + g2 g4); every weight must vanish at 0.
RationalGF cartier_foata(const RationalGF& ga, const RationalGF& g1, const RationalGF& g2, const RationalGF& g3,
                         const RationalGF& g4);

/// Indecomposable weight split by where each factor lives: one per quadrant
/// plus everything spanning more than one quadrant.
struct QuadrantWeights {
    RationalGF g1, g2, g3, g4, ga;
    RationalGF total() const { return g1 + g2 + g3 + g4 + ga; }
};

/// 1/(1-g): no two indecomposables commute.
RationalGF box_closure_gf(const RationalGF& indec);
RationalGF box_closure_gf(const QuadrantWeights& w);

struct Growth {
    bool exponential = true; // false: no positive singularity, growth rate 1 or less
    double value = 1.0;
    Rational lo, hi; // certified bracket of the growth rate
};

Growth growth_rate(const RationalGF& f, double tol = kDefaultTolerance);

/// Throws ValidationError when p has no real root.
double largest_real_root(const IntPolynomial& p, double tol = kDefaultTolerance);

/// Smallest positive root of p, if any, as a certified interval of width <= tol.
std::optional<RootInterval> smallest_positive_root(const IntPolynomial& p, double tol = kDefaultTolerance);

/// Smallest z > 0 with g(z) = 1 below the first positive pole of g.
double smallest_positive_solution_of_g_eq_1(const RationalGF& g, double tol = kDefaultTolerance);

double to_double(const Rational& r);

} // namespace pinclass
