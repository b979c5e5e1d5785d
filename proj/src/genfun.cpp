#include "pinclass/genfun.hpp"

#include "pinclass/error.hpp"

#include <algorithm>

namespace pinclass {

RationalGF::RationalGF(IntPolynomial num, IntPolynomial den)
{
    if (den.is_zero())
        throw ValidationError("generating function with zero denominator");
    IntPolynomial g = gcd(num, den);
    if (!num.is_zero() && g.degree() > 0) {
        num = divide_exact(num, g);
        den = divide_exact(den, g);
    }
    if (num.is_zero())
        den = IntPolynomial::constant(1);
    BigInt c = boost::multiprecision::gcd(num.content(), den.content());
    if (den.coeff(0) < 0)
        c = -c;
    if (c != 1 && c != 0) {
        std::vector<BigInt> n, d;
        for (const auto& x : num.coeffs())
            n.push_back(x / c);
        for (const auto& x : den.coeffs())
            d.push_back(x / c);
        num = IntPolynomial(std::move(n));
        den = IntPolynomial(std::move(d));
    }
    if (den.coeff(0) == 0)
        throw ValidationError("denominator " + den.to_string(true) + " vanishes at z=0");
    num_ = std::move(num);
    den_ = std::move(den);
}

RationalGF RationalGF::parse(std::string_view text)
{
    auto [num, den] = parse_fraction(text);
    return RationalGF(std::move(num), std::move(den));
}

std::vector<BigInt> RationalGF::series(std::size_t n) const
{
    if (n >= kMaxSeriesLength)
        throw ValidationError("series length capped at " + std::to_string(kMaxSeriesLength) + " coefficients");
    const auto& d = den_.coeffs();
    std::vector<BigInt> a(n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k) {
        BigInt s = num_.coeff(k);
        for (std::size_t j = 1; j < d.size() && j <= k; ++j)
            s -= d[j] * a[k - j];
        if (s % d[0] != 0)
            throw UnsupportedError("series of " + to_string() + " has non-integer coefficients");
        a[k] = s / d[0];
    }
    return a;
}

RationalGF operator+(const RationalGF& a, const RationalGF& b)
{
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalGF operator-(const RationalGF& a, const RationalGF& b)
{
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalGF operator*(const RationalGF& a, const RationalGF& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

RationalGF operator/(const RationalGF& a, const RationalGF& b)
{
    if (b.num_.is_zero())
        throw ValidationError("division by the zero series");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string RationalGF::to_string() const
{
    if (den_ == IntPolynomial::constant(1))
        return num_.to_string(true);
    std::string n = num_.to_string(true);
    if (num_.coeffs().size() - std::count(num_.coeffs().begin(), num_.coeffs().end(), 0) > 1)
        n = "(" + n + ")";
    return n + "/(" + den_.to_string(true) + ")";
}

RationalGF cartier_foata(const RationalGF& ga, const RationalGF& g1, const RationalGF& g2, const RationalGF& g3,
                         const RationalGF& g4)
{
    for (const auto* g : {&ga, &g1, &g2, &g3, &g4})
        if (!g->has_zero_constant_term())
            throw ValidationError("weight " + g->to_string() + " has a nonzero constant term");
    RationalGF one(IntPolynomial::constant(1));
    return one / (one - (ga + g1 + g2 + g3 + g4) + g1 * g3 + g2 * g4);
}

RationalGF box_closure_gf(const RationalGF& indec)
{
    if (!indec.has_zero_constant_term())
        throw ValidationError("weight " + indec.to_string() + " has a nonzero constant term");
    RationalGF one(IntPolynomial::constant(1));
    return one / (one - indec);
}

RationalGF box_closure_gf(const QuadrantWeights& w)
{
    return cartier_foata(w.ga, w.g1, w.g2, w.g3, w.g4);
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::optional<RootInterval> smallest_positive_root(const IntPolynomial& p, double tol)
{
    if (!(tol > 0))
        throw ValidationError("tolerance must be positive");
    const IntPolynomial sf = squarefree_part(p);
    for (auto r : isolate_real_roots(sf)) {
        if (r.hi <= 0)
            continue;
        if (r.lo < 0) {
            int s0 = sf.sign_at(0);
            if (s0 == 0 || s0 == sf.sign_at(r.hi))
                continue;
            r.lo = 0;
        }
        return refine_root(sf, r, to_rational(tol));
    }
    return std::nullopt;
}

Growth growth_rate(const RationalGF& f, double tol)
{
    if (!(tol > 0))
        throw ValidationError("tolerance must be positive");
    Growth g;
    auto root = smallest_positive_root(f.den(), 1.0);
    if (!root) {
        g.exponential = false;
        g.lo = g.hi = 1;
        return g;
    }
    RootInterval r = *root;
    const Rational t = to_rational(tol);
    // Refine until the reciprocal bracket is narrow enough.
    Rational width = (r.hi - r.lo) / 2;
    while (r.lo != r.hi && (r.lo == 0 || 1 / r.lo - 1 / r.hi > t)) {
        r = refine_root(f.den(), r, width);
        width /= 2;
    }
    g.lo = 1 / r.hi;
    g.hi = 1 / r.lo;
    g.value = to_double((g.lo + g.hi) / 2);
    return g;
}

double largest_real_root(const IntPolynomial& p, double tol)
{
    if (p.degree() < 1)
        throw ValidationError("largest_real_root needs a nonconstant polynomial");
    auto roots = isolate_real_roots(p);
    if (roots.empty())
        throw ValidationError(p.to_string() + " has no real root");
    auto r = refine_root(p, roots.back(), to_rational(tol));
    return to_double((r.lo + r.hi) / 2);
}

double smallest_positive_solution_of_g_eq_1(const RationalGF& g, double tol)
{
    IntPolynomial h = g.den() - g.num();
    auto sol = smallest_positive_root(h, tol);
    if (!sol)
        throw ValidationError("g(z) = 1 has no positive solution for g = " + g.to_string());
    auto pole = smallest_positive_root(g.den(), tol);
    if (pole) {
        // Reduced form: h and den share no root, so refinement separates them.
        Rational w = to_rational(tol);
        while (pole->lo < sol->hi && sol->lo < pole->hi) {
            w /= 16;
            sol = refine_root(h, *sol, w);
            pole = refine_root(g.den(), *pole, w);
        }
        if (pole->hi <= sol->lo)
            throw ValidationError("g(z) = 1 has no solution below the first pole of " + g.to_string());
    }
    return to_double((sol->lo + sol->hi) / 2);
}

} // namespace pinclass
