#include "pinclass/polynomial.hpp"

#include "pinclass/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace pinclass {

namespace {

using QPoly = std::vector<Rational>; // ascending, trimmed

void trim(QPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

QPoly to_q(const IntPolynomial& p)
{
    QPoly q;
    for (const auto& c : p.coeffs())
        q.emplace_back(c);
    return q;
}

// Clears denominators and returns the primitive integer multiple.
IntPolynomial from_q(const QPoly& q)
{
    BigInt l = 1;
    for (const auto& c : q)
        l = boost::multiprecision::lcm(l, BigInt(boost::multiprecision::denominator(c)));
    std::vector<BigInt> out;
    for (const auto& c : q)
        out.push_back(BigInt(boost::multiprecision::numerator(c)) * (l / BigInt(boost::multiprecision::denominator(c))));
    return IntPolynomial(std::move(out)).primitive();
}

// Remainder of a by b over Q.
QPoly q_rem(QPoly a, const QPoly& b)
{
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p)
{
    std::vector<IntPolynomial> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        QPoly r = q_rem(to_q(chain[chain.size() - 2]), to_q(chain.back()));
        if (r.empty())
            break;
        // The chain only needs signs, so positive rescaling is harmless.
        IntPolynomial ri = from_q(r);
        Rational lead = r.back();
        if ((lead > 0) == (ri.leading() > 0))
            ri = -ri;
        chain.push_back(ri);
    }
    if (chain.back().is_zero())
        chain.pop_back();
    return chain;
}

std::size_t sign_changes(const std::vector<IntPolynomial>& chain, const Rational& x)
{
    std::size_t changes = 0;
    int prev = 0;
    for (const auto& q : chain) {
        int s = q.sign_at(x);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++changes;
        prev = s;
    }
    return changes;
}

Rational cauchy_bound(const IntPolynomial& p)
{
    Rational m = 0;
    const Rational lead = boost::multiprecision::abs(p.leading());
    for (int i = 0; i < p.degree(); ++i)
        m = std::max(m, Rational(boost::multiprecision::abs(p.coeffs()[static_cast<std::size_t>(i)])) / lead);
    return m + 1;
}

// Expression parser over fractions of polynomials.
class FractionParser {
public:
    using Frac = std::pair<IntPolynomial, IntPolynomial>;

    explicit FractionParser(std::string_view s) : s_(s) {}

    Frac parse()
    {
        Frac f = expr();
        skip();
        if (i_ != s_.size())
            fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return f;
    }

private:
    static Frac add(const Frac& a, const Frac& b, bool subtract)
    {
        IntPolynomial rhs = a.second * b.first;
        return {subtract ? a.first * b.second - rhs : a.first * b.second + rhs, a.second * b.second};
    }
    static Frac mul(const Frac& a, const Frac& b) { return {a.first * b.first, a.second * b.second}; }
    Frac div(const Frac& a, const Frac& b)
    {
        if (b.first.is_zero())
            fail("division by zero");
        return {a.first * b.second, a.second * b.first};
    }

    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
            ++i_;
    }
    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ValidationError("cannot parse '" + std::string(s_) + "': " + what);
    }

    Frac expr()
    {
        Frac f = term();
        for (;;) {
            if (eat('+'))
                f = add(f, term(), false);
            else if (eat('-'))
                f = add(f, term(), true);
            else
                return f;
        }
    }

    bool starts_factor()
    {
        skip();
        return i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == 'z' || s_[i_] == 'x' || s_[i_] == '(');
    }

    Frac term()
    {
        Frac f = unary();
        for (;;) {
            if (eat('*'))
                f = mul(f, unary());
            else if (eat('/'))
                f = div(f, unary());
            else if (starts_factor())
                f = mul(f, power());
            else
                return f;
        }
    }

    Frac unary()
    {
        if (eat('-')) {
            Frac f = unary();
            return {-f.first, f.second};
        }
        if (eat('+'))
            return unary();
        return power();
    }

    Frac power()
    {
        Frac base = primary();
        if (eat('^')) {
            skip();
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            if (start == i_)
                fail("exponent must be a nonnegative integer");
            unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, i_ - start))));
            return {pinclass::pow(base.first, e), pinclass::pow(base.second, e)};
        }
        return base;
    }

    Frac primary()
    {
        skip();
        if (i_ >= s_.size())
            fail("unexpected end of input");
        char c = s_[i_];
        if (c == '(') {
            ++i_;
            Frac f = expr();
            if (!eat(')'))
                fail("missing ')'");
            return f;
        }
        if (c == 'z' || c == 'x') {
            ++i_;
            return {IntPolynomial::z(), IntPolynomial::constant(1)};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
                ++i_;
            return {IntPolynomial::constant(BigInt(std::string(s_.substr(start, i_ - start)))), IntPolynomial::constant(1)};
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs)
{
    for (long long c : coeffs)
        c_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t degree)
{
    std::vector<BigInt> v(degree + 1, 0);
    v[degree] = std::move(c);
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Rational IntPolynomial::evaluate(const Rational& x) const
{
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + Rational(*it);
    return r;
}

double IntPolynomial::evaluate(double x) const
{
    double r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        r = r * x + it->convert_to<double>();
    return r;
}

int IntPolynomial::sign_at(const Rational& x) const { return sign(evaluate(x)); }

IntPolynomial IntPolynomial::derivative() const
{
    std::vector<BigInt> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(c_[i] * static_cast<long long>(i));
    return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::reversed() const
{
    std::vector<BigInt> r(c_.rbegin(), c_.rend());
    return IntPolynomial(std::move(r));
}

BigInt IntPolynomial::content() const
{
    BigInt g = 0;
    for (const auto& c : c_)
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
    return g;
}

IntPolynomial IntPolynomial::primitive() const
{
    if (is_zero())
        return {};
    BigInt g = content();
    if (leading() < 0)
        g = -g;
    std::vector<BigInt> out;
    for (const auto& c : c_)
        out.push_back(c / g);
    return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const
{
    std::vector<BigInt> out;
    for (const auto& c : c_)
        out.push_back(-c);
    return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
    std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i)
        out[i] += b.c_[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) { return a + (-b); }

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(bool ascending) const
{
    if (c_.empty())
        return "0";
    std::string s;
    auto term = [&](std::size_t i) {
        const BigInt& c = c_[i];
        if (c == 0)
            return;
        BigInt mag = boost::multiprecision::abs(c);
        if (c < 0)
            s += '-';
        else if (!s.empty())
            s += '+';
        if (i == 0 || mag != 1)
            s += mag.str();
        if (i >= 1)
            s += 'z';
        if (i >= 2)
            s += '^' + std::to_string(i);
    };
    if (ascending)
        for (std::size_t i = 0; i < c_.size(); ++i)
            term(i);
    else
        for (std::size_t i = c_.size(); i-- > 0;)
            term(i);
    return s;
}

IntPolynomial IntPolynomial::parse(std::string_view text)
{
    auto [num, den] = parse_fraction(text);
    if (den.degree() != 0)
        throw ValidationError("'" + std::string(text) + "' is not a polynomial");
    try {
        return divide_exact(num, den);
    } catch (const std::domain_error&) {
        throw ValidationError("'" + std::string(text) + "' does not have integer coefficients");
    }
}

IntPolynomial pow(const IntPolynomial& p, unsigned e)
{
    IntPolynomial r = IntPolynomial::constant(1), b = p;
    while (e) {
        if (e & 1u)
            r *= b;
        b *= b;
        e >>= 1u;
    }
    return r;
}

IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("division by the zero polynomial");
    std::vector<BigInt> rem = a.coeffs();
    const auto& bc = b.coeffs();
    if (rem.size() < bc.size()) {
        if (!a.is_zero())
            throw std::domain_error("polynomial division is not exact");
        return {};
    }
    std::vector<BigInt> q(rem.size() - bc.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const BigInt& top = rem[k + bc.size() - 1];
        if (top % bc.back() != 0)
            throw std::domain_error("polynomial division is not exact");
        q[k] = top / bc.back();
        for (std::size_t i = 0; i < bc.size(); ++i)
            rem[k + i] -= q[k] * bc[i];
    }
    for (const auto& r : rem)
        if (r != 0)
            throw std::domain_error("polynomial division is not exact");
    return IntPolynomial(std::move(q));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b)
{
    QPoly x = to_q(a), y = to_q(b);
    while (!y.empty()) {
        QPoly r = q_rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty())
        return {};
    return from_q(x);
}

IntPolynomial squarefree_part(const IntPolynomial& p)
{
    if (p.degree() <= 0)
        return p;
    return divide_exact(p.primitive(), gcd(p, p.derivative()));
}

std::size_t count_real_roots(const IntPolynomial& p, const Rational& a, const Rational& b)
{
    auto chain = sturm_chain(squarefree_part(p));
    return sign_changes(chain, a) - sign_changes(chain, b);
}

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p)
{
    std::vector<RootInterval> out;
    if (p.degree() < 1)
        return out;
    const IntPolynomial sf = squarefree_part(p);
    const auto chain = sturm_chain(sf);
    const Rational bound = cauchy_bound(sf);

    struct Job {
        Rational lo, hi;
        std::size_t vlo, vhi;
    };
    std::vector<Job> stack{{-bound, bound, sign_changes(chain, -bound), sign_changes(chain, bound)}};
    while (!stack.empty()) {
        Job j = stack.back();
        stack.pop_back();
        std::size_t n = j.vlo - j.vhi;
        if (n == 0)
            continue;
        if (n == 1) {
            out.push_back({j.lo, j.hi});
            continue;
        }
        Rational mid = (j.lo + j.hi) / 2;
        for (int k = 3; sf.sign_at(mid) == 0; k += 2)
            mid = j.lo + (j.hi - j.lo) / k;
        std::size_t vm = sign_changes(chain, mid);
        stack.push_back({mid, j.hi, vm, j.vhi});
        stack.push_back({j.lo, mid, j.vlo, vm});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    return out;
}

RootInterval refine_root(const IntPolynomial& p, RootInterval iv, const Rational& width)
{
    const IntPolynomial sf = squarefree_part(p);
    if (iv.lo == iv.hi)
        return iv;
    int slo = sf.sign_at(iv.lo);
    while (iv.hi - iv.lo > width) {
        Rational mid = (iv.lo + iv.hi) / 2;
        int sm = sf.sign_at(mid);
        if (sm == 0)
            return {mid, mid};
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

Rational to_rational(double x)
{
    if (!(x > 0) && !(x <= 0))
        throw ValidationError("tolerance must be a number");
    int e = 0;
    double m = std::frexp(x, &e);
    BigInt mant = static_cast<long long>(std::ldexp(m, 53));
    Rational r(mant);
    e -= 53;
    if (e >= 0)
        r *= Rational(BigInt(1) << e);
    else
        r /= Rational(BigInt(1) << -e);
    return r;
}

std::pair<IntPolynomial, IntPolynomial> parse_fraction(std::string_view text)
{
    return FractionParser(text).parse();
}

} // namespace pinclass
