#include "../oracle.hpp"

#include "pinclass/error.hpp"
#include "pinclass/genfun.hpp"

#include <doctest.h>

#include <cmath>

using namespace pinclass;

namespace {

RationalGF gf(const char* s) { return RationalGF::parse(s); }

std::vector<long long> ll(const std::vector<BigInt>& v)
{
    std::vector<long long> out;
    for (const auto& x : v)
        out.push_back(static_cast<long long>(x));
    return out;
}

} // namespace

TEST_CASE("polynomial arithmetic")
{
    auto p = IntPolynomial::parse("z^3-2z^2-1");
    CHECK(p.to_string() == "z^3-2z^2-1");
    CHECK(p.to_string(true) == "-1-2z^2+z^3");
    CHECK(p.derivative() == IntPolynomial::parse("3z^2-4z"));
    CHECK(p.reversed() == IntPolynomial::parse("1-2z-z^3"));
    auto q = IntPolynomial::parse("z^2-1");
    CHECK(divide_exact(p * q, q) == p);
    CHECK_THROWS_AS(divide_exact(p, q), std::domain_error);
    CHECK(gcd(p * IntPolynomial::parse("z+1"), q * IntPolynomial::parse("3")) == IntPolynomial::parse("z+1"));
    CHECK(squarefree_part(IntPolynomial::parse("(z-1)^2") * IntPolynomial::parse("z+2")) == IntPolynomial::parse("z^2+z-2"));
    CHECK(IntPolynomial::parse("2z(z+1)") == IntPolynomial::parse("2z^2+2z"));
}

TEST_CASE("root isolation")
{
    auto p = IntPolynomial::parse("(z-1)(z-2)(z+3)(2z-1)");
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 4);
    std::vector<double> want{-3, 0.5, 1, 2};
    for (std::size_t i = 0; i < 4; ++i) {
        auto r = refine_root(p, roots[i], Rational(1, 1000000));
        CHECK(to_double(r.lo) <= want[i] + 1e-9);
        CHECK(to_double(r.hi) >= want[i] - 1e-9);
    }
    CHECK(count_real_roots(p, Rational(0), Rational(3, 2)) == 2);
    CHECK(isolate_real_roots(IntPolynomial::parse("z^2+1")).empty());
}

TEST_CASE("largest real roots")
{
    CHECK(largest_real_root(IntPolynomial::parse("z^3-2z^2-1")) == doctest::Approx(2.20557).epsilon(1e-5));
    CHECK(largest_real_root(IntPolynomial::parse("z^5-4z^4+3z^3-2z^2-z+2")) == doctest::Approx(3.28277).epsilon(1e-5));
    CHECK(largest_real_root(IntPolynomial::parse("z-1")) == doctest::Approx(1));
    for (const char* s : {"z^4-3z^3-2", "z^4-3z^3-4z-2", "z^5-3z^4-z^3+z-1", "z^7-z-1"}) {
        auto p = IntPolynomial::parse(s);
        std::vector<double> c;
        for (const auto& x : p.coeffs())
            c.push_back(x.convert_to<double>());
        CHECK(largest_real_root(p, 1e-12) == doctest::Approx(oracle::largest_root(c)).epsilon(1e-10));
    }
}

TEST_CASE("rational generating functions")
{
    auto k = gf("(1-z)/(1-2z-z^3)");
    CHECK(ll(k.series(5)) == std::vector<long long>{1, 1, 2, 5, 11, 24});
    CHECK(ll(k.series(12)) == oracle::series({1, -1}, {1, -2, 0, -1}, 12));
    CHECK(ll(gf("1/(1-4z+2z^2)").series(4)) == std::vector<long long>{1, 4, 14, 48, 164});
    CHECK(ll(gf("1/(1-z)").series(3)) == std::vector<long long>{1, 1, 1, 1});
    CHECK(gf("(1-z^2)/(1-z)") == gf("1+z"));
    CHECK(gf("(2-2z)/(2-4z)") == gf("(1-z)/(1-2z)"));
    CHECK(gf("1/(1-4z+2z^2)").to_string() == "1/(1-4z+2z^2)");
    CHECK(gf("(1-z)/(1-2z-z^3)").to_string() == "(1-z)/(1-2z-z^3)");
    CHECK(gf("z/(1-z)") + gf("1") == gf("1/(1-z)"));
    CHECK_THROWS_AS(gf("1/(2-z)").series(3), UnsupportedError);
    CHECK_THROWS(gf("1/z"));
}

TEST_CASE("Cartier-Foata weights")
{
    auto z = gf("z"), zero = gf("0");
    CHECK(cartier_foata(zero, z, z, z, z) == gf("1/(1-4z+2z^2)"));
    CHECK(cartier_foata(zero, zero, zero, zero, zero) == gf("1"));
    auto zz = gf("z+z^2");
    CHECK(cartier_foata(gf("2z^3"), zz, zz, zz, zero) == gf("1/(1-3z-2z^2+z^4)"));
}

TEST_CASE("box closure")
{
    CHECK(box_closure_gf(gf("(2z+2z^4)/(1-z)")) == gf("(1-z)/(1-3z-2z^4)"));
    CHECK(box_closure_gf(gf("(z+z^3)/(1-z)")) == gf("(1-z)/(1-2z-z^3)"));
    auto mu = growth_rate(box_closure_gf(gf("(2z-2z^2+2z^3+z^4-2z^5)/(1-z)^2")));
    CHECK(mu.exponential);
    CHECK(mu.value == doctest::Approx(3.28277).epsilon(1e-5));
}

TEST_CASE("growth rates")
{
    CHECK(growth_rate(gf("(1-z)/(1-2z-z^3)")).value == doctest::Approx(2.20557).epsilon(1e-5));
    CHECK(growth_rate(gf("(1-z)/(1-3z-2z^4)")).value == doctest::Approx(3.06918).epsilon(1e-5));
    CHECK(growth_rate(gf("1/(1-4z+2z^2)")).value == doctest::Approx(3.41421).epsilon(1e-5));
    CHECK(growth_rate(gf("1/(1-z)^2")).value == doctest::Approx(1));
    CHECK(growth_rate(gf("1+z+z^2")).exponential == false);
    auto g = growth_rate(gf("1/(1-3z)"), 1e-6);
    CHECK(g.lo <= 3);
    CHECK(g.hi >= 3);
}

TEST_CASE("solutions of g = 1")
{
    CHECK(smallest_positive_solution_of_g_eq_1(gf("(2z-2z^2+2z^3+z^4-2z^5)/(1-z)^2")) ==
          doctest::Approx(1 / 3.28277).epsilon(1e-4));
    CHECK(smallest_positive_solution_of_g_eq_1(gf("(2z+4z^3+2z^4)/(1-z)")) == doctest::Approx(0.29433).epsilon(1e-4));
    CHECK(smallest_positive_solution_of_g_eq_1(gf("z")) == doctest::Approx(1));
}
