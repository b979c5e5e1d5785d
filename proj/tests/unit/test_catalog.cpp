#include "../oracle.hpp"

#include "pinclass/catalog.hpp"
#include "pinclass/error.hpp"

#include <doctest.h>

#include <cmath>

using namespace pinclass;

TEST_CASE("catalog lookups")
{
    const auto& k = entry("kappa");
    REQUIRE(k.word);
    CHECK(*k.word == "pin:per:;ru,ur");
    CHECK(k.class_gf->to_string() == "(1-z)/(1-2z-z^3)");
    CHECK(k.polynomial.to_string() == "z^3-2z^2-1");
    CHECK(k.expected == "2.20557");
    CHECK(k.certification == Certification::FullyCertified);

    CHECK(*entry("nu_2_2").word == "phi(per:;0011)");
    CHECK(entry("nu_2_2").polynomial.to_string() == "z^4-3z^3-4z-2");
    CHECK(*entry("three_quadrant_min").word == "pin:per:;ur,lu,dl,ld,ul,ru");
    CHECK(entry("three_quadrant_min").certification == Certification::ExpectedValueOnly);
    CHECK_THROWS_AS(entry("no_such_class"), ValidationError);
}

TEST_CASE("catalog verification")
{
    VerifyOptions opts;
    opts.n_max = 7;
    for (const auto& e : catalog()) {
        if (e.name == "four_quadrant_helper")
            continue;
        auto r = verify(e, opts);
        INFO(r.to_json());
        CHECK(r.passed());
    }
}

TEST_CASE("printed four-quadrant decimal is not the root of its polynomial")
{
    auto r = verify(entry("four_quadrant_helper"));
    CHECK(r.computed == doctest::Approx(3.65109).epsilon(1e-6));
    CHECK(std::abs(r.computed - 3.69109) > 0.03);
    CHECK(entry("four_quadrant_helper").class_gf->to_string() == "1/(1-4z+z^2+z^3)");
}

TEST_CASE("growth table for w_{1,l}")
{
    auto rows = section4_table();
    REQUIRE(rows.size() == 6);
    const std::vector<std::string> printed{"3.06918", "3.24796", "3.27963", "3.28248", "3.28274", "3.28277"};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(rows[i].ell == i + 1);
        CHECK(rows[i].sequence.size() == 2 * (i + 1) + 2);
        CHECK(std::abs(rows[i].growth - std::stod(printed[i])) < 1e-5);
        CHECK(rows[i].expected == printed[i]);
    }
    CHECK(rows[0].sequence == std::vector<BigInt>{2, 2, 2, 4});
}

TEST_CASE("mu certificates")
{
    auto c2 = mu_lower_bound_certificate(2);
    CHECK(c2.passed);
    CHECK(c2.bound == doctest::Approx(3.39752).epsilon(1e-5));
    auto c3 = mu_lower_bound_certificate(3);
    CHECK(c3.passed);
    CHECK(std::abs(c3.bound - 3.310) < printed_precision("3.310") / 2);
    CHECK(c3.bound > 3.28277);
    auto c6 = mu_lower_bound_certificate(6);
    CHECK(c6.identity_holds);
    CHECK(c6.root <= 1 / 3.28277 + 1e-6);
    CHECK(g_s(6) - g_star() == RationalGF::parse("z^10(1-2z^2)/(1-z)^2"));
}

TEST_CASE("g_k approach g_star")
{
    auto star = g_star().series(40);
    for (unsigned k = 2; k <= 8; ++k) {
        auto s = g_k(k).series(40);
        for (unsigned i = 0; i <= 2 * k + 1; ++i)
            CHECK(s[i] == star[i]);
        CHECK(s[2 * k + 2] != star[2 * k + 2]);
    }
    auto roots = gk_family(8);
    for (std::size_t i = 1; i < roots.size(); ++i)
        CHECK(roots[i].root > roots[i - 1].root);
}

TEST_CASE("bound constructions")
{
    for (const auto& b : three_quadrant_bound_check()) {
        INFO(b.name);
        CHECK(b.gf_matches);
        CHECK(b.passed);
    }
    auto four = four_quadrant_bound_check();
    REQUIRE(four.size() == 2);
    CHECK(four[0].passed);
    CHECK(four[1].gf_matches);
    CHECK(entry("lambda").polynomial.to_string() == "z^5-3z^4-z^3+z-1");
    CHECK(largest_real_root(IntPolynomial::parse("z^4-3z^3-2z^2+1")) == doctest::Approx(3.542).epsilon(1e-4));
}

TEST_CASE("printed precision")
{
    CHECK(printed_precision("3.28277") == doctest::Approx(1e-5));
    CHECK(printed_precision("3.24") == doctest::Approx(1e-2));
}
