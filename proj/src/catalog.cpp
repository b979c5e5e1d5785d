#include "pinclass/catalog.hpp"

#include "pinclass/error.hpp"

#include <json.hpp>

#include <cmath>

namespace pinclass {

namespace {

RationalGF gf(const char* text) { return RationalGF::parse(text); }
IntPolynomial poly(const char* text) { return IntPolynomial::parse(text); }

IntPolynomial zpow(std::size_t d) { return IntPolynomial::monomial(1, d); }

std::string phi_word(unsigned k, unsigned ell)
{
    return "phi(per:;" + std::string(k, '0') + std::string(ell, '1') + ")";
}

// z^{2l} - 4z^{2l-1} + 3z^{2l-2} - 2z^{2l-3} - z^{2l-4} + 2z^{2l-5} + 1
IntPolynomial nu_polynomial(unsigned ell)
{
    if (ell == 1)
        return poly("z^4-3z^3-2");
    if (ell == 2)
        return poly("z^4-3z^3-2z-2");
    const std::size_t d = 2 * ell;
    IntPolynomial p = zpow(d);
    p -= IntPolynomial::monomial(4, d - 1);
    p += IntPolynomial::monomial(3, d - 2);
    p -= IntPolynomial::monomial(2, d - 3);
    p -= IntPolynomial::monomial(1, d - 4);
    p += IntPolynomial::monomial(2, d - 5);
    return p + IntPolynomial::constant(1);
}

std::vector<CatalogEntry> build_catalog()
{
    std::vector<CatalogEntry> c;
    auto add = [&](CatalogEntry e) { c.push_back(std::move(e)); };

    {
        CatalogEntry e;
        e.name = "kappa";
        e.description = "oscillation in one quadrant";
        e.word = "pin:per:;ru,ur";
        e.indec_gf = gf("(z+z^3)/(1-z)");
        e.class_gf = gf("(1-z)/(1-2z-z^3)");
        e.polynomial = poly("z^3-2z^2-1");
        e.expected = "2.20557";
        e.certification = Certification::FullyCertified;
        add(e);
    }
    const char* nu_expected[] = {"3.06918", "3.24796", "3.27963", "3.28248", "3.28274", "3.28277"};
    for (unsigned ell = 1; ell <= 6; ++ell) {
        CatalogEntry e;
        e.name = "nu_" + std::to_string(ell);
        e.description = "two-quadrant word w_{1," + std::to_string(ell) + "}";
        e.word = phi_word(1, ell);
        e.indec_gf = g_one_ell(ell);
        e.class_gf = box_closure_gf(*e.indec_gf);
        e.polynomial = nu_polynomial(ell);
        e.expected = nu_expected[ell - 1];
        e.certification = Certification::FullyCertified;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "nu_2_2";
        e.description = "two-quadrant word w_{2,2}";
        e.word = phi_word(2, 2);
        e.indec_gf = gf("(2z+4z^3+2z^4)/(1-z)");
        e.class_gf = gf("(1-z)/(1-3z-4z^3-2z^4)");
        e.polynomial = poly("z^4-3z^3-4z-2");
        e.expected = "3.39752";
        e.certification = Certification::FullyCertified;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "mu";
        e.description = "phase transition: phi of a Sturmian word";
        e.word = "phi(sturmian:1)";
        e.indec_gf = g_star();
        e.class_gf = box_closure_gf(g_star());
        e.polynomial = poly("z^5-4z^4+3z^3-2z^2-z+2");
        e.expected = "3.28277";
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "lambda";
        e.description = "lower bound for three quadrants";
        e.class_gf = cartier_foata(gf("2z^3+z^5"), gf("z+z^2"), gf("z"), gf("z+z^2"), RationalGF());
        e.polynomial = poly("z^5-3z^4-z^3+z-1");
        e.expected = "3.28481";
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "widdershins";
        e.description = "smallest class visiting four quadrants";
        e.word = "pin:per:;ur,lu,dl,rd";
        e.polynomial = poly("z^5-5z^4+6z^3-2z^2-z-3");
        e.expected = "3.48806";
        e.certification = Certification::ExpectedValueOnly;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "three_quadrant_min";
        e.description = "smallest class visiting three quadrants";
        e.word = "pin:per:;ur,lu,dl,ld,ul,ru";
        e.polynomial = poly("z^5-4z^4+2z^3+z^2-2z+1");
        e.expected = "3.36132";
        e.certification = Certification::ExpectedValueOnly;
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "x_class";
        e.description = "one point per quadrant, gridded";
        e.class_gf = cartier_foata(RationalGF(), gf("z"), gf("z"), gf("z"), gf("z"));
        e.polynomial = poly("z^2-4z+2");
        e.expected = "3.41421";
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "four_quadrant_helper";
        e.description = "singletons in four quadrants plus one two-point pattern";
        e.class_gf = cartier_foata(RationalGF(), gf("z+z^2"), gf("z"), gf("z"), gf("z"));
        e.polynomial = poly("z^3-4z^2+z+1");
        e.expected = "3.69109";
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "bound_3_542";
        e.description = "three quadrants with a two-point pattern in quadrant 2";
        e.class_gf = cartier_foata(gf("2z^3"), gf("z+z^2"), gf("z+z^2"), gf("z+z^2"), RationalGF());
        e.polynomial = poly("z^4-3z^3-2z^2+1");
        e.expected = "3.542";
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "bound_3_423";
        e.description = "00, 11 and 000 recurrent in b";
        e.indec_gf = gf("(2z+4z^3+3z^4+z^5)/(1-z)");
        e.class_gf = box_closure_gf(*e.indec_gf);
        e.polynomial = e.class_gf->den().reversed();
        e.expected = "3.423";
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "bound_3_24";
        e.description = "00 or 11 recurrent in b";
        e.indec_gf = gf("(2z+2z^3+2z^4)/(1-z)");
        e.class_gf = gf("(1-z)/(1-3z-2z^3-2z^4)");
        e.polynomial = poly("z^4-3z^3-2z-2");
        e.expected = "3.24";
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "bound_3_397";
        e.description = "recurrent complexity profile s_2";
        e.indec_gf = s_profile_gf(2);
        e.class_gf = box_closure_gf(*e.indec_gf);
        e.polynomial = poly("z^4-3z^3-4z-2");
        e.expected = "3.397";
        add(e);
    }
    {
        CatalogEntry e;
        e.name = "bound_3_310";
        e.description = "recurrent complexity profile s_3";
        e.indec_gf = s_profile_gf(3);
        e.class_gf = box_closure_gf(*e.indec_gf);
        e.polynomial = e.class_gf->den().reversed();
        e.expected = "3.310";
        add(e);
    }
    return c;
}

Counts to_counts(const std::vector<BigInt>& series, std::size_t n_max)
{
    Counts c;
    for (std::size_t n = 1; n <= n_max; ++n)
        c.push_back(series[n].convert_to<std::uint64_t>());
    return c;
}

std::string render(const Counts& c)
{
    std::string s;
    for (auto x : c)
        s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

double one_over_mu(double tol) { return smallest_positive_solution_of_g_eq_1(g_star(), tol); }

} // namespace

std::string to_string(Certification c)
{
    switch (c) {
    case Certification::FullyCertified: return "FullyCertified";
    case Certification::FormulaOnly: return "FormulaOnly";
    case Certification::ExpectedValueOnly: return "ExpectedValueOnly";
    }
    return "?";
}

RationalGF g_one_ell(unsigned ell)
{
    if (ell == 0)
        throw ValidationError("l must be positive");
    if (ell == 1)
        return gf("(2z+2z^4)/(1-z)");
    if (ell == 2)
        return gf("(2z+2z^3+2z^4)/(1-z)");
    IntPolynomial num = poly("2z-2z^2+2z^3+z^4-2z^5") - zpow(2 * ell);
    return RationalGF(num, poly("(1-z)^2"));
}

RationalGF g_star() { return gf("(2z-2z^2+2z^3+z^4-2z^5)/(1-z)^2"); }

RationalGF g_s(unsigned k)
{
    if (k < 4)
        throw ValidationError("g_s is defined for k >= 4");
    IntPolynomial num = poly("2z-2z^2+2z^3+z^4-2z^5") + zpow(2 * k - 2) - IntPolynomial::monomial(2, 2 * k);
    return RationalGF(num, poly("(1-z)^2"));
}

RationalGF g_k(unsigned k)
{
    if (k < 1)
        throw ValidationError("k must be positive");
    IntPolynomial num = poly("2z-2z^2+2z^3+z^4-2z^5") + zpow(2 * k + 2) - zpow(4 * k) - zpow(4 * k + 4);
    return RationalGF(num, poly("(1-z)^2"));
}

std::vector<unsigned> s_profile(unsigned k, std::size_t n_max)
{
    if (k < 2)
        throw ValidationError("s_k needs k >= 2");
    auto s = [&](std::size_t n) -> unsigned { return n < k ? static_cast<unsigned>(n + 1) : k + 2; };
    std::vector<unsigned> out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (n <= 2)
            out.push_back(2);
        else if (n == 3)
            out.push_back(2 * s(2) - 2);
        else if (n % 2 == 0)
            out.push_back(s(n / 2) + s(n / 2 + 1));
        else
            out.push_back(2 * s(n / 2 + 1));
    }
    return out;
}

RationalGF s_profile_gf(unsigned k)
{
    // Constant from length 2k-1 on.
    const std::size_t m = 2 * k;
    auto prof = s_profile(k, m);
    std::vector<BigInt> head(m, 0);
    for (std::size_t n = 1; n < m; ++n)
        head[n] = prof[n - 1];
    RationalGF body{IntPolynomial(head)};
    RationalGF tail(IntPolynomial::monomial(prof[m - 1], m), poly("1-z"));
    return body + tail;
}

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> c = build_catalog();
    return c;
}

const CatalogEntry& entry(const std::string& name)
{
    for (const auto& e : catalog())
        if (e.name == name)
            return e;
    throw ValidationError("unknown catalog entry '" + name + "'");
}

double printed_precision(const std::string& decimal)
{
    auto dot = decimal.find('.');
    int digits = dot == std::string::npos ? 0 : static_cast<int>(decimal.size() - dot - 1);
    return std::pow(10.0, -digits);
}

bool VerifyReport::passed() const
{
    for (const auto& c : checks)
        if (!c.passed)
            return false;
    return true;
}

std::string VerifyReport::to_json() const
{
    nlohmann::ordered_json j;
    j["name"] = name;
    j["expected"] = expected;
    j["computed"] = computed;
    j["delta"] = delta;
    j["certification"] = pinclass::to_string(certification);
    j["passed"] = passed();
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : checks)
        arr.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = arr;
    return j.dump();
}

VerifyReport verify(const CatalogEntry& e, const VerifyOptions& opts)
{
    VerifyReport r;
    r.name = e.name;
    r.expected = e.expected;
    r.certification = e.certification;
    const double expected = std::stod(e.expected);

    const double root = largest_real_root(e.polynomial, opts.tol);
    r.computed = root;
    if (e.class_gf) {
        auto g = growth_rate(*e.class_gf, opts.tol);
        r.computed = g.value;
        bool agree = g.exponential && std::abs(g.value - root) <= 2e-4;
        r.checks.push_back({"growth_equals_polynomial_root", agree,
                            "gr=" + std::to_string(g.value) + " root=" + std::to_string(root)});
    }
    r.delta = std::abs(r.computed - expected);
    r.checks.push_back({"matches_printed_decimal", r.delta < printed_precision(e.expected),
                        "delta=" + std::to_string(r.delta)});

    if (e.class_gf && e.certification != Certification::ExpectedValueOnly) {
        auto s = e.class_gf->series(30);
        bool nonneg = true;
        for (const auto& c : s)
            nonneg = nonneg && c >= 0;
        r.checks.push_back({"nonnegative_coefficients", nonneg, "n<=30"});
    }

    if (e.certification == Certification::FullyCertified) {
        const WordSpec w = parse_pin_spec(*e.word);
        auto en = enumerate_class(w, opts.n_max, opts.enumeration);
        Counts series = to_counts(e.class_gf->series(opts.n_max), opts.n_max);
        r.checks.push_back({"brute_force_counts_equal_series", en.counts == series,
                            "brute=" + render(en.counts) + " series=" + render(series)});
        Counts brute_indec(opts.n_max, 0);
        for (const auto& g : en.patterns)
            if (is_box_indecomposable(g))
                ++brute_indec[g.size() - 1];
        Counts gf_indec = to_counts(e.indec_gf->series(opts.n_max), opts.n_max);
        r.checks.push_back({"brute_force_indecomposables_equal_indec_gf", brute_indec == gf_indec,
                            "brute=" + render(brute_indec) + " gf=" + render(gf_indec)});
        if (phi_preimage(w)) {
            Counts formula = indecomposable_counts_formula(w, opts.n_max);
            r.checks.push_back({"factor_formula_equals_brute_force", formula == brute_indec,
                                "formula=" + render(formula)});
        }
        r.checks.push_back({"closure_of_indec_gf_is_class_gf", box_closure_gf(*e.indec_gf) == *e.class_gf,
                            e.class_gf->to_string()});
    }
    if (e.name == "mu") {
        const WordSpec w = parse_pin_spec(*e.word);
        Counts interior = interior_indecomposable_counts(w, 20);
        Counts star = to_counts(g_star().series(20), 20);
        r.checks.push_back({"sturmian_interior_indecomposables_equal_g_star", interior == star, render(interior)});
    }
    return r;
}

std::vector<Section4Row> section4_table(double tol)
{
    const char* expected[] = {"3.06918", "3.24796", "3.27963", "3.28248", "3.28274", "3.28277"};
    std::vector<Section4Row> rows;
    for (unsigned ell = 1; ell <= 6; ++ell) {
        Section4Row row;
        row.ell = ell;
        RationalGF g = g_one_ell(ell);
        auto s = g.series(2 * ell + 2);
        row.sequence.assign(s.begin() + 1, s.end());
        row.growth = growth_rate(box_closure_gf(g), tol).value;
        row.expected = expected[ell - 1];
        rows.push_back(std::move(row));
    }
    return rows;
}

MuCertificate mu_lower_bound_certificate(unsigned k, double tol)
{
    if (k < 2)
        throw ValidationError("certificate needs k >= 2");
    MuCertificate c;
    c.k = k;
    const std::size_t span = 4 * k + 10;
    auto prof = s_profile(k, span);
    auto matches = [&](const RationalGF& g) {
        auto s = g.series(span);
        for (std::size_t n = 1; n <= span; ++n)
            if (s[n] != prof[n - 1])
                return false;
        return true;
    };
    if (k >= 4) {
        c.gf = g_s(k);
        c.profile_matches = matches(c.gf);
        // (g_s - g_star)(1-z)^2 must be exactly z^{2k-2}(1-2z^2).
        RationalGF diff = c.gf - g_star();
        RationalGF expected(zpow(2 * k - 2) * poly("1-2z^2"), poly("(1-z)^2"));
        c.identity_holds = diff == expected;
        IntPolynomial factor = poly("1-2z^2");
        c.nonnegative = factor.sign_at(0) > 0 && factor.sign_at(Rational(1, 2)) > 0 &&
                        count_real_roots(factor, 0, Rational(1, 2)) == 0;
    } else {
        c.gf = s_profile_gf(k);
        c.profile_matches = matches(c.gf);
        if (k == 2)
            c.profile_matches = c.profile_matches && c.gf == gf("(2z+4z^3+2z^4)/(1-z)");
        c.identity_holds = true;
        c.nonnegative = true;
    }
    c.root = smallest_positive_solution_of_g_eq_1(c.gf, tol);
    c.bound = 1.0 / c.root;
    const double inv_mu = one_over_mu(tol);
    c.passed = c.profile_matches && c.identity_holds && c.nonnegative && c.root <= inv_mu + tol;
    return c;
}

std::vector<GkRoot> gk_family(unsigned k_max, double tol)
{
    if (k_max < 2)
        throw ValidationError("gk_family needs k_max >= 2");
    std::vector<GkRoot> out;
    for (unsigned k = 2; k <= k_max; ++k)
        out.push_back({k, smallest_positive_solution_of_g_eq_1(g_k(k), tol)});
    return out;
}

std::vector<BoundCheck> three_quadrant_bound_check(double tol)
{
    std::vector<BoundCheck> out;
    auto make = [&](std::string name, const RationalGF& ga, const RationalGF& g1, const RationalGF& g2,
                    const RationalGF& g3, const char* total, const char* displayed, std::string expected) {
        BoundCheck b;
        b.name = std::move(name);
        b.gf = cartier_foata(ga, g1, g2, g3, RationalGF());
        b.displayed_gf = displayed;
        b.gf_matches = b.gf == gf(displayed) && (ga + g1 + g2 + g3) == gf(total);
        b.expected = std::move(expected);
        b.computed = growth_rate(b.gf, tol).value;
        b.passed = b.gf_matches && std::abs(b.computed - std::stod(b.expected)) < printed_precision(b.expected);
        out.push_back(std::move(b));
    };
    make("two_point_quadrant2", gf("2z^3"), gf("z+z^2"), gf("z+z^2"), gf("z+z^2"), "3z+3z^2+2z^3",
         "1/(1-3z-2z^2+z^4)", "3.542");
    make("lambda", gf("2z^3+z^5"), gf("z+z^2"), gf("z"), gf("z+z^2"), "3z+2z^2+2z^3+z^5", "1/(1-3z-z^2+z^4-z^5)",
         "3.28481");
    return out;
}

std::vector<BoundCheck> four_quadrant_bound_check(double tol)
{
    std::vector<BoundCheck> out;
    auto make = [&](std::string name, const RationalGF& f, const char* displayed, std::string expected) {
        BoundCheck b;
        b.name = std::move(name);
        b.gf = f;
        b.displayed_gf = displayed;
        b.gf_matches = f.den() == gf(displayed).den();
        b.expected = std::move(expected);
        b.computed = growth_rate(f, tol).value;
        b.passed = b.gf_matches && std::abs(b.computed - std::stod(b.expected)) < printed_precision(b.expected);
        out.push_back(std::move(b));
    };
    RationalGF z = gf("z");
    make("x_class", cartier_foata(RationalGF(), z, z, z, z), "1/(1-4z+2z^2)", "3.41421");
    make("four_quadrant_helper", cartier_foata(RationalGF(), gf("z+z^2"), z, z, z), "1/(1-4z+z^2+z^3)", "3.69109");
    return out;
}

} // namespace pinclass
