// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "oracle.hpp"

#include "pinclass/catalog.hpp"
#include "pinclass/cli.hpp"
#include "pinclass/enumeration.hpp"
#include "pinclass/error.hpp"
#include "pinclass/genfun.hpp"
#include "pinclass/gridded.hpp"
#include "pinclass/pinwords.hpp"
#include "pinclass/words.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace pinclass;

namespace {

struct Failure {
    std::string what;
};

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Failure{what};
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> to_doubles(const IntPolynomial& p)
{
    std::vector<double> out;
    for (int i = 0; i <= p.degree(); ++i)
        out.push_back(p.coeff(i).convert_to<double>());
    return out;
}

template <class A, class B>
bool same_numbers(const A& a, const B& b)
{
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (static_cast<long long>(a[i]) != static_cast<long long>(b[i]))
            return false;
    return true;
}

template <class V>
std::string join(const V& v)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

// Counts of lengths 1..n read off a series that starts at z^0.
std::vector<long long> from_length_one(const std::vector<long long>& s)
{
    return {s.begin() + 1, s.end()};
}

IntPolynomial nu_polynomial(unsigned ell)
{
    if (ell == 1)
        return IntPolynomial::parse("z^4-3z^3-2");
    if (ell == 2)
        return IntPolynomial::parse("z^4-3z^3-2z-2");
    const unsigned e = 2 * ell;
    std::ostringstream os;
    os << "z^" << e << "-4z^" << e - 1 << "+3z^" << e - 2 << "-2z^" << e - 3 << "-z^" << e - 4 << "+2z^" << e - 5
       << "+1";
    return IntPolynomial::parse(os.str());
}

std::string cli(const std::vector<std::string>& args, int* code = nullptr)
{
    std::ostringstream out, err;
    int c = run(args, out, err);
    if (code)
        *code = c;
    return out.str();
}

// 1
void growth_rates()
{
    struct Row {
        std::string name;
        IntPolynomial poly;
        double printed;
    };
    std::vector<Row> rows{
        {"kappa", IntPolynomial::parse("z^3-2z^2-1"), 2.20557},
        {"nu_1", nu_polynomial(1), 3.06918},
        {"nu_2", nu_polynomial(2), 3.24796},
        {"nu_3", nu_polynomial(3), 3.27963},
        {"nu_4", nu_polynomial(4), 3.28248},
        {"nu_5", nu_polynomial(5), 3.28274},
        {"nu_6", nu_polynomial(6), 3.28277},
        {"nu_2_2", IntPolynomial::parse("z^4-3z^3-4z-2"), 3.39752},
        {"mu", IntPolynomial::parse("z^5-4z^4+3z^3-2z^2-z+2"), 3.28277},
        {"lambda", IntPolynomial::parse("z^5-3z^4-z^3+z-1"), 3.28481},
        {"widdershins", IntPolynomial::parse("z^5-5z^4+6z^3-2z^2-z-3"), 3.48806},
        {"x_class", IntPolynomial::parse("z^2-4z+2"), 3.41421},
        {"three_quadrant_min", IntPolynomial::parse("z^5-4z^4+2z^3+z^2-2z+1"), 3.36132},
    };
    for (const auto& r : rows) {
        auto t0 = std::chrono::steady_clock::now();
        double v = largest_real_root(r.poly, 1e-9);
        const auto& e = entry(r.name);
        double from_gf = e.class_gf ? growth_rate(*e.class_gf, 1e-9).value : largest_real_root(e.polynomial, 1e-9);
        double t = seconds_since(t0);
        double ref = oracle::largest_root(to_doubles(r.poly));
        require(std::abs(v - ref) < 1e-7, r.name + ": root " + std::to_string(v) + " vs bisection " + std::to_string(ref));
        require(std::abs(v - r.printed) <= 1e-4, r.name + ": " + std::to_string(v) + " vs printed " + std::to_string(r.printed));
        require(std::abs(from_gf - v) < 1e-7, r.name + ": catalog growth " + std::to_string(from_gf));
        require(t < 1.0, r.name + ": took " + std::to_string(t) + " s");
    }
    require(std::abs(largest_real_root(IntPolynomial::parse("z^2-4z+2")) - (2 + std::sqrt(2.0))) < 1e-9, "2+sqrt2");
}

// 2
void one_quadrant_oracle()
{
    auto t0 = std::chrono::steady_clock::now();
    auto counts = class_counts(parse_pin_spec("pin:per:;ru,ur"), 10);
    double t = seconds_since(t0);
    auto expect = from_length_one(oracle::series({1, -1}, {1, -2, 0, -1}, 10));
    require(same_numbers(counts, expect), "counts " + join(counts) + " vs series " + join(expect));
    require(t < 60, "took " + std::to_string(t) + " s");
}

// 3
void two_quadrant_oracle()
{
    EnumerationOptions big{400, std::nullopt};
    auto counts = class_counts(parse_pin_spec("phi(per:;10)"), 8, big);
    auto expect = from_length_one(oracle::series({1, -1}, {1, -3, 0, 0, -2}, 8));
    require(same_numbers(counts, expect), "phi((10)^inf) counts " + join(counts) + " vs " + join(expect));

    const std::map<unsigned, std::vector<long long>> table{
        {1, {2, 2, 2, 4}}, {2, {2, 2, 4, 6, 6}}, {3, {2, 2, 4, 7, 8, 8}}, {4, {2, 2, 4, 7, 8, 9, 10, 10}}};
    for (const auto& [ell, row] : table) {
        std::vector<long long> want = row;
        while (want.size() < 10)
            want.push_back(want.back());
        auto spec = parse_pin_spec("phi(per:;0" + std::string(ell, '1') + ")");
        auto brute = indecomposable_counts_brute_force(spec, 10, big);
        auto formula = indecomposable_counts_formula(spec, 10);
        require(same_numbers(brute, want), "w_{1," + std::to_string(ell) + "} brute " + join(brute));
        require(brute == formula, "w_{1," + std::to_string(ell) + "} formula " + join(formula));
    }
}

bool quadrant_commutes(char a, char b) { return (a == '1' && b == '3') || (a == '3' && b == '1') || (a == '2' && b == '4') || (a == '4' && b == '2'); }

// 4
void cartier_foata_counts()
{
    const auto z = RationalGF::parse("z");
    const auto zero = RationalGF::parse("0");
    auto four = cartier_foata(zero, z, z, z, z);
    require(four == RationalGF::parse("1/(1-4z+2z^2)"), "four letters gave " + four.to_string());
    auto traces = oracle::trace_counts("1234", quadrant_commutes, 8);
    auto s = four.series(8);
    require(same_numbers(s, traces), "series " + join(s) + " vs traces " + join(traces));
    require(same_numbers(std::vector<long long>(traces.begin(), traces.begin() + 5), std::vector<long long>{1, 4, 14, 48, 164}),
            "trace counts start " + join(traces));

    auto five = cartier_foata(z, z, z, z, z);
    require(five == RationalGF::parse("1/(1-5z+2z^2)"), "five letters gave " + five.to_string());
    auto traces5 = oracle::trace_counts("12345", quadrant_commutes, 8);
    auto s5 = five.series(8);
    require(same_numbers(s5, traces5), "series " + join(s5) + " vs traces " + join(traces5));
}

// 5
void word_combinatorics()
{
    auto fib = parse_word_spec("sturmian:1");
    const std::string ref = oracle::fibonacci(200);
    require(Alphabet::binary().render(prefix(fib, 200)) == ref, "sturmian:1 is not the Fibonacci word");
    for (std::size_t n = 1; n <= 30; ++n) {
        require(factor_complexity(fib, n) == n + 1, "Fibonacci p(" + std::to_string(n) + ")");
        require(oracle::distinct_factors(oracle::fibonacci(5000), n) == n + 1, "Fibonacci oracle p(" + std::to_string(n) + ")");
    }

    std::mt19937 rng(20261014);
    std::uniform_int_distribution<int> bit(0, 1), plen(0, 4), clen(1, 6);
    for (int sample = 0; sample < 100; ++sample) {
        Word pre(plen(rng)), cyc(clen(rng));
        for (auto& s : pre)
            s = bit(rng);
        for (auto& s : cyc)
            s = bit(rng);
        auto b = WordSpec::periodic(pre, cyc);
        const std::string label = to_string(b);
        for (bool rec : {false, true}) {
            auto c = [&](std::size_t n) { return rec ? recurrent_complexity(b, n) : factor_complexity(b, n); };
            std::vector<std::size_t> p{1};
            for (std::size_t n = 1; n <= 21; ++n)
                p.push_back(c(n));
            for (std::size_t n = 1; n < 21; ++n) {
                require(p[n + 1] >= p[n], label + ": complexity decreases at " + std::to_string(n));
                if (p[n + 1] == p[n])
                    for (std::size_t m = n; m <= 21; ++m)
                        require(p[m] == p[n], label + ": complexity not constant after " + std::to_string(n));
            }
            auto w = phi(b);
            for (std::size_t k = 1; k <= 10; ++k) {
                auto cw = [&](std::size_t n) { return rec ? recurrent_complexity(w, n) : factor_complexity(w, n); };
                require(cw(2 * k) == p[k] + p[k + 1], label + ": transfer at 2k, k=" + std::to_string(k));
                require(cw(2 * k + 1) == 2 * p[k + 1], label + ": transfer at 2k+1, k=" + std::to_string(k));
            }
        }
    }
}

// 6
void mu_constructions()
{
    std::vector<long long> want{2, 2, 4, 7};
    for (long long n = 5; n <= 12; ++n)
        want.push_back(n + 3);
    auto fib_counts = interior_indecomposable_counts(parse_pin_spec("phi(sturmian:1)"), 12);
    require(same_numbers(fib_counts, want), "phi(Fibonacci) interior counts " + join(fib_counts));
    auto bstar_counts = interior_indecomposable_counts(parse_pin_spec("phi(bstar)"), 12);
    require(same_numbers(bstar_counts, want), "phi(b*) interior counts " + join(bstar_counts));

    auto g = g_star();
    auto gs = g.series(12);
    require(same_numbers(std::vector<BigInt>(gs.begin() + 1, gs.end()), want), "g_star series " + join(gs));
    double mu = growth_rate(box_closure_gf(g), 1e-9).value;
    require(std::abs(mu - 3.28277) <= 1e-4, "closure growth " + std::to_string(mu));

    bool differ = false;
    for (std::size_t n = 1; n <= 20 && !differ; ++n)
        differ = factors(parse_word_spec("sturmian:1"), n) != factors(parse_word_spec("sturmian:2"), n);
    require(differ, "directives 1 and 2 share every factor set up to length 20");
}

void accepted_words(std::size_t n, std::vector<PinWord>& out)
{
    std::vector<std::vector<PinLetter>> level;
    for (Symbol s = 0; s < 8; ++s)
        level.push_back({PinLetter::from_symbol(s)});
    for (std::size_t len = 1; len < n; ++len) {
        std::vector<std::vector<PinLetter>> next;
        for (const auto& w : level)
            for (Symbol s = 0; s < 8; ++s) {
                auto v = w;
                v.push_back(PinLetter::from_symbol(s));
                if (validate_memory(v).accepted())
                    next.push_back(std::move(v));
            }
        level = std::move(next);
    }
    for (auto& w : level)
        out.push_back(PinWord::from_letters(std::move(w)));
}

// 7
void structure_properties()
{
    std::size_t words = 0;
    for (std::size_t n = 4; n <= 8; ++n) {
        std::vector<PinWord> all;
        accepted_words(n, all);
        require(all.size() == 8u << (n - 1), "accepted words of length " + std::to_string(n) + ": " + std::to_string(all.size()));
        for (const auto& u : all) {
            auto pi = build_pin_permutation(u);
            for (std::size_t i = 1; i + 1 < n; ++i) {
                std::vector<std::size_t> keep;
                auto pts = pin_points(u);
                std::vector<std::size_t> order(n);
                std::iota(order.begin(), order.end(), 0);
                std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pts[a].x < pts[b].x; });
                for (std::size_t pos = 0; pos < n; ++pos)
                    if (order[pos] != i)
                        keep.push_back(pos);
                auto deleted = pi.restrict(keep);
                auto rhs = box_sum(build_pin_permutation(u.slice(0, i)), build_pin_permutation(u.slice(i + 1, n)));
                require(deleted == rhs, u.to_string() + " minus p_" + std::to_string(i + 1) + ": " + deleted.to_string() +
                                            " vs " + rhs.to_string());
            }
            ++words;
        }
    }

    EnumerationOptions big{400, std::nullopt};
    for (const std::string spec : {"phi(per:;10)", "phi(per:;011)", "phi(per:;0111)", "phi(per:0;01)"}) {
        auto w = parse_pin_spec(spec);
        auto e = enumerate_class(w, 8, big);
        for (std::size_t m = 4; m <= 8; ++m) {
            std::set<GriddedPermutation> indec, images;
            for (const auto& g : e.patterns)
                if (g.size() == m && is_box_indecomposable(g))
                    indec.insert(g);
            auto fs = factors(w, m);
            for (const auto& f : fs)
                images.insert(build_pin_permutation(PinWord::from_symbols(f)));
            require(images.size() == fs.size(), spec + ": two factors of length " + std::to_string(m) + " collide");
            require(images == indec, spec + ": factors and indecomposables differ at length " + std::to_string(m));
        }
    }

    std::vector<GriddedPermutation> small;
    for (int n = 1; n <= 3; ++n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        do
            for (const auto& g : all_griddings(v))
                if (is_box_indecomposable(g))
                    small.push_back(g);
        while (std::next_permutation(v.begin(), v.end()));
    }
    require(!small.empty(), "no short indecomposables");
    for (const auto& s : small)
        for (const auto& t : small) {
            bool equal = box_sum(s, t) == box_sum(t, s);
            auto qs = s.quadrant(), qt = t.quadrant();
            bool opposite = qs && qt && (*qs - *qt == 2 || *qt - *qs == 2);
            require(equal == (s == t || opposite), s.to_string() + " and " + t.to_string());
            require(commute(s, t) == equal, "commute(" + s.to_string() + ", " + t.to_string() + ")");
        }

    std::mt19937 rng(7);
    for (int sample = 0; sample < 60; ++sample) {
        int n = sample % 7;
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 1);
        std::shuffle(v.begin(), v.end(), rng);
        auto gs = all_griddings(v);
        std::set<GriddedPermutation> distinct(gs.begin(), gs.end());
        require(gs.size() == static_cast<std::size_t>((n + 1) * (n + 1)) && distinct.size() == gs.size(),
                "griddings of a length " + std::to_string(n) + " permutation");
    }
}

// 8
void certificates()
{
    for (unsigned k = 2; k <= 8; ++k) {
        auto c = mu_lower_bound_certificate(k);
        require(c.passed && c.profile_matches, "certificate k=" + std::to_string(k));
        if (k >= 4)
            require(c.identity_holds && c.nonnegative, "difference identity k=" + std::to_string(k));
    }
    auto roots = gk_family(8);
    require(roots.size() == 7, "gk_family(8) size");
    const double inv_mu = 1 / oracle::largest_root({2, -1, -2, 3, -4, 1});
    for (std::size_t i = 0; i < roots.size(); ++i) {
        require(roots[i].root < inv_mu, "g_k root not below 1/mu at k=" + std::to_string(roots[i].k));
        if (i > 0)
            require(roots[i].root > roots[i - 1].root, "g_k roots not increasing at k=" + std::to_string(roots[i].k));
    }
}

// 9
void encoding_goldens()
{
    const std::string fig_memory = "ur,lu,ul,ru,dr,rd,dr,ld,ul,lu,dl,rd,ur,ru,dr";
    auto m = basic_to_memory(parse_basic_word("1lurdrdluldrurd"));
    require(m.to_string() == fig_memory, "basic to memory gave " + m.to_string());
    require(memory_to_basic(parse_pin_word(fig_memory)).to_string() == "1lurdrdluldrurd",
            "memory to basic gave " + memory_to_basic(m).to_string());
    auto fig = build_pin_permutation(m);
    require(fig.to_string() == "12,2,5,13,8,11,9,6,10,4,7,15,3,1,14|x=6,y=7", "fifteen-point example plot " + fig.to_string());

    auto ex = parse_pin_word("ru,ur,ru,ur,lu,ul,ru");
    require(build_pin_permutation(ex).to_string() == "4731526|x=2,y=0", "4731526 example");
    require(memory_to_basic(ex).to_string() == "1urulur", "4731526 basic " + memory_to_basic(ex).to_string());
    require(basic_to_memory(parse_basic_word("1urulur")).to_string() == ex.to_string(), "4731526 round trip");

    const std::vector<std::pair<std::vector<std::string>, std::string>> goldens{
        {{"perm", "pin:lit:ru,ur,ru,ur,lu,ul,ru"}, "4731526|x=2,y=0\n"},
        {{"convert", "basic:1lurdrdluldrurd"}, fig_memory + "\n"},
        {{"convert", fig_memory}, "basic:1lurdrdluldrurd\n"},
        {{"growth", "--poly", "z^3-2z^2-1", "--tol", "1e-6"}, "2.205569 +/- 1e-06\n"},
    };
    for (const auto& [args, want] : goldens) {
        int code = -1;
        auto got = cli(args, &code);
        require(code == 0 && got == want, args[0] + " golden: got '" + got + "'");
        require(cli(args) == got, args[0] + " output not stable");
    }
    auto csv = cli({"table", "section4", "--format", "csv"});
    std::istringstream lines(csv);
    std::string line;
    std::getline(lines, line);
    const std::vector<std::string> printed{"3.06918", "3.24796", "3.27963", "3.28248", "3.28274", "3.28277"};
    for (const auto& p : printed) {
        require(static_cast<bool>(std::getline(lines, line)), "section4 csv is short");
        require(line.size() > p.size() && line.substr(line.size() - 2 * p.size() - 1, p.size()) == p,
                "section4 row '" + line + "'");
    }
    require(!std::getline(lines, line), "section4 csv has extra rows");
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void()>>> criteria{
        {"growth-rate reproduction", growth_rates},
        {"one-quadrant oracle equivalence", one_quadrant_oracle},
        {"two-quadrant oracle equivalence", two_quadrant_oracle},
        {"Cartier-Foata trace counts", cartier_foata_counts},
        {"word combinatorics", word_combinatorics},
        {"constructions at mu", mu_constructions},
        {"structure properties", structure_properties},
        {"lower-bound certificates", certificates},
        {"encoding goldens", encoding_goldens},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, fn] = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            fn();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        std::ostringstream time;
        time.precision(2);
        time << std::fixed << seconds_since(t0);
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << name << " (" << time.str() << " s)";
        if (!ok)
            std::cout << " -- " << detail;
        std::cout << '\n';
        failed += !ok;
    }
    return failed ? 1 : 0;
}
