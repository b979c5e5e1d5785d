#include "pinclass/cli.hpp"

#include "pinclass/catalog.hpp"
#include "pinclass/enumeration.hpp"
#include "pinclass/error.hpp"
#include "pinclass/genfun.hpp"
#include "pinclass/gridded.hpp"
#include "pinclass/pinwords.hpp"
#include "pinclass/words.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace pinclass {

namespace {

using json = nlohmann::ordered_json;

bool is_pin_spec(const std::string& s) { return s.rfind("pin:", 0) == 0 || s.rfind("phi(", 0) == 0; }

WordSpec any_spec(const std::string& s) { return is_pin_spec(s) ? parse_pin_spec(s) : parse_word_spec(s); }

int digits_for(double tol) { return std::max(1, static_cast<int>(std::ceil(-std::log10(tol)))); }

std::string fixed(double v, int digits)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

std::string tol_text(double tol)
{
    std::ostringstream os;
    os << tol;
    return os.str();
}

std::size_t default_budget()
{
    if (const char* env = std::getenv("PINCLASS_BUDGET")) {
        try {
            return static_cast<std::size_t>(std::stoul(env));
        } catch (const std::exception&) {
            throw ValidationError(std::string("PINCLASS_BUDGET is not a number: '") + env + "'");
        }
    }
    return kDefaultPrefixBudget;
}

void print_counts(std::ostream& out, const Counts& c, Provenance p, const std::string& format)
{
    if (format == "json") {
        write_json_lines(out, c, p);
    } else if (format == "csv") {
        out << "length,count,provenance\n";
        for (std::size_t i = 0; i < c.size(); ++i)
            out << i + 1 << ',' << c[i] << ',' << to_string(p) << '\n';
    } else {
        for (std::size_t i = 0; i < c.size(); ++i)
            out << i + 1 << ' ' << c[i] << '\n';
    }
}

std::string json_number(double v, int digits)
{
    return fixed(v, digits);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Pin classes: words, enumeration, generating functions and growth rates", "pinclass"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string format = "text";
    double tol = 1e-9;
    std::size_t max_len = 8;
    std::optional<std::size_t> prefix_budget;
    std::optional<std::size_t> prefix_length;

    auto add_format = [&](CLI::App* c, std::vector<std::string> allowed) {
        c->add_option("--format", format, "Output format")->check(CLI::IsMember(allowed));
    };
    auto add_tol = [&](CLI::App* c) { c->add_option("--tol", tol, "Root tolerance")->check(CLI::PositiveNumber); };
    auto add_len = [&](CLI::App* c) { c->add_option("--max-len", max_len, "Largest length"); };
    auto add_budget = [&](CLI::App* c) {
        c->add_option("--prefix-budget", prefix_budget, "Most pins to enumerate over");
        c->add_option("--prefix-length", prefix_length, "Count on exactly this many pins");
    };

    std::string word, spec, poly_text, gf_text, weights_text, closure_text, name;
    bool recurrent = false;
    std::string method = "brute";
    unsigned k = 2;

    auto* validate = app.add_subcommand("validate", "Check a pin word against the memory automaton");
    validate->add_option("word", word, "Comma-separated tokens such as ru,ur,r")->required();
    add_format(validate, {"text", "json"});

    bool to_phi = false, preimage = false, decompose = false, profile = false, periodicity = false;
    std::string symmetry = "id", pattern, sum_with, grid_values;

    auto* convert = app.add_subcommand("convert", "Convert between basic and memory encodings");
    convert->add_option("word", word, "basic:<quadrant><moves> or memory tokens")->required();
    auto* phi_flag = convert->add_flag("--phi", to_phi, "Apply phi to a binary word spec");
    convert->add_flag("--preimage", preimage, "Binary preimage of a pin word spec under phi")->excludes(phi_flag);

    auto* perm = app.add_subcommand("perm", "Gridded permutation of a finite pin word");
    auto* perm_word = perm->add_option("word", word, "pin:lit:<tokens>, basic:<...> or tokens");
    perm->add_option("--symmetry", symmetry, "Apply a symmetry (id, t, x, y, tx, ...) to the word first");
    perm->add_flag("--decompose", decompose, "Also print the box-sum factors");
    perm->add_option("--contains", pattern, "Gridded pattern to look for, e.g. 21|x=1,y=0");
    perm->add_option("--box-sum", sum_with, "Gridded permutation to insert at the origin");
    add_format(perm, {"text", "json"});

    perm->add_option("--griddings", grid_values, "List all griddings of a one-line permutation instead")
        ->excludes(perm_word);

    auto* plot = app.add_subcommand("plot", "SVG drawing of a finite pin word");
    plot->add_option("word", word, "Finite pin word")->required();
    add_format(plot, {"svg"});

    auto* factors_cmd = app.add_subcommand("factors", "List the factors of one length");
    factors_cmd->add_option("spec", spec, "Word spec")->required();
    factors_cmd->add_option("--len", max_len, "Factor length")->required();
    factors_cmd->add_flag("--recurrent", recurrent, "Recurrent factors only");

    auto* complexity = app.add_subcommand("complexity", "Factor or recurrent complexity");
    complexity->add_option("spec", spec, "Word spec")->required();
    complexity->add_flag("--recurrent", recurrent, "Recurrent complexity");
    complexity->add_flag("--periodicity", periodicity, "Print the periodicity class instead");
    add_len(complexity);
    add_format(complexity, {"text", "json", "csv"});

    auto* count = app.add_subcommand("count", "Gridded class sizes by brute force");
    count->add_option("spec", spec, "Pin word spec")->required();
    count->add_flag("--profile", profile, "Counts, indecomposables and interior indecomposables as JSON");
    add_len(count);
    add_budget(count);
    add_format(count, {"text", "json", "csv"});

    auto* indec = app.add_subcommand("indec", "Box-indecomposable counts");
    indec->add_option("spec", spec, "Pin word spec")->required();
    indec->add_option("--method", method, "brute, formula or interior")
        ->check(CLI::IsMember({"brute", "formula", "interior"}));
    add_len(indec);
    add_budget(indec);
    add_format(indec, {"text", "json", "csv"});

    auto* gf_cmd = app.add_subcommand("gf", "Reduce a generating function and expand its series");
    auto* gf_opt = gf_cmd->add_option("gf", gf_text, "(<poly>)/(<poly>)");
    auto* weights_opt =
        gf_cmd->add_option("--weights", weights_text, "Cartier-Foata weights ga;g1;g2;g3;g4");
    auto* closure_opt = gf_cmd->add_option("--closure", closure_text, "Indecomposable GF g, giving 1/(1-g)");
    gf_opt->excludes(weights_opt)->excludes(closure_opt);
    weights_opt->excludes(closure_opt);
    add_len(gf_cmd);
    add_format(gf_cmd, {"text", "json"});

    auto* growth = app.add_subcommand("growth", "Growth rate of a GF or largest real root of a polynomial");
    auto* gpoly = growth->add_option("--poly", poly_text, "Polynomial");
    auto* ggf = growth->add_option("--gf", gf_text, "Generating function");
    gpoly->excludes(ggf);
    add_tol(growth);
    add_format(growth, {"text", "json"});

    auto* root = app.add_subcommand("root", "Largest real root, or smallest positive solution of g = 1");
    auto* rpoly = root->add_option("--poly", poly_text, "Polynomial");
    auto* rg = root->add_option("--g-eq-1", gf_text, "Generating function g");
    rpoly->excludes(rg);
    add_tol(root);
    add_format(root, {"text", "json"});

    auto* cat = app.add_subcommand("catalog", "Named classes and bounds");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "List entries");
    auto* cat_show = cat->add_subcommand("show", "Show one entry");
    cat_show->add_option("name", name)->required();
    auto* cat_verify = cat->add_subcommand("verify", "Verify one entry or all");
    cat_verify->add_option("name", name)->required();
    add_len(cat_verify);
    cat_verify->add_option("--prefix-budget", prefix_budget, "Most pins to enumerate over");
    auto* cat_cert = cat->add_subcommand("certificate", "Lower-bound certificate at mu for one k");
    cat_cert->add_option("k", k)->required();
    auto* cat_gk = cat->add_subcommand("gk", "Roots of g_k = 1 for k = 2..k_max");
    cat_gk->add_option("k_max", k)->required();
    auto* cat_bounds = cat->add_subcommand("bounds", "Three- and four-quadrant bound constructions");
    for (auto* c : {cat_cert, cat_gk, cat_bounds})
        add_tol(c);

    auto* table = app.add_subcommand("table", "Reproduce a table");
    std::string table_name;
    table->add_option("name", table_name)->required()->check(CLI::IsMember({"section4"}));
    add_tol(table);
    add_format(table, {"text", "json", "csv"});

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        EnumerationOptions eopts;
        eopts.prefix_budget = prefix_budget.value_or(default_budget());
        eopts.prefix_length = prefix_length;

        if (*validate) {
            auto v = validate_memory(split_tokens(word));
            if (format == "json") {
                json j;
                j["accepted"] = v.accepted();
                if (v.accepted())
                    j["word"] = v.word->to_string();
                else
                    j["rejection"] = {{"first", v.rejection->first}, {"second", v.rejection->second},
                                      {"reason", v.rejection->reason}};
                out << j.dump() << '\n';
            } else if (v.accepted()) {
                out << "accepted " << v.word->to_string() << '\n';
            } else {
                out << "rejected at (" << v.rejection->first << "," << v.rejection->second
                    << "): " << v.rejection->reason << '\n';
            }
            return v.accepted() ? 0 : 2;
        }
        if (*convert) {
            if (to_phi) {
                out << pin_spec_to_string(phi(parse_word_spec(word))) << '\n';
                return 0;
            }
            if (preimage) {
                auto b = phi_preimage(parse_pin_spec(word));
                if (!b)
                    throw ValidationError("'" + word + "' is not a phi image");
                out << to_string(*b) << '\n';
                return 0;
            }
            std::string t = word;
            bool basic = t.rfind("basic:", 0) == 0 || (!t.empty() && t[0] >= '1' && t[0] <= '4');
            if (basic)
                out << basic_to_memory(parse_basic_word(t)).to_string() << '\n';
            else
                out << "basic:" << memory_to_basic(parse_pin_word(t)).to_string() << '\n';
            return 0;
        }
        if (*perm && !grid_values.empty()) {
            for (const auto& g : all_griddings(GriddedPermutation::parse(grid_values + "|x=0,y=0").values))
                out << g.to_string() << '\n';
            return 0;
        }
        if (*perm) {
            if (word.empty())
                throw ValidationError("perm needs a pin word or --griddings");
            auto g = build_pin_permutation(symmetry_transform(parse_pin_word(word), Symmetry::parse(symmetry)));
            if (!sum_with.empty())
                g = box_sum(GriddedPermutation::parse(sum_with), g);
            std::vector<std::string> parts;
            if (decompose)
                for (const auto& f : box_decompose(g))
                    parts.push_back(f.to_string());
            std::optional<bool> found;
            if (!pattern.empty())
                found = contains(g, GriddedPermutation::parse(pattern));
            if (format == "json") {
                json j;
                j["perm"] = g.to_string();
                j["values"] = g.values;
                j["cut_x"] = g.cut_x;
                j["cut_y"] = g.cut_y;
                j["indecomposable"] = is_box_indecomposable(g);
                if (decompose)
                    j["factors"] = parts;
                if (found)
                    j["contains"] = *found;
                out << j.dump() << '\n';
            } else {
                out << g.to_string() << '\n';
                for (const auto& f : parts)
                    out << "  " << f << '\n';
                if (found)
                    out << (*found ? "contains " : "avoids ") << pattern << '\n';
            }
            return 0;
        }
        if (*plot) {
            out << plot_svg(parse_pin_word(word));
            return 0;
        }
        if (*factors_cmd) {
            WordSpec w = any_spec(spec);
            auto fs = recurrent ? recurrent_factors(w, max_len) : factors(w, max_len);
            for (const auto& f : fs)
                out << w.alphabet().render(f) << '\n';
            return 0;
        }
        if (*complexity) {
            WordSpec w = any_spec(spec);
            if (periodicity) {
                auto p = classify_periodicity(w);
                const char* kind = p.kind == PeriodicityKind::Periodic           ? "periodic"
                                   : p.kind == PeriodicityKind::EventuallyPeriodic ? "eventually_periodic"
                                                                                  : "aperiodic";
                if (format == "json")
                    out << json{{"kind", kind}, {"period", p.period}, {"preperiod", p.preperiod}}.dump() << '\n';
                else
                    out << kind << " period=" << p.period << " preperiod=" << p.preperiod << '\n';
                return 0;
            }
            if (format == "csv")
                out << "n," << (recurrent ? "q" : "p") << '\n';
            for (std::size_t n = 1; n <= max_len; ++n) {
                auto c = recurrent ? recurrent_complexity(w, n) : factor_complexity(w, n);
                if (format == "json")
                    out << json{{"n", n}, {recurrent ? "q" : "p", c}}.dump() << '\n';
                else if (format == "csv")
                    out << n << ',' << c << '\n';
                else
                    out << n << ' ' << c << '\n';
            }
            return 0;
        }
        if (*count && profile) {
            auto p = class_profile(parse_pin_spec(spec), max_len, eopts);
            json j;
            j["word"] = p.word;
            j["prefix_length"] = p.prefix_length;
            j["counts"] = p.counts;
            j["indec_counts"] = p.indec_counts;
            j["indec_provenance"] = to_string(p.indec_provenance);
            if (!p.interior_indec_counts.empty())
                j["interior_indec_counts"] = p.interior_indec_counts;
            out << j.dump() << '\n';
            return 0;
        }
        if (*count) {
            print_counts(out, class_counts(parse_pin_spec(spec), max_len, eopts), Provenance::BruteForce, format);
            return 0;
        }
        if (*indec) {
            WordSpec w = parse_pin_spec(spec);
            if (method == "brute")
                print_counts(out, indecomposable_counts_brute_force(w, max_len, eopts), Provenance::BruteForce, format);
            else if (method == "formula")
                print_counts(out, indecomposable_counts_formula(w, max_len), Provenance::FactorFormula, format);
            else
                print_counts(out, interior_indecomposable_counts(w, max_len), Provenance::FactorFormula, format);
            return 0;
        }
        if (*gf_cmd) {
            RationalGF f;
            if (!weights_text.empty()) {
                std::vector<RationalGF> ws;
                std::stringstream ss(weights_text);
                std::string item;
                while (std::getline(ss, item, ';'))
                    ws.push_back(item.empty() ? RationalGF() : RationalGF::parse(item));
                if (ws.size() != 5)
                    throw ValidationError("--weights needs five ';'-separated weights ga;g1;g2;g3;g4");
                f = cartier_foata(ws[0], ws[1], ws[2], ws[3], ws[4]);
            } else if (!closure_text.empty()) {
                f = box_closure_gf(RationalGF::parse(closure_text));
            } else if (!gf_text.empty()) {
                f = RationalGF::parse(gf_text);
            } else {
                throw ValidationError("gf needs a generating function, --weights or --closure");
            }
            auto s = f.series(max_len);
            if (format == "json") {
                std::vector<std::string> cs;
                for (const auto& c : s)
                    cs.push_back(c.str());
                out << json{{"gf", f.to_string()}, {"series", cs}}.dump() << '\n';
            } else {
                out << f.to_string() << '\n';
                for (std::size_t i = 0; i < s.size(); ++i)
                    out << (i ? " " : "") << s[i];
                out << '\n';
            }
            return 0;
        }
        if (*growth) {
            double v;
            bool exponential = true;
            if (!poly_text.empty()) {
                v = largest_real_root(IntPolynomial::parse(poly_text), tol);
            } else if (!gf_text.empty()) {
                auto g = growth_rate(RationalGF::parse(gf_text), tol);
                v = g.value;
                exponential = g.exponential;
            } else {
                throw ValidationError("growth needs --poly or --gf");
            }
            const int d = digits_for(tol);
            if (format == "json") {
                out << "{\"growth\":" << json_number(v, d) << ",\"tol\":" << tol_text(tol)
                    << ",\"exponential\":" << (exponential ? "true" : "false") << "}\n";
            } else if (!exponential) {
                out << "subexponential (growth rate at most 1)\n";
            } else {
                out << fixed(v, d) << " +/- " << tol_text(tol) << '\n';
            }
            return 0;
        }
        if (*root) {
            double v;
            if (!poly_text.empty())
                v = largest_real_root(IntPolynomial::parse(poly_text), tol);
            else if (!gf_text.empty())
                v = smallest_positive_solution_of_g_eq_1(RationalGF::parse(gf_text), tol);
            else
                throw ValidationError("root needs --poly or --g-eq-1");
            const int d = digits_for(tol);
            if (format == "json")
                out << "{\"root\":" << json_number(v, d) << ",\"tol\":" << tol_text(tol) << "}\n";
            else
                out << fixed(v, d) << " +/- " << tol_text(tol) << '\n';
            return 0;
        }
        if (*cat) {
            if (*cat_list) {
                for (const auto& e : catalog())
                    out << e.name << ' ' << e.expected << ' ' << to_string(e.certification) << '\n';
                return 0;
            }
            if (*cat_show) {
                const auto& e = entry(name);
                json j;
                j["name"] = e.name;
                j["description"] = e.description;
                if (e.word)
                    j["word"] = *e.word;
                if (e.indec_gf)
                    j["indec_gf"] = e.indec_gf->to_string();
                if (e.class_gf)
                    j["class_gf"] = e.class_gf->to_string();
                j["polynomial"] = e.polynomial.to_string();
                j["expected"] = e.expected;
                j["certification"] = to_string(e.certification);
                out << j.dump() << '\n';
                return 0;
            }
            if (*cat_verify) {
                VerifyOptions vo;
                vo.n_max = max_len;
                if (prefix_budget)
                    vo.enumeration.prefix_budget = *prefix_budget;
                if (name == "all")
                    for (const auto& e : catalog())
                        out << verify(e, vo).to_json() << '\n';
                else
                    out << verify(entry(name), vo).to_json() << '\n';
                return 0;
            }
            if (*cat_cert) {
                auto c = mu_lower_bound_certificate(k, tol);
                json j;
                j["k"] = c.k;
                j["gf"] = c.gf.to_string();
                j["profile_matches"] = c.profile_matches;
                j["identity_holds"] = c.identity_holds;
                j["nonnegative"] = c.nonnegative;
                j["root"] = c.root;
                j["bound"] = c.bound;
                j["passed"] = c.passed;
                out << j.dump() << '\n';
                return 0;
            }
            if (*cat_gk) {
                for (const auto& r : gk_family(k, tol))
                    out << r.k << ' ' << fixed(r.root, digits_for(tol)) << '\n';
                return 0;
            }
            if (*cat_bounds) {
                auto all = three_quadrant_bound_check(tol);
                for (auto& b : four_quadrant_bound_check(tol))
                    all.push_back(b);
                for (const auto& b : all) {
                    json j;
                    j["name"] = b.name;
                    j["gf"] = b.gf.to_string();
                    j["gf_matches"] = b.gf_matches;
                    j["expected"] = b.expected;
                    j["computed"] = b.computed;
                    j["passed"] = b.passed;
                    out << j.dump() << '\n';
                }
                return 0;
            }
        }
        if (*table) {
            auto rows = section4_table(tol);
            auto seq = [](const Section4Row& r) {
                std::string s;
                for (const auto& x : r.sequence)
                    s += (s.empty() ? "" : ",") + x.str();
                return s;
            };
            if (format == "csv") {
                out << "ell,sequence,growth,printed\n";
                for (const auto& r : rows)
                    out << r.ell << ",\"" << seq(r) << "\"," << fixed(r.growth, 5) << ',' << r.expected << '\n';
            } else if (format == "json") {
                for (const auto& r : rows)
                    out << "{\"ell\":" << r.ell << ",\"sequence\":\"" << seq(r) << "\",\"growth\":" << fixed(r.growth, 9)
                        << ",\"printed\":\"" << r.expected << "\"}\n";
            } else {
                for (const auto& r : rows)
                    out << r.ell << "  " << std::left << std::setw(40) << seq(r) << fixed(r.growth, 5) << '\n';
            }
            return 0;
        }
    } catch (const BudgetError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const UnsupportedError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << app.help();
    return 2;
}

} // namespace pinclass
