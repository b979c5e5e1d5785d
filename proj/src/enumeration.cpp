#include "pinclass/enumeration.hpp"

#include "pinclass/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <ostream>
#include <unordered_set>

namespace pinclass {

namespace {

struct Pattern {
    std::uint8_t n = 0;
    std::uint8_t cx = 0;
    std::uint8_t cy = 0;
    std::array<std::uint8_t, kMaxPatternLength> v{}; // 0-based values by position

    bool operator==(const Pattern& o) const { return n == o.n && cx == o.cx && cy == o.cy && v == o.v; }

    GriddedPermutation to_gridded() const
    {
        GriddedPermutation g;
        g.cut_x = cx;
        g.cut_y = cy;
        for (int i = 0; i < n; ++i)
            g.values.push_back(v[static_cast<std::size_t>(i)] + 1);
        return g;
    }
};

struct PatternHash {
    std::size_t operator()(const Pattern& p) const
    {
        std::uint64_t h = 1469598103934665603ULL;
        auto mix = [&](std::uint8_t b) { h = (h ^ b) * 1099511628211ULL; };
        mix(p.n);
        mix(p.cx);
        mix(p.cy);
        for (int i = 0; i < p.n; ++i)
            mix(p.v[static_cast<std::size_t>(i)]);
        return static_cast<std::size_t>(h);
    }
};

using Pool = std::unordered_set<Pattern, PatternHash>;

// Adds the next pin to p. From a fresh start the pin is extreme on both axes;
// right after the previous pin it sits just inside that pin on the memory axis.
Pattern extend(const Pattern& p, PinLetter letter, bool after_previous)
{
    const int n = p.n;
    int x = 0, y = 0;
    auto place = [&](Dir d, bool own, int& coord) {
        bool high = d == Dir::R || d == Dir::U;
        if (own || !after_previous)
            coord = high ? n : 0;
        else
            coord = high ? n - 1 : 1;
    };
    if (is_horizontal(letter.direction)) {
        place(letter.direction, true, x);
        place(letter.memory, false, y);
    } else {
        place(letter.direction, true, y);
        place(letter.memory, false, x);
    }
    Pattern q;
    q.n = static_cast<std::uint8_t>(n + 1);
    for (int i = 0, j = 0; j <= n; ++j) {
        if (j == x) {
            q.v[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(y);
            continue;
        }
        std::uint8_t val = p.v[static_cast<std::size_t>(i++)];
        q.v[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(val >= y ? val + 1 : val);
    }
    bool left = letter.direction == Dir::L || letter.memory == Dir::L;
    bool below = letter.direction == Dir::D || letter.memory == Dir::D;
    q.cx = static_cast<std::uint8_t>(p.cx + (left ? 1 : 0));
    q.cy = static_cast<std::uint8_t>(p.cy + (below ? 1 : 0));
    return q;
}

class Grower {
public:
    explicit Grower(std::size_t n_max) : n_max_(n_max)
    {
        if (n_max == 0 || n_max > kMaxPatternLength)
            throw ValidationError("pattern length must be 1.." + std::to_string(kMaxPatternLength));
        fresh_.insert(Pattern{});
    }

    void step(PinLetter letter)
    {
        Pool next_last;
        for (const auto& p : fresh_)
            if (p.n < n_max_)
                next_last.insert(extend(p, letter, false));
        for (const auto& p : last_)
            if (p.n < n_max_)
                next_last.insert(extend(p, letter, true));
        fresh_.insert(last_.begin(), last_.end());
        last_ = std::move(next_last);
    }

    Counts counts() const
    {
        Counts c(n_max_, 0);
        for (const auto& p : fresh_)
            if (p.n > 0)
                ++c[p.n - 1u];
        for (const auto& p : last_)
            if (!fresh_.contains(p))
                ++c[p.n - 1u];
        return c;
    }

    std::vector<GriddedPermutation> patterns() const
    {
        Pool all = fresh_;
        all.insert(last_.begin(), last_.end());
        all.erase(Pattern{});
        std::vector<GriddedPermutation> out;
        out.reserve(all.size());
        for (const auto& p : all)
            out.push_back(p.to_gridded());
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        return out;
    }

private:
    std::size_t n_max_;
    Pool fresh_; // last pin not used
    Pool last_;  // last pin used
};

PinWord pin_prefix(const WordSpec& w, std::size_t length)
{
    if (!(w.alphabet() == pin_alphabet()))
        throw ValidationError("enumeration needs a word over the pin alphabet");
    return PinWord::from_symbols(prefix(w, length));
}

WordSpec binary_preimage(const WordSpec& w)
{
    auto b = phi_preimage(w);
    if (!b)
        throw UnsupportedError("factor formula needs a word of the form phi(b)");
    return *b;
}

Counts formula_counts(std::size_t n_max, const WordSpec& b, bool recurrent)
{
    auto c = [&](std::size_t k) -> std::uint64_t {
        return recurrent ? recurrent_complexity(b, k) : factor_complexity(b, k);
    };
    if (c(1) != 2)
        throw UnsupportedError("factor formula needs a word visiting both quadrants");
    Counts out;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (n <= 2)
            out.push_back(2);
        else if (n == 3)
            out.push_back(2 * c(2) - 2);
        else if (n % 2 == 0)
            out.push_back(c(n / 2) + c(n / 2 + 1));
        else
            out.push_back(2 * c(n / 2 + 1));
    }
    return out;
}

} // namespace

std::string to_string(Provenance p)
{
    return p == Provenance::BruteForce ? "brute_force" : "factor_formula";
}

std::vector<GriddedPermutation> prefix_patterns(const PinWord& w, std::size_t n_max)
{
    Grower g(n_max);
    for (const auto& letter : w.letters())
        g.step(letter);
    return g.patterns();
}

std::set<GriddedPermutation> subset_patterns(const PinWord& w, std::size_t n_max)
{
    if (w.size() > 24)
        throw BudgetError("subset enumeration limited to 24 pins");
    const auto pi = build_pin_permutation(w);
    const std::size_t n = pi.size();
    std::set<GriddedPermutation> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > n_max)
            continue;
        std::vector<std::size_t> pos;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i))
                pos.push_back(i);
        out.insert(pi.restrict(pos));
    }
    return out;
}

Enumeration enumerate_class(const WordSpec& w, std::size_t n_max, const EnumerationOptions& opts)
{
    Enumeration result;
    if (opts.prefix_length) {
        if (*opts.prefix_length > opts.prefix_budget)
            throw BudgetError("prefix of " + std::to_string(*opts.prefix_length) + " pins exceeds the budget of " +
                              std::to_string(opts.prefix_budget));
        Grower g(n_max);
        for (const auto& letter : pin_prefix(w, *opts.prefix_length).letters())
            g.step(letter);
        result.patterns = g.patterns();
        result.counts = g.counts();
        result.prefix_length = *opts.prefix_length;
        return result;
    }
    if (const auto* lit = w.get_if<ExplicitPrefix>()) {
        EnumerationOptions fixed = opts;
        fixed.prefix_length = lit->word.size();
        return enumerate_class(w, n_max, fixed);
    }
    auto ep = eventually_periodic_form(w);
    if (!ep)
        throw UnsupportedError("aperiodic pin word: supply an explicit prefix length");

    const std::size_t u = ep->prefix.size(), p = ep->cycle.size();
    std::size_t mult = n_max + 2;
    for (;;) {
        const std::size_t n0 = u + mult * p;
        if (n0 + p > opts.prefix_budget)
            throw BudgetError("counts not certified within a prefix budget of " + std::to_string(opts.prefix_budget) +
                              " pins (need " + std::to_string(n0 + p) + ")");
        const PinWord pins = pin_prefix(w, n0 + p);
        Grower g(n_max);
        Counts at_n0;
        for (std::size_t i = 0; i < pins.size(); ++i) {
            g.step(pins[i]);
            if (i + 1 == n0)
                at_n0 = g.counts();
        }
        Counts at_end = g.counts();
        if (at_end == at_n0) {
            result.patterns = g.patterns();
            result.counts = std::move(at_end);
            result.prefix_length = n0 + p;
            result.certified = true;
            return result;
        }
        mult *= 2;
    }
}

Counts class_counts(const WordSpec& w, std::size_t n_max, const EnumerationOptions& opts)
{
    return enumerate_class(w, n_max, opts).counts;
}

Counts indecomposable_counts_brute_force(const WordSpec& w, std::size_t n_max, const EnumerationOptions& opts)
{
    Counts c(n_max, 0);
    for (const auto& g : enumerate_class(w, n_max, opts).patterns)
        if (is_box_indecomposable(g))
            ++c[g.size() - 1];
    return c;
}

Counts indecomposable_counts_formula(const WordSpec& w, std::size_t n_max)
{
    return formula_counts(n_max, binary_preimage(w), false);
}

Counts interior_indecomposable_counts(const WordSpec& w, std::size_t n_max)
{
    return formula_counts(n_max, binary_preimage(w), true);
}

ClassProfile class_profile(const WordSpec& w, std::size_t n_max, const EnumerationOptions& opts)
{
    ClassProfile prof;
    prof.word = pin_spec_to_string(w);
    auto e = enumerate_class(w, n_max, opts);
    prof.counts = e.counts;
    prof.prefix_length = e.prefix_length;
    prof.indec_counts.assign(n_max, 0);
    for (const auto& g : e.patterns)
        if (is_box_indecomposable(g))
            ++prof.indec_counts[g.size() - 1];
    if (phi_preimage(w)) {
        try {
            if (indecomposable_counts_formula(w, n_max) != prof.indec_counts)
                throw std::logic_error("brute-force and factor-formula indecomposable counts disagree");
            prof.interior_indec_counts = interior_indecomposable_counts(w, n_max);
        } catch (const UnsupportedError&) {
        }
    }
    return prof;
}

void write_json_lines(std::ostream& os, const Counts& counts, Provenance p)
{
    for (std::size_t i = 0; i < counts.size(); ++i) {
        nlohmann::ordered_json j;
        j["length"] = i + 1;
        j["count"] = counts[i];
        j["provenance"] = to_string(p);
        os << j.dump() << '\n';
    }
}

} // namespace pinclass
