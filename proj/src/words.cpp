#include "pinclass/words.hpp"

#include "pinclass/error.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace pinclass {

namespace {

constexpr std::size_t kSturmianMinScan = 10000;
constexpr std::size_t kSturmianScanPerLength = 50;

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

Word repeat(const Word& w, std::size_t times)
{
    Word out;
    out.reserve(w.size() * times);
    for (std::size_t i = 0; i < times; ++i)
        out.insert(out.end(), w.begin(), w.end());
    return out;
}

EventuallyPeriodic normalize(Word prefix, Word cycle)
{
    if (cycle.empty())
        throw ValidationError("eventually periodic word needs a nonempty cycle");
    cycle = primitive_root(cycle);
    while (!prefix.empty() && prefix.back() == cycle.back()) {
        std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
        prefix.pop_back();
    }
    return {std::move(prefix), std::move(cycle)};
}

// Window over u v^m large enough to contain every length-n factor.
std::size_t cycle_copies(std::size_t n, std::size_t cycle_len)
{
    return ceil_div(n + cycle_len, cycle_len) + 1;
}

Word sturmian_prefix(const SturmianDirective& d, std::size_t length)
{
    // Standard words: s_{-1} = 1, s_0 = 0, s_n = s_{n-1}^{d_n} s_{n-2}.
    Word older{1};
    Word prev{0};
    for (std::size_t n = 1; prev.size() < length; ++n) {
        Word next = repeat(prev, d.at(n));
        next.insert(next.end(), older.begin(), older.end());
        older = std::move(prev);
        prev = std::move(next);
    }
    prev.resize(length);
    return prev;
}

// Blocks 1^i 0 for i = 1..blocks.
Word bstar_blocks(std::size_t blocks)
{
    Word w;
    for (std::size_t i = 1; i <= blocks; ++i) {
        w.insert(w.end(), i, Symbol{1});
        w.push_back(0);
    }
    return w;
}

std::size_t min_image_length(const Substituted& s)
{
    std::size_t m = s.images.front().size();
    for (const auto& im : s.images)
        m = std::min(m, im.size());
    return m;
}

Word apply_images(const Substituted& s, const Word& base)
{
    Word out;
    for (Symbol c : base) {
        if (c >= s.images.size())
            throw ValidationError("substitution has no image for symbol " + std::to_string(c));
        const Word& im = s.images[c];
        out.insert(out.end(), im.begin(), im.end());
    }
    return out;
}

// Every window of length n in the image starts inside the image of some
// base letter and covers at most this many consecutive base letters.
std::size_t covering_base_length(const Substituted& s, std::size_t n)
{
    return ceil_div(n - 1, min_image_length(s)) + 1;
}

std::set<Word> image_windows(const Substituted& s, const std::set<Word>& base_factors, std::size_t n)
{
    std::set<Word> out;
    for (const Word& a : base_factors) {
        Word img = apply_images(s, a);
        auto part = finite_factors(img, n);
        out.insert(part.begin(), part.end());
    }
    return out;
}

void require_length(std::size_t n)
{
    if (n == 0)
        throw ValidationError("factor length must be at least 1");
}

} // namespace

Alphabet::Alphabet(std::vector<std::string> names, std::string separator)
    : names_(std::move(names)), separator_(std::move(separator))
{
}

Alphabet Alphabet::binary()
{
    return Alphabet({"0", "1"});
}

const std::string& Alphabet::name(Symbol s) const
{
    if (s >= names_.size())
        throw ValidationError("symbol " + std::to_string(s) + " outside alphabet");
    return names_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view token) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == token)
            return static_cast<Symbol>(i);
    return std::nullopt;
}

std::string Alphabet::render(const Word& w) const
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0)
            out += separator_;
        out += name(w[i]);
    }
    return out;
}

unsigned SturmianDirective::at(std::size_t i) const
{
    if (i >= 1 && i <= head.size())
        return head[i - 1];
    return cycle[(i - 1 - head.size()) % cycle.size()];
}

WordSpec WordSpec::periodic(Word prefix, Word cycle, Alphabet alphabet)
{
    return WordSpec(normalize(std::move(prefix), std::move(cycle)), std::move(alphabet));
}

WordSpec WordSpec::sturmian(std::vector<unsigned> head, std::vector<unsigned> cycle)
{
    if (cycle.empty())
        throw ValidationError("Sturmian directive needs a nonempty repeating part");
    auto bad = [](unsigned d) { return d < 1; };
    if (std::any_of(head.begin(), head.end(), bad) || std::any_of(cycle.begin(), cycle.end(), bad))
        throw ValidationError("Sturmian directive coefficients must be >= 1");
    return WordSpec(SturmianDirective{std::move(head), std::move(cycle)}, Alphabet::binary());
}

WordSpec WordSpec::bstar()
{
    return WordSpec(BStar{}, Alphabet::binary());
}

WordSpec WordSpec::literal(Word word, Alphabet alphabet)
{
    return WordSpec(ExplicitPrefix{std::move(word)}, std::move(alphabet));
}

WordSpec WordSpec::substitute(const WordSpec& base, std::vector<Word> images, Alphabet target)
{
    if (images.size() < base.alphabet().size())
        throw ValidationError("substitution must map every base symbol");
    for (const auto& im : images)
        if (im.empty())
            throw ValidationError("substitution images must be nonempty");
    return WordSpec(Substituted{std::make_shared<const WordSpec>(base), std::move(images)}, std::move(target));
}

Word primitive_root(const Word& w)
{
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0)
            continue;
        bool ok = true;
        for (std::size_t i = d; i < n && ok; ++i)
            ok = w[i] == w[i - d];
        if (ok)
            return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(d));
    }
    return w;
}

Word prefix(const WordSpec& spec, std::size_t length)
{
    struct Visitor {
        std::size_t L;
        Word operator()(const EventuallyPeriodic& p) const
        {
            Word out(p.prefix.begin(), p.prefix.begin() + static_cast<std::ptrdiff_t>(std::min(L, p.prefix.size())));
            while (out.size() < L)
                out.push_back(p.cycle[(out.size() - p.prefix.size()) % p.cycle.size()]);
            return out;
        }
        Word operator()(const SturmianDirective& d) const { return sturmian_prefix(d, L); }
        Word operator()(const BStar&) const
        {
            std::size_t blocks = 1;
            while (blocks * (blocks + 3) / 2 < L)
                ++blocks;
            Word w = bstar_blocks(blocks);
            w.resize(L);
            return w;
        }
        Word operator()(const ExplicitPrefix& e) const
        {
            if (L > e.word.size())
                throw UnsupportedError("insufficient prefix: literal word has length " + std::to_string(e.word.size()) +
                                       ", requested " + std::to_string(L));
            return Word(e.word.begin(), e.word.begin() + static_cast<std::ptrdiff_t>(L));
        }
        Word operator()(const Substituted& s) const
        {
            Word img = apply_images(s, prefix(*s.base, ceil_div(L, min_image_length(s))));
            img.resize(L);
            return img;
        }
    };
    return std::visit(Visitor{length}, spec.variant());
}

std::set<Word> finite_factors(const Word& w, std::size_t n)
{
    std::set<Word> out;
    if (n == 0 || n > w.size())
        return out;
    for (std::size_t i = 0; i + n <= w.size(); ++i)
        out.emplace(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i + n));
    return out;
}

std::set<Word> factors(const WordSpec& spec, std::size_t n)
{
    require_length(n);
    struct Visitor {
        std::size_t n;
        std::set<Word> operator()(const EventuallyPeriodic& p) const
        {
            Word w = p.prefix;
            Word tail = repeat(p.cycle, cycle_copies(n, p.cycle.size()));
            w.insert(w.end(), tail.begin(), tail.end());
            return finite_factors(w, n);
        }
        std::set<Word> operator()(const SturmianDirective& d) const
        {
            return finite_factors(sturmian_prefix(d, std::max(kSturmianMinScan, kSturmianScanPerLength * n)), n);
        }
        std::set<Word> operator()(const BStar&) const
        {
            // Past block n+1 every window sits inside 1^i 0 1^{i+1} and has the
            // shape 1^a 0 1^b or 1^n, all of which occur earlier.
            return finite_factors(bstar_blocks(n + 3), n);
        }
        std::set<Word> operator()(const ExplicitPrefix&) const
        {
            throw UnsupportedError("factors of a literal prefix do not determine the infinite word");
        }
        std::set<Word> operator()(const Substituted& s) const
        {
            return image_windows(s, factors(*s.base, covering_base_length(s, n)), n);
        }
    };
    return std::visit(Visitor{n}, spec.variant());
}

std::set<Word> recurrent_factors(const WordSpec& spec, std::size_t n)
{
    require_length(n);
    struct Visitor {
        std::size_t n;
        std::set<Word> operator()(const EventuallyPeriodic& p) const
        {
            return finite_factors(repeat(p.cycle, cycle_copies(n, p.cycle.size())), n);
        }
        std::set<Word> operator()(const SturmianDirective& d) const
        {
            // Sturmian words are recurrent.
            return finite_factors(sturmian_prefix(d, std::max(kSturmianMinScan, kSturmianScanPerLength * n)), n);
        }
        std::set<Word> operator()(const BStar&) const
        {
            // Any factor with two zeros contains 0 1^i 0, which occurs exactly once.
            std::set<Word> out;
            out.insert(Word(n, 1));
            for (std::size_t zero = 0; zero < n; ++zero) {
                Word w(n, 1);
                w[zero] = 0;
                out.insert(std::move(w));
            }
            return out;
        }
        std::set<Word> operator()(const ExplicitPrefix&) const
        {
            throw UnsupportedError("recurrent factors are not computable from a literal prefix");
        }
        std::set<Word> operator()(const Substituted& s) const
        {
            return image_windows(s, recurrent_factors(*s.base, covering_base_length(s, n)), n);
        }
    };
    return std::visit(Visitor{n}, spec.variant());
}

std::size_t factor_complexity(const WordSpec& spec, std::size_t n)
{
    return factors(spec, n).size();
}

std::size_t recurrent_complexity(const WordSpec& spec, std::size_t n)
{
    return recurrent_factors(spec, n).size();
}

std::optional<EventuallyPeriodic> eventually_periodic_form(const WordSpec& spec)
{
    if (const auto* p = spec.get_if<EventuallyPeriodic>())
        return *p;
    if (const auto* s = spec.get_if<Substituted>()) {
        auto base = eventually_periodic_form(*s->base);
        if (!base)
            return std::nullopt;
        return normalize(apply_images(*s, base->prefix), apply_images(*s, base->cycle));
    }
    return std::nullopt;
}

Periodicity classify_periodicity(const WordSpec& spec)
{
    if (spec.get_if<ExplicitPrefix>())
        throw UnsupportedError("periodicity of a literal prefix is undetermined");
    if (auto ep = eventually_periodic_form(spec)) {
        auto kind = ep->prefix.empty() ? PeriodicityKind::Periodic : PeriodicityKind::EventuallyPeriodic;
        return {kind, ep->cycle.size(), ep->prefix.size()};
    }
    if (const auto* s = spec.get_if<Substituted>()) {
        // A uniform injective substitution maps aperiodic words to aperiodic words.
        classify_periodicity(*s->base);
        const auto len = s->images.front().size();
        std::set<Word> distinct(s->images.begin(), s->images.end());
        bool uniform = std::all_of(s->images.begin(), s->images.end(), [&](const Word& w) { return w.size() == len; });
        if (!uniform || distinct.size() != s->images.size())
            throw UnsupportedError("cannot classify the image of an aperiodic word under this substitution");
    }
    return {PeriodicityKind::Aperiodic, 0, 0};
}

namespace {

Word parse_symbols(std::string_view text, const Alphabet& alphabet)
{
    Word w;
    for (char c : text) {
        auto s = alphabet.find(std::string_view(&c, 1));
        if (!s)
            throw ValidationError(std::string("symbol '") + c + "' not in alphabet");
        w.push_back(*s);
    }
    return w;
}

Alphabet alphabet_for(std::string_view text)
{
    std::set<char> chars(text.begin(), text.end());
    chars.erase(';');
    if (std::all_of(chars.begin(), chars.end(), [](char c) { return c == '0' || c == '1'; }))
        return Alphabet::binary();
    std::vector<std::string> names;
    for (char c : chars)
        names.emplace_back(1, c);
    return Alphabet(std::move(names));
}

std::vector<unsigned> parse_directive_list(std::string_view text)
{
    std::vector<unsigned> out;
    if (text.empty())
        return out;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find(',', start);
        if (end == std::string_view::npos)
            end = text.size();
        auto item = text.substr(start, end - start);
        unsigned value = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc() || ptr != item.data() + item.size())
            throw ValidationError("bad Sturmian directive entry '" + std::string(item) + "'");
        out.push_back(value);
        start = end + 1;
    }
    return out;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

std::string join(const std::vector<unsigned>& v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0)
            out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

} // namespace

WordSpec parse_word_spec(std::string_view text)
{
    if (starts_with(text, "per:")) {
        auto body = text.substr(4);
        auto semi = body.find(';');
        if (semi == std::string_view::npos)
            throw ValidationError("per: spec needs '<prefix>;<cycle>'");
        Alphabet a = alphabet_for(body);
        return WordSpec::periodic(parse_symbols(body.substr(0, semi), a), parse_symbols(body.substr(semi + 1), a), a);
    }
    if (starts_with(text, "sturmian:")) {
        auto body = text.substr(9);
        auto semi = body.find(';');
        if (semi == std::string_view::npos)
            return WordSpec::sturmian(parse_directive_list(body));
        return WordSpec::sturmian(parse_directive_list(body.substr(0, semi)), parse_directive_list(body.substr(semi + 1)));
    }
    if (text == "bstar")
        return WordSpec::bstar();
    if (starts_with(text, "lit:")) {
        auto body = text.substr(4);
        Alphabet a = alphabet_for(body);
        return WordSpec::literal(parse_symbols(body, a), a);
    }
    throw ValidationError("unrecognised word spec '" + std::string(text) + "'");
}

std::string to_string(const WordSpec& spec)
{
    struct Visitor {
        const Alphabet& a;
        std::string operator()(const EventuallyPeriodic& p) const
        {
            return "per:" + a.render(p.prefix) + ";" + a.render(p.cycle);
        }
        std::string operator()(const SturmianDirective& d) const
        {
            if (d.head.empty())
                return "sturmian:" + join(d.cycle);
            return "sturmian:" + join(d.head) + ";" + join(d.cycle);
        }
        std::string operator()(const BStar&) const { return "bstar"; }
        std::string operator()(const ExplicitPrefix& e) const { return "lit:" + a.render(e.word); }
        std::string operator()(const Substituted& s) const { return "subst(" + to_string(*s.base) + ")"; }
    };
    return std::visit(Visitor{spec.alphabet()}, spec.variant());
}

} // namespace pinclass
