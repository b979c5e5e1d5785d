#include "pinclass/pinwords.hpp"

#include "pinclass/error.hpp"

#include <algorithm>
#include <cctype>

namespace pinclass {

namespace {

const std::array<Dir, 4> kDirs{Dir::L, Dir::R, Dir::U, Dir::D};

std::vector<Word> phi_images()
{
    return {
        {PinLetter{Dir::L, Dir::U}.symbol(), PinLetter{Dir::U, Dir::L}.symbol()},
        {PinLetter{Dir::R, Dir::U}.symbol(), PinLetter{Dir::U, Dir::R}.symbol()},
    };
}

std::string lower(std::string_view s)
{
    std::string out(s);
    for (auto& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t\n\r");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t\n\r");
    return std::string(s.substr(b, e - b + 1));
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

// A token is either a full letter or a bare direction awaiting its memory.
struct Token {
    Dir direction;
    std::optional<Dir> memory;
};

std::optional<Token> parse_token(std::string_view raw)
{
    std::string t = lower(trim(raw));
    if (t.empty() || t.size() > 2)
        return std::nullopt;
    auto d = dir_from_char(t[0]);
    if (!d)
        return std::nullopt;
    if (t.size() == 1)
        return Token{*d, std::nullopt};
    auto m = dir_from_char(t[1]);
    if (!m || is_horizontal(*d) == is_horizontal(*m))
        return std::nullopt;
    return Token{*d, *m};
}

std::vector<Token> parse_tokens_or_throw(std::string_view text)
{
    std::vector<Token> out;
    for (const auto& raw : split_tokens(text)) {
        auto t = parse_token(raw);
        if (!t)
            throw ValidationError("malformed pin letter '" + raw + "'");
        out.push_back(*t);
    }
    return out;
}

} // namespace

char to_char(Dir d)
{
    switch (d) {
    case Dir::L: return 'l';
    case Dir::R: return 'r';
    case Dir::U: return 'u';
    case Dir::D: return 'd';
    }
    return '?';
}

std::optional<Dir> dir_from_char(char c)
{
    switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'l': return Dir::L;
    case 'r': return Dir::R;
    case 'u': return Dir::U;
    case 'd': return Dir::D;
    default: return std::nullopt;
    }
}

std::optional<PinLetter> PinLetter::make(Dir direction, Dir memory)
{
    if (is_horizontal(direction) == is_horizontal(memory))
        return std::nullopt;
    return PinLetter{direction, memory};
}

PinLetter PinLetter::from_symbol(Symbol s)
{
    if (s >= 8)
        throw ValidationError("pin symbol out of range: " + std::to_string(s));
    Dir d = kDirs[s / 2];
    bool second = (s % 2) == 1;
    Dir m = is_horizontal(d) ? (second ? Dir::D : Dir::U) : (second ? Dir::R : Dir::L);
    return {d, m};
}

Symbol PinLetter::symbol() const
{
    bool second = memory == Dir::D || memory == Dir::R;
    return static_cast<Symbol>(2 * static_cast<int>(direction) + (second ? 1 : 0));
}

std::string PinLetter::token() const
{
    return {to_char(direction), to_char(memory)};
}

int PinLetter::quadrant() const
{
    Dir h = is_horizontal(direction) ? direction : memory;
    Dir v = is_horizontal(direction) ? memory : direction;
    if (v == Dir::U)
        return h == Dir::R ? 1 : 2;
    return h == Dir::L ? 3 : 4;
}

const Alphabet& pin_alphabet()
{
    static const Alphabet a = [] {
        std::vector<std::string> names;
        for (Symbol s = 0; s < 8; ++s)
            names.push_back(PinLetter::from_symbol(s).token());
        return Alphabet(std::move(names), ",");
    }();
    return a;
}

Validation validate_memory(const std::vector<PinLetter>& letters)
{
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (is_horizontal(letters[i].direction) == is_horizontal(letters[i].memory))
            return {std::nullopt, Rejection{i + 1, i + 1, "letter '" + letters[i].token() + "' is not in the alphabet"}};
        if (i + 1 < letters.size() && letters[i + 1].memory != letters[i].direction)
            return {std::nullopt, Rejection{i + 1, i + 2,
                                            "'" + letters[i + 1].token() + "' cannot follow '" + letters[i].token() + "'"}};
    }
    return {PinWord::from_letters(letters), std::nullopt};
}

Validation validate_memory(std::span<const std::string> tokens)
{
    std::vector<PinLetter> letters;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        auto t = parse_token(tokens[i]);
        if (!t)
            return {std::nullopt, Rejection{i + 1, i + 1, "malformed pin letter '" + tokens[i] + "'"}};
        Dir memory;
        if (t->memory) {
            memory = *t->memory;
        } else if (i > 0) {
            memory = letters.back().direction;
            if (is_horizontal(memory) == is_horizontal(t->direction))
                return {std::nullopt, Rejection{i, i + 1, "two pins in a row on the same axis"}};
        } else {
            return {std::nullopt, Rejection{1, 1, "first letter needs an explicit memory"}};
        }
        letters.push_back({t->direction, memory});
    }
    return validate_memory(letters);
}

PinWord PinWord::from_letters(std::vector<PinLetter> letters)
{
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (is_horizontal(letters[i].direction) == is_horizontal(letters[i].memory))
            throw ValidationError("letter " + std::to_string(i + 1) + " is not a pin letter");
        if (i + 1 < letters.size() && letters[i + 1].memory != letters[i].direction)
            throw ValidationError("pin word rejected at pair (" + std::to_string(i + 1) + "," + std::to_string(i + 2) +
                                  "): '" + letters[i + 1].token() + "' cannot follow '" + letters[i].token() + "'");
    }
    PinWord w;
    w.letters_ = std::move(letters);
    return w;
}

PinWord PinWord::from_symbols(const Word& symbols)
{
    std::vector<PinLetter> letters;
    letters.reserve(symbols.size());
    for (Symbol s : symbols)
        letters.push_back(PinLetter::from_symbol(s));
    return from_letters(std::move(letters));
}

Word PinWord::symbols() const
{
    Word w;
    w.reserve(letters_.size());
    for (const auto& p : letters_)
        w.push_back(p.symbol());
    return w;
}

PinWord PinWord::slice(std::size_t begin, std::size_t end) const
{
    end = std::min(end, letters_.size());
    begin = std::min(begin, end);
    PinWord w;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                      letters_.begin() + static_cast<std::ptrdiff_t>(end));
    return w;
}

std::string PinWord::to_string() const
{
    return pin_alphabet().render(symbols());
}

std::string BasicWord::to_string() const
{
    std::string s = std::to_string(quadrant);
    for (Dir d : moves)
        s += to_char(d);
    return s;
}

BasicWord parse_basic_word(std::string_view text)
{
    std::string t = lower(trim(text));
    if (starts_with(t, "basic:"))
        t = t.substr(6);
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' ' || c == ','; }), t.end());
    if (t.empty() || t[0] < '1' || t[0] > '4')
        throw ValidationError("basic word must start with a quadrant numeral 1-4");
    BasicWord b;
    b.quadrant = t[0] - '0';
    for (std::size_t i = 1; i < t.size(); ++i) {
        auto d = dir_from_char(t[i]);
        if (!d)
            throw ValidationError(std::string("bad move '") + t[i] + "' in basic word");
        b.moves.push_back(*d);
    }
    return b;
}

PinWord basic_to_memory(const BasicWord& b)
{
    if (b.quadrant < 1 || b.quadrant > 4)
        throw ValidationError("quadrant must be 1-4");
    if (b.moves.empty())
        throw ValidationError("ambiguous first-letter encoding: a length-1 basic word fixes no memory");
    Dir h = (b.quadrant == 1 || b.quadrant == 4) ? Dir::R : Dir::L;
    Dir v = (b.quadrant <= 2) ? Dir::U : Dir::D;
    std::vector<PinLetter> letters;
    letters.push_back(is_horizontal(b.moves.front()) ? PinLetter{v, h} : PinLetter{h, v});
    for (std::size_t i = 0; i < b.moves.size(); ++i) {
        auto p = PinLetter::make(b.moves[i], letters.back().direction);
        if (!p)
            throw ValidationError("basic word moves must alternate horizontal and vertical (move " +
                                  std::to_string(i + 2) + ")");
        letters.push_back(*p);
    }
    return PinWord::from_letters(std::move(letters));
}

BasicWord memory_to_basic(const PinWord& w)
{
    if (w.size() < 2)
        throw ValidationError("ambiguous first-letter encoding: need at least two letters");
    BasicWord b;
    b.quadrant = w[0].quadrant();
    for (std::size_t i = 1; i < w.size(); ++i)
        b.moves.push_back(w[i].direction);
    return b;
}

PinWord phi(const Word& binary)
{
    const auto images = phi_images();
    Word out;
    for (Symbol c : binary) {
        if (c > 1)
            throw ValidationError("phi applies to binary words only");
        out.insert(out.end(), images[c].begin(), images[c].end());
    }
    return PinWord::from_symbols(out);
}

WordSpec phi(const WordSpec& binary)
{
    if (!(binary.alphabet() == Alphabet::binary()))
        throw ValidationError("phi applies to binary words only");
    return WordSpec::substitute(binary, phi_images(), pin_alphabet());
}

std::optional<WordSpec> phi_preimage(const WordSpec& pin)
{
    const auto* s = pin.get_if<Substituted>();
    if (!s || !(s->base->alphabet() == Alphabet::binary()) || s->images != phi_images())
        return std::nullopt;
    return *s->base;
}

std::set<Word> pin_factors(const WordSpec& pin, std::size_t n)
{
    if (!(pin.alphabet() == pin_alphabet()))
        throw ValidationError("pin_factors needs a word over the pin alphabet");
    return factors(pin, n);
}

Dir Symmetry::apply(Dir d) const
{
    if (transpose) {
        switch (d) {
        case Dir::R: d = Dir::U; break;
        case Dir::U: d = Dir::R; break;
        case Dir::L: d = Dir::D; break;
        case Dir::D: d = Dir::L; break;
        }
    }
    if (flip_x && is_horizontal(d))
        d = d == Dir::L ? Dir::R : Dir::L;
    if (flip_y && !is_horizontal(d))
        d = d == Dir::U ? Dir::D : Dir::U;
    return d;
}

PinLetter Symmetry::apply(PinLetter p) const
{
    return {apply(p.direction), apply(p.memory)};
}

std::array<Symmetry, 8> Symmetry::all()
{
    std::array<Symmetry, 8> out;
    for (int i = 0; i < 8; ++i)
        out[static_cast<std::size_t>(i)] = Symmetry{(i & 4) != 0, (i & 1) != 0, (i & 2) != 0};
    return out;
}

Symmetry Symmetry::compose(const Symmetry& g, const Symmetry& h)
{
    for (const auto& k : all())
        if (std::all_of(kDirs.begin(), kDirs.end(), [&](Dir d) { return k.apply(d) == g.apply(h.apply(d)); }))
            return k;
    throw std::logic_error("symmetries of the square are closed under composition");
}

std::string Symmetry::name() const
{
    std::string s;
    if (transpose)
        s += 't';
    if (flip_x)
        s += 'x';
    if (flip_y)
        s += 'y';
    return s.empty() ? "id" : s;
}

Symmetry Symmetry::parse(std::string_view name)
{
    std::string n = lower(trim(name));
    if (n == "id" || n == "identity")
        return {};
    if (n == "hreflect" || n == "reverse")
        return {false, true, false};
    if (n == "vreflect")
        return {false, false, true};
    if (n == "rot180")
        return {false, true, true};
    Symmetry g;
    for (char c : n) {
        if (c == 't' && !g.transpose)
            g.transpose = true;
        else if (c == 'x' && !g.flip_x)
            g.flip_x = true;
        else if (c == 'y' && !g.flip_y)
            g.flip_y = true;
        else
            throw ValidationError("unknown symmetry '" + std::string(name) + "'");
    }
    if (n.empty())
        throw ValidationError("empty symmetry name");
    return g;
}

PinWord symmetry_transform(const PinWord& w, const Symmetry& g)
{
    std::vector<PinLetter> letters;
    letters.reserve(w.size());
    for (const auto& p : w.letters())
        letters.push_back(g.apply(p));
    return PinWord::from_letters(std::move(letters));
}

std::vector<std::string> split_tokens(std::string_view text)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

PinWord parse_pin_word(std::string_view text)
{
    std::string t = trim(text);
    if (starts_with(t, "basic:"))
        return basic_to_memory(parse_basic_word(t));
    if (starts_with(t, "pin:lit:"))
        t = t.substr(8);
    auto tokens = split_tokens(t);
    auto v = validate_memory(tokens);
    if (!v.accepted())
        throw ValidationError("pin word rejected at (" + std::to_string(v.rejection->first) + "," +
                              std::to_string(v.rejection->second) + "): " + v.rejection->reason);
    return *v.word;
}

WordSpec parse_pin_spec(std::string_view text)
{
    std::string t = trim(text);
    if (starts_with(t, "phi(") && t.back() == ')')
        return phi(parse_word_spec(t.substr(4, t.size() - 5)));
    if (starts_with(t, "pin:lit:"))
        return WordSpec::literal(parse_pin_word(t).symbols(), pin_alphabet());
    if (!starts_with(t, "pin:per:"))
        throw ValidationError("unrecognised pin word spec '" + t + "'");
    auto body = std::string_view(t).substr(8);
    auto semi = body.find(';');
    if (semi == std::string_view::npos)
        throw ValidationError("pin:per: spec needs '<prefix>;<cycle>'");
    auto pre = parse_tokens_or_throw(body.substr(0, semi));
    auto cyc = parse_tokens_or_throw(body.substr(semi + 1));
    if (cyc.empty())
        throw ValidationError("pin word cycle must be nonempty");

    std::vector<Token> all = pre;
    all.insert(all.end(), cyc.begin(), cyc.end());
    std::vector<PinLetter> letters;
    for (std::size_t i = 0; i < all.size(); ++i) {
        Dir memory;
        if (all[i].memory)
            memory = *all[i].memory;
        else if (i > 0)
            memory = all[i - 1].direction;
        else if (pre.empty())
            memory = cyc.back().direction; // cycle wraps onto itself
        else
            throw ValidationError("first letter needs an explicit memory");
        auto p = PinLetter::make(all[i].direction, memory);
        if (!p)
            throw ValidationError("pin letters must alternate horizontal and vertical");
        letters.push_back(*p);
    }
    // The word continues with the cycle again, so check the wrap-around pair.
    auto check = letters;
    check.push_back(letters[pre.size()]);
    PinWord::from_letters(check);

    Word prefix_syms, cycle_syms;
    for (std::size_t i = 0; i < letters.size(); ++i)
        (i < pre.size() ? prefix_syms : cycle_syms).push_back(letters[i].symbol());
    return WordSpec::periodic(prefix_syms, cycle_syms, pin_alphabet());
}

std::string pin_spec_to_string(const WordSpec& spec)
{
    if (auto b = phi_preimage(spec))
        return "phi(" + to_string(*b) + ")";
    const auto& a = spec.alphabet();
    if (const auto* p = spec.get_if<EventuallyPeriodic>())
        return "pin:per:" + a.render(p->prefix) + ";" + a.render(p->cycle);
    if (const auto* e = spec.get_if<ExplicitPrefix>())
        return "pin:lit:" + a.render(e->word);
    return to_string(spec);
}

} // namespace pinclass
