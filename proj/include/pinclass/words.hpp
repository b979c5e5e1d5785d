#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace pinclass {

using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;

/// Names for the symbols of a word. Symbols are opaque indices; the
/// alphabet only matters for parsing and rendering.
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names, std::string separator = "");

    static Alphabet binary();

    std::size_t size() const { return names_.size(); }
    const std::string& name(Symbol s) const;
    std::optional<Symbol> find(std::string_view token) const;
    const std::string& separator() const { return separator_; }
    std::string render(const Word& w) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> names_;
    std::string separator_;
};

class WordSpec;

/// u v v v ... ; the cycle is stored as its primitive root and the prefix is
/// trimmed so that it never ends in alignment with the cycle.
struct EventuallyPeriodic {
    Word prefix;
    Word cycle;
    bool operator==(const EventuallyPeriodic&) const = default;
};

/// Characteristic Sturmian word of the directive d_1 d_2 ... where the
/// directive is `head` followed by `cycle` repeated forever.
struct SturmianDirective {
    std::vector<unsigned> head;
    std::vector<unsigned> cycle;
    unsigned at(std::size_t i) const; // 1-based d_i
    bool operator==(const SturmianDirective&) const = default;
};

/// 10 110 1110 11110 ...
struct BStar {
    bool operator==(const BStar&) const = default;
};

/// A finite word standing in for an unknown infinite one. Only its prefix is
/// usable; anything that depends on the tail is refused.
struct ExplicitPrefix {
    Word word;
    bool operator==(const ExplicitPrefix&) const = default;
};

/// Image of a word under a non-erasing substitution (symbol -> nonempty word).
struct Substituted {
    std::shared_ptr<const WordSpec> base;
    std::vector<Word> images;
};

enum class PeriodicityKind { Periodic, EventuallyPeriodic, Aperiodic };

struct Periodicity {
    PeriodicityKind kind = PeriodicityKind::Aperiodic;
    std::size_t period = 0;    // 0 for aperiodic words
    std::size_t preperiod = 0; // length of the normalised non-periodic prefix
    bool operator==(const Periodicity&) const = default;
};

/// A finitely described infinite word over an alphabet.
class WordSpec {
public:
    using Variant = std::variant<EventuallyPeriodic, SturmianDirective, BStar, ExplicitPrefix, Substituted>;

    static WordSpec periodic(Word prefix, Word cycle, Alphabet alphabet = Alphabet::binary());
    static WordSpec sturmian(std::vector<unsigned> head, std::vector<unsigned> cycle);
    static WordSpec sturmian(std::vector<unsigned> directive) { return sturmian({}, std::move(directive)); }
    static WordSpec bstar();
    static WordSpec literal(Word word, Alphabet alphabet = Alphabet::binary());
    static WordSpec substitute(const WordSpec& base, std::vector<Word> images, Alphabet target);

    const Variant& variant() const { return v_; }
    const Alphabet& alphabet() const { return alphabet_; }

    template <class T>
    const T* get_if() const { return std::get_if<T>(&v_); }

private:
    WordSpec(Variant v, Alphabet a) : v_(std::move(v)), alphabet_(std::move(a)) {}

    Variant v_;
    Alphabet alphabet_;
};

Word primitive_root(const Word& w);

/// First `length` symbols of the infinite word.
Word prefix(const WordSpec& spec, std::size_t length);

/// All length-n windows of a finite word.
std::set<Word> finite_factors(const Word& w, std::size_t n);

std::set<Word> factors(const WordSpec& spec, std::size_t n);
std::set<Word> recurrent_factors(const WordSpec& spec, std::size_t n);
std::size_t factor_complexity(const WordSpec& spec, std::size_t n);
std::size_t recurrent_complexity(const WordSpec& spec, std::size_t n);

Periodicity classify_periodicity(const WordSpec& spec);

/// Explicit u v^omega form when the word is eventually periodic (directly or
/// as the image of an eventually periodic word); nullopt otherwise.
std::optional<EventuallyPeriodic> eventually_periodic_form(const WordSpec& spec);

/// Grammar: `per:<prefix>;<cycle>`, `sturmian:<d1>,<d2>,...` (optionally
/// `sturmian:<head>;<cycle>`), `bstar`, `lit:<word>`. Symbols are single
/// characters; strings over {0,1} use the binary alphabet.
WordSpec parse_word_spec(std::string_view text);
std::string to_string(const WordSpec& spec);

} // namespace pinclass
