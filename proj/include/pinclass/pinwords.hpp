#pragma once

#include "pinclass/words.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pinclass {

enum class Dir : std::uint8_t { L = 0, R = 1, U = 2, D = 3 };

constexpr bool is_horizontal(Dir d) { return d == Dir::L || d == Dir::R; }
char to_char(Dir d);
std::optional<Dir> dir_from_char(char c);

/// One letter of the memory encoding: the pin's direction and the direction
/// of the pin before it. Direction and memory always lie on different axes.
struct PinLetter {
    Dir direction = Dir::R;
    Dir memory = Dir::U;

    static std::optional<PinLetter> make(Dir direction, Dir memory);
    static PinLetter from_symbol(Symbol s);

    /// Index in l_u, l_d, r_u, r_d, u_l, u_r, d_l, d_r order.
    Symbol symbol() const;
    std::string token() const;
    /// Quadrant 1..4 (1 = upper right, counter-clockwise) of the pin's point.
    int quadrant() const;

    auto operator<=>(const PinLetter&) const = default;
};

/// Alphabet of the eight memory letters, rendered comma-separated.
const Alphabet& pin_alphabet();

/// A finite word accepted by the memory automaton.
class PinWord {
public:
    PinWord() = default;

    /// Throws ValidationError naming the first bad adjacent pair.
    static PinWord from_letters(std::vector<PinLetter> letters);
    static PinWord from_symbols(const Word& symbols);

    const std::vector<PinLetter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const PinLetter& operator[](std::size_t i) const { return letters_[i]; }

    Word symbols() const;
    PinWord slice(std::size_t begin, std::size_t end) const;
    std::string to_string() const;

    auto operator<=>(const PinWord&) const = default;

private:
    std::vector<PinLetter> letters_;
};

struct Rejection {
    std::size_t first = 0;  // 1-based index of the offending letter (pair: first, first+1)
    std::size_t second = 0; // equal to first when the token itself is malformed
    std::string reason;
};

struct Validation {
    std::optional<PinWord> word;
    std::optional<Rejection> rejection;
    bool accepted() const { return word.has_value(); }
};

Validation validate_memory(const std::vector<PinLetter>& letters);
/// Tokens are `ru`, `ur`, ... (direction then memory), case-insensitive.
/// A bare direction takes its memory from the predecessor's direction.
Validation validate_memory(std::span<const std::string> tokens);

/// Quadrant numeral plus bare pin directions for p_2, p_3, ...
struct BasicWord {
    int quadrant = 1;
    std::vector<Dir> moves;

    std::size_t size() const { return moves.size() + 1; }
    std::string to_string() const;
    bool operator==(const BasicWord&) const = default;
};

BasicWord parse_basic_word(std::string_view text); // "1luldrur" or "basic:1luldrur"
PinWord basic_to_memory(const BasicWord& b);
BasicWord memory_to_basic(const PinWord& w);

/// phi(0) = l u_l, phi(1) = r u_r, the first letter taking memory U.
PinWord phi(const Word& binary);
WordSpec phi(const WordSpec& binary);
/// The binary word b when `pin` was built as phi(b).
std::optional<WordSpec> phi_preimage(const WordSpec& pin);

std::set<Word> pin_factors(const WordSpec& pin, std::size_t n);

/// Element of the symmetry group of the square acting on directions: an
/// optional transpose (R<->U, L<->D) followed by optional reflections.
struct Symmetry {
    bool transpose = false;
    bool flip_x = false; // L <-> R
    bool flip_y = false; // U <-> D

    Dir apply(Dir d) const;
    PinLetter apply(PinLetter p) const;

    static Symmetry identity() { return {}; }
    static std::array<Symmetry, 8> all();
    /// (compose(g, h)).apply(x) == g.apply(h.apply(x)).
    static Symmetry compose(const Symmetry& g, const Symmetry& h);

    std::string name() const;
    static Symmetry parse(std::string_view name);

    bool operator==(const Symmetry&) const = default;
};

PinWord symmetry_transform(const PinWord& w, const Symmetry& g);

std::vector<std::string> split_tokens(std::string_view text);

/// Finite pin word: `pin:lit:<tokens>`, `basic:<quadrant><moves>`, or bare
/// comma-separated tokens.
PinWord parse_pin_word(std::string_view text);

/// Infinite pin word: `pin:per:<prefix>;<cycle>`, `phi(<binary spec>)`, or
/// `pin:lit:<tokens>`.
WordSpec parse_pin_spec(std::string_view text);
std::string pin_spec_to_string(const WordSpec& spec);

} // namespace pinclass
