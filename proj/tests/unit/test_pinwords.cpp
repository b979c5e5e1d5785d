#include "pinclass/error.hpp"
#include "pinclass/gridded.hpp"
#include "pinclass/pinwords.hpp"

#include <doctest.h>

#include <random>

using namespace pinclass;

namespace {

Validation check(const std::string& tokens) { return validate_memory(split_tokens(tokens)); }

std::string memory(const std::string& basic) { return basic_to_memory(parse_basic_word(basic)).to_string(); }

PinWord random_word(std::mt19937& rng, std::size_t n)
{
    std::vector<PinLetter> ls{PinLetter::from_symbol(static_cast<Symbol>(rng() % 8))};
    while (ls.size() < n) {
        Dir d = ls.back().direction;
        Dir next = is_horizontal(d) ? (rng() % 2 ? Dir::U : Dir::D) : (rng() % 2 ? Dir::L : Dir::R);
        ls.push_back(*PinLetter::make(next, d));
    }
    return PinWord::from_letters(ls);
}

} // namespace

TEST_CASE("memory automaton")
{
    CHECK(check("ru,ur,ru").accepted());
    auto bad = check("ru,rd");
    REQUIRE_FALSE(bad.accepted());
    CHECK(bad.rejection->first == 1);
    CHECK(bad.rejection->second == 2);
    CHECK(check("ur,lu,ul,ru,dr,rd,dr,ld,ul,lu,dl,rd,ur,ru,dr").accepted());
    CHECK_FALSE(check("ru,lu").accepted());
    CHECK_FALSE(check("xy").accepted());
    CHECK(check("ru,u,r").word->to_string() == "ru,ur,ru");
    CHECK_FALSE(check("r,u").accepted());
}

TEST_CASE("factors of accepted words are accepted")
{
    std::mt19937 rng(11);
    for (int s = 0; s < 50; ++s) {
        auto w = random_word(rng, 10);
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i + 1; j <= w.size(); ++j)
                CHECK(validate_memory(w.slice(i, j).letters()).accepted());
    }
}

TEST_CASE("basic to memory")
{
    CHECK(memory("1urulur") == "ru,ur,ru,ur,lu,ul,ru");
    CHECK(memory("basic:1lurdrdluldrurd") == "ur,lu,ul,ru,dr,rd,dr,ld,ul,lu,dl,rd,ur,ru,dr");
    CHECK(memory("2dl") == "lu,dl,ld");
    CHECK_THROWS_AS(basic_to_memory(parse_basic_word("1")), ValidationError);
    CHECK_THROWS_AS(parse_basic_word("5ur"), ValidationError);

    // the first pin really lands in the named quadrant
    for (const char* b : {"1ur", "1ru", "2dl", "2ld", "3ul", "3lu", "4dr", "4rd"}) {
        auto g = build_pin_permutation(basic_to_memory(parse_basic_word(b)));
        auto pts = pin_points(basic_to_memory(parse_basic_word(b)));
        int q = b[0] - '0';
        bool right = pts[0].x > 0, up = pts[0].y > 0;
        CHECK(q == (right ? (up ? 1 : 4) : (up ? 2 : 3)));
        CHECK(g.size() == 3);
    }
}

TEST_CASE("memory to basic")
{
    CHECK(memory_to_basic(parse_pin_word("ru,ur,ru,ur,lu,ul,ru")).to_string() == "1urulur");
    CHECK(memory_to_basic(parse_pin_word("lu,dl,ld")).to_string() == "2dl");
    CHECK(memory_to_basic(parse_pin_word("ur,lu")).to_string() == "1l");
    CHECK_THROWS_AS(memory_to_basic(parse_pin_word("ru")), ValidationError);

    std::mt19937 rng(5);
    for (int s = 0; s < 100; ++s) {
        auto w = random_word(rng, 2 + rng() % 10);
        CHECK(basic_to_memory(memory_to_basic(w)).to_string() == w.to_string());
    }
}

TEST_CASE("phi")
{
    CHECK(pin_spec_to_string(phi(parse_word_spec("per:;10"))) == "phi(per:;10)");
    CHECK(phi(Word{0}).to_string() == "lu,ul");
    CHECK(phi(Word{1, 0}).to_string() == "ru,ur,lu,ul");
    CHECK(pin_alphabet().render(prefix(phi(parse_word_spec("per:;10")), 8)) == "ru,ur,lu,ul,ru,ur,lu,ul");
    CHECK(pin_alphabet().render(prefix(phi(parse_word_spec("per:;011")), 6)) == "lu,ul,ru,ur,ru,ur");

    auto pre = phi_preimage(parse_pin_spec("phi(per:;011)"));
    REQUIRE(pre);
    CHECK(to_string(*pre) == "per:;011");
    CHECK_FALSE(phi_preimage(parse_pin_spec("pin:per:;ru,ur")));
}

TEST_CASE("pin factors")
{
    CHECK(pin_factors(parse_pin_spec("phi(per:;01)"), 1).size() == 4);
    CHECK(pin_factors(parse_pin_spec("phi(sturmian:1)"), 5).size() == 8);
    CHECK(pin_factors(parse_pin_spec("pin:per:;ru,ur"), 3).size() == 2);
}

TEST_CASE("symmetries")
{
    auto w = parse_pin_word("ur,lu,dl,rd");
    CHECK(symmetry_transform(w, Symmetry::identity()).to_string() == w.to_string());
    CHECK(symmetry_transform(w, Symmetry::parse("hreflect")).to_string() == "ul,ru,dr,ld");
    for (const auto& g : Symmetry::all())
        if (g.transpose == false && (g.flip_x != g.flip_y))
            CHECK(symmetry_transform(symmetry_transform(w, g), g).to_string() == w.to_string());

    std::mt19937 rng(3);
    for (int s = 0; s < 100; ++s) {
        auto v = random_word(rng, 1 + rng() % 12);
        const auto& all = Symmetry::all();
        auto g = all[rng() % 8], h = all[rng() % 8];
        auto gh = symmetry_transform(v, Symmetry::compose(g, h));
        CHECK(gh.to_string() == symmetry_transform(symmetry_transform(v, h), g).to_string());
        CHECK(validate_memory(gh.letters()).accepted());
        CHECK(Symmetry::parse(g.name()) == g);
    }
}

TEST_CASE("pin specs")
{
    CHECK(pin_spec_to_string(parse_pin_spec("pin:per:;ru,ur")) == "pin:per:;ru,ur");
    CHECK(pin_spec_to_string(parse_pin_spec("pin:per:;ur,l,d,r")) == "pin:per:;ur,lu,dl,rd");
    CHECK_THROWS_AS(parse_pin_spec("pin:per:;ru,lu"), ValidationError);
    CHECK_THROWS_AS(parse_pin_spec("pin:per:;ru,ur,ru"), ValidationError);
    CHECK_THROWS_AS(parse_pin_spec("garbage"), ValidationError);
}
