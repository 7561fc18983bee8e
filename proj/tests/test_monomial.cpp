#include <catch2/catch_amalgamated.hpp>

#include "lhreg/monomial.hpp"
#include "oracles.hpp"

using namespace lhreg;

namespace {

MonomialIdeal ideal(std::string_view s, std::string_view extra = {}) { return parse_compact_ideal(s, extra); }

Monomial mono(const MonomialIdeal& I, std::string_view vars) {
    std::vector<std::string> names;
    for (char c : vars) names.emplace_back(1, c);
    return I.alphabet().monomial(names);
}

}  // namespace

TEST_CASE("alphabet sorts names and rejects bad ones") {
    Alphabet a({"c", "a", "b", "a"});
    CHECK(a.names() == std::vector<std::string>{"a", "b", "c"});
    CHECK(a.index("b") == 1);
    CHECK_FALSE(a.find("z"));
    CHECK_THROWS(Alphabet({"a-b"}));
    CHECK_THROWS(Alphabet({""}));
}

TEST_CASE("parse_ideal reads generators, comments and vars header") {
    auto I = parse_ideal("# comment\nvars: z\n\na b\nb c\n");
    CHECK(I.to_string() == "(ab, bc)");
    CHECK(I.alphabet().names() == std::vector<std::string>{"a", "b", "c", "z"});

    auto multi = parse_ideal("x1 x2\nx2 x10\n");
    CHECK(multi.alphabet().names() == std::vector<std::string>{"x1", "x10", "x2"});
    CHECK(multi.size() == 2);
}

TEST_CASE("parse_ideal errors carry positions") {
    CHECK_THROWS_AS(parse_ideal(""), ParseError);
    CHECK_THROWS_AS(parse_ideal("# only a comment\n"), ParseError);
    try {
        parse_ideal("a b\na a\n");
        FAIL("repeated variable accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_ideal("a $\n"), ParseError);
}

TEST_CASE("minimalize drops redundant generators and sorts") {
    Alphabet abc({"a", "b", "c"});
    auto r = minimalize(abc, {abc.monomial({"a", "b", "c"}), abc.monomial({"b"}), abc.monomial({"a", "c"}),
                              abc.monomial({"b"})});
    REQUIRE_FALSE(r.is_unit());
    CHECK(r.ideal().to_string() == "(b, ac)");
    CHECK(minimalize(abc, {abc.monomial({"a"}), Monomial{}}).is_unit());
    CHECK_THROWS(minimalize(abc, {}));
}

TEST_CASE("lcm is the union of supports") {
    auto I = ideal("ab,bc,cd");
    CHECK(to_string(lcm(I.generators()), I.alphabet()) == "abcd");
}

TEST_CASE("colon by a monomial") {
    auto I = ideal("ab,cd");
    CHECK(colon_by_monomial(I, mono(I, "a")).ideal().to_string() == "(b, cd)");
    CHECK(colon_by_monomial(I, mono(I, "ab")).is_unit());
    auto J = ideal("abc,bd,ce", "");
    CHECK(colon_by_monomial(J, mono(J, "bc")).ideal().to_string() == "(a, d, e)");
}

TEST_CASE("add_generator absorbs multiples") {
    auto I = ideal("ab,cd", "abcde");
    CHECK(add_generator(I, mono(I, "e")).to_string() == "(e, ab, cd)");
    CHECK(add_generator(I, mono(I, "a")).to_string() == "(a, cd)");
    CHECK_THROWS(add_generator(I, Monomial{}));
}

TEST_CASE("alexander dual of worked example") {
    auto I = ideal("abc,def,adg,beg");
    auto expected = ideal("bd,ae,cde,abf,adg,cdg,beg,ceg,afg,bfg,cfg", "abcdefg");
    CHECK(alexander_dual(I) == expected);
    CHECK(alexander_dual(I).size() == 11);
    CHECK(alexander_dual(ideal("ab")).to_string() == "(a, b)");
}

TEST_CASE("alexander dual matches transversal enumeration and is an involution") {
    for (const auto& I : oracle::random_ideals(60, 8, 6, 11)) {
        INFO(I.to_string());
        const auto dual = alexander_dual(I);
        CHECK(dual == oracle::dual_by_enumeration(I));
        CHECK(alexander_dual(dual) == I);
    }
}

TEST_CASE("minimalize is idempotent and order independent") {
    std::mt19937_64 rng(5);
    for (const auto& I : oracle::random_ideals(60, 7, 6, 12)) {
        auto gens = I.generators();
        gens.push_back(lcm(gens));
        std::shuffle(gens.begin(), gens.end(), rng);
        auto again = minimalize(I.alphabet(), gens);
        CHECK(again.ideal() == I);
        CHECK(minimalize(I.alphabet(), again.ideal().generators()).ideal() == I);
    }
}

TEST_CASE("colon by disjoint monomials composes") {
    std::mt19937_64 rng(9);
    for (const auto& I : oracle::random_ideals(80, 8, 5, 13)) {
        const auto n = I.alphabet().size();
        Monomial z, w;
        for (std::size_t v = 0; v < n; ++v) {
            const auto r = rng() % 4;
            if (r == 0) z.set(v);
            if (r == 1) w.set(v);
        }
        CHECK(colon_by_monomial(I, z | w) == colon_by_monomial(colon_by_monomial(I, z), w));
    }
}

TEST_CASE("format_ideal round trips") {
    for (const auto& I : oracle::random_ideals(40, 10, 6, 14)) CHECK(parse_ideal(format_ideal(I)) == I);
    auto padded = ideal("ab", "abz");
    CHECK(parse_ideal(format_ideal(padded)) == padded);
}
