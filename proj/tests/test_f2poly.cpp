#include "doctest.h"

#include "symca/bs_rule.hpp"
#include "symca/error.hpp"
#include "symca/f2poly.hpp"
#include "symca/relations.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

using namespace symca;

namespace {

constexpr unsigned kLeaves = 8;
const F2Poly::Monomial kAll = (1u << (kLeaves + 2)) - 1;

F2Poly::Monomial leaf(unsigned i) { return 1u << (i - 1); } // 1-based
F2Poly::Monomial center() { return 1u << kLeaves; }
F2Poly::Monomial next() { return 1u << (kLeaves + 1); }

SymmetricRule named(std::string_view bs) { return bs_to_rule(parse_bs(bs, 8)); }

} // namespace

TEST_CASE("elementary symmetric polynomials") {
    std::vector<unsigned> three{0, 1, 2};
    CHECK(format_poly(esym(1, three, kLeaves)) == "x1 + x2 + x3");
    CHECK(esym(0, three, kLeaves) == F2Poly::one(kLeaves));
    std::vector<unsigned> two{0, 1};
    CHECK(format_poly(esym(2, two, kLeaves)) == "x1*x2");
    CHECK(esym(3, two, kLeaves).is_zero());
    std::vector<unsigned> eight(8);
    std::iota(eight.begin(), eight.end(), 0u);
    for (unsigned m = 0; m <= 8; ++m) {
        auto e = esym(m, eight, kLeaves);
        std::size_t expected = 1;
        for (unsigned i = 0; i < m; ++i)
            expected = expected * (8 - i) / (i + 1);
        CHECK(e.terms() == expected);
        // sigma_m at a point with w ones equals C(w, m) mod 2
        for (unsigned w = 0; w <= 8; ++w) {
            std::size_t c = 1;
            for (unsigned i = 0; i < m; ++i)
                c = c * (w - std::min(w, i)) / (i + 1);
            if (m > w)
                c = 0;
            CHECK(e.eval((1u << w) - 1, kAll) == (c & 1));
        }
    }
}

TEST_CASE("field arithmetic") {
    auto x1 = F2Poly::variable(kLeaves, 0);
    auto x2 = F2Poly::variable(kLeaves, 1);
    CHECK((x1 + x1).is_zero());
    CHECK(x1 * x1 == x1);
    auto s = x1 + x2;
    CHECK(s * s == s);
    CHECK(format_poly((x1 + F2Poly::one(kLeaves)) * x2) == "x2 + x1*x2");
    CHECK(format_poly(F2Poly(kLeaves)) == "0");
    CHECK(format_poly(F2Poly::one(kLeaves)) == "1");
    CHECK(variable_name(8, 8) == "x9");
    CHECK(variable_name(9, 8) == "xp9");
}

TEST_CASE("Moebius transform is an involution") {
    std::mt19937_64 rng(4);
    std::vector<std::uint8_t> t(1 << 10);
    for (auto& v : t)
        v = rng() & 1;
    auto copy = t;
    moebius_transform(t);
    moebius_transform(t);
    CHECK(t == copy);
}

TEST_CASE("constant rule gives the bare next-state variable") {
    auto zero = SymmetricRule::constant(2, 8, Level::Leaves, 0);
    CHECK(format_poly(rule_to_anf(zero)) == "xp9");
    auto one = SymmetricRule::constant(2, 3, Level::Leaves, 1);
    CHECK(format_poly(rule_to_anf(one)) == "1 + xp4");
}

TEST_CASE("fixtures equal the transformed rules") {
    struct Row {
        NamedRule name;
        const char* bs;
        unsigned degree;
        std::size_t terms;
    };
    for (auto row : {Row{NamedRule::ConwaysLife, "B3/S23", 8, 185}, Row{NamedRule::HighLife, "B36/S23", 6, 169},
                     Row{NamedRule::DayAndNight, "B3678/S34678", 8, 256}}) {
        auto anf = rule_to_anf(named(row.bs));
        auto fixture = life_polynomial_fixture(row.name);
        CHECK(anf == fixture);
        CHECK(anf.degree() == row.degree);
        CHECK(anf.terms() == row.terms);
        CHECK(format_bs(named_rule_bs(row.name)) == row.bs);
    }
    CHECK(life_polynomial_fixture(NamedRule::HighLife) != life_polynomial_fixture(NamedRule::ConwaysLife));
    CHECK_THROWS_AS(parse_named_rule("Seeds"), Error);
}

TEST_CASE("evaluating the Conway relation") {
    auto p = life_polynomial_fixture(NamedRule::ConwaysLife);
    CHECK(p.eval(0, kAll) == 0);
    auto born = leaf(1) | leaf(2) | leaf(3);
    CHECK(p.eval(born | next(), kAll) == 0);
    CHECK(p.eval(born, kAll) == 1);
    CHECK_THROWS_AS(p.eval(0, kAll & ~next()), Error);
}

TEST_CASE("ANF reproduces the rule table") {
    std::mt19937_64 rng(12);
    for (unsigned k = 1; k <= 8; ++k)
        for (int trial = 0; trial < 5; ++trial) {
            std::vector<std::uint8_t> t(2 * k + 2);
            for (auto& v : t)
                v = rng() & 1;
            SymmetricRule r(2, k, Level::Leaves, t);
            auto p = rule_to_anf(r);
            const F2Poly::Monomial all = (1u << (k + 2)) - 1;
            for (F2Poly::Monomial x = 0; x < (1u << (k + 1)); ++x) {
                unsigned w = std::popcount(x & ((1u << k) - 1));
                unsigned c = x >> k & 1;
                // p = x' + f, so p(x, x'=0) = f(x)
                REQUIRE(p.eval(x, all) == r.apply(w, static_cast<std::uint8_t>(c)));
            }
        }
}

TEST_CASE("ANF is invariant under leaf permutations") {
    std::mt19937_64 rng(9);
    auto p = rule_to_anf(named("B36/S23"));
    std::vector<unsigned> perm(8);
    std::iota(perm.begin(), perm.end(), 0u);
    for (int i = 0; i < 20; ++i) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(p.permute_leaves(perm) == p);
    }
    // A non-symmetric polynomial does move.
    auto x1 = F2Poly::variable(8, 0);
    std::vector<unsigned> swap01{1, 0, 2, 3, 4, 5, 6, 7};
    CHECK(x1.permute_leaves(swap01) == F2Poly::variable(8, 1));
}

TEST_CASE("expression parser") {
    CHECK(parse_polynomial("x'_9 + x_9") == parse_polynomial("xp9 + x9"));
    CHECK(parse_polynomial("σ_1") == parse_polynomial("s_1"));
    CHECK(parse_polynomial("{x1 + 1}(x2 + 1)") == parse_polynomial("x1 x2 + x1 + x2 + 1"));
    CHECK(parse_polynomial("x1*x1 + x1").is_zero());
    CHECK(parse_polynomial(life_polynomial_text(NamedRule::ConwaysLife)) ==
          life_polynomial_fixture(NamedRule::ConwaysLife));
    CHECK_THROWS_AS(parse_polynomial("x_10"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x_1 +"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(x_1"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x_i"), Error); // holes need a template
}

TEST_CASE("relation templates") {
    RelationTemplate t("x'_9 s^{ij}_1");
    CHECK(t.holes() == "ij");
    CHECK(t.admissible_tuples().size() == 28);
    std::vector<unsigned> ij{1, 2};
    std::vector<unsigned> rest{2, 3, 4, 5, 6, 7};
    auto expected = F2Poly::variable(8, 9) * esym(1, rest, 8);
    CHECK(t.instantiate(ij) == expected);
    CHECK(RelationTemplate("x'_9 x_i x_j x_k x_l").admissible_tuples().size() == 70);
    CHECK(RelationTemplate("x'_9 + 1").admissible_tuples().size() == 1);
}

TEST_CASE("decomposition fixtures hold") {
    auto life = decomposition_fixture(NamedRule::ConwaysLife);
    REQUIRE(life.size() == 5);
    CHECK(life.back().text() == "x'_9 x_i x_j x_k x_l");
    auto high = decomposition_fixture(NamedRule::HighLife);
    REQUIRE(high.size() == 5);
    CHECK(high.back().text() == "x'_9 x_9 x_i x_j x_k x_l");
    auto dn = decomposition_fixture(NamedRule::DayAndNight);
    CHECK(dn.size() == 3);

    for (auto name : {NamedRule::ConwaysLife, NamedRule::HighLife, NamedRule::DayAndNight}) {
        auto rule = bs_to_rule(named_rule_bs(name));
        for (const auto& t : decomposition_fixture(name)) {
            CAPTURE(t.text());
            auto check = verify_implied_relation(rule, t);
            CHECK(check.holds);
            CHECK(check.assignments_per_tuple == 512);
            CHECK(check.tuples_checked == t.admissible_tuples().size());
        }
    }
    auto dn_rule = bs_to_rule(named_rule_bs(NamedRule::DayAndNight));
    auto combined = verify_implied_relation(dn_rule, day_and_night_combined_relation());
    CHECK(combined.holds);
    CHECK(combined.tuples_checked == 8);
}

TEST_CASE("false relations produce a counterexample") {
    auto life = named("B3/S23");
    auto check = verify_implied_relation(life, RelationTemplate("x'_9 x_i x_j"));
    REQUIRE_FALSE(check.holds);
    REQUIRE(check.counterexample);
    const auto& cx = *check.counterexample;
    REQUIRE(cx.hole_values.size() == 2);
    auto a = cx.assignment;
    // The counterexample is a genuine transition of the rule...
    unsigned w = std::popcount(a & 0xffu);
    CHECK(((a & next()) != 0) == (life.apply(w, (a & center()) ? 1 : 0) == 1));
    // ...on which the instantiated relation is nonzero.
    CHECK(RelationTemplate("x'_9 x_i x_j").instantiate(cx.hole_values).eval(a, kAll));
    CHECK_FALSE(format_assignment(a, 8).empty());

    // HighLife's birth on 6 breaks Conway's four-neighbor relation.
    auto high = named("B36/S23");
    CHECK_FALSE(verify_implied_relation(high, decomposition_fixture(NamedRule::ConwaysLife)[4]).holds);
    CHECK_THROWS_AS(verify_implied_relation(bs_to_rule(parse_bs("B3/S23", 6)), RelationTemplate("x'_9")),
                    Error);
}
