/*
 * Copyright 2026 The opalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "opalg/errors.hpp"
#include "opalg/ncexpr.hpp"

using opalg::Generator;
using opalg::Matrix;
using opalg::NcExpr;
using opalg::NormalForm;
using opalg::Rational;
using opalg::Word;

namespace {

const std::map<std::string, Generator>& table() {
    static const std::map<std::string, Generator> t{
        {"U", Generator{"U", false}},
        {"D", Generator{"D", false}},
        {"A", Generator{"A", true}},
        {"B", Generator{"B", false}},
    };
    return t;
}

NcExpr parse(const std::string& text) {
    return opalg::parse_expr(text, table());
}

bool same_normal_form(const NcExpr& a, const NcExpr& b) {
    NormalForm na = opalg::normal_form(a);
    NormalForm nb = opalg::normal_form(b);
    if (na.monomials.size() != nb.monomials.size()) return false;
    for (std::size_t i = 0; i < na.monomials.size(); ++i) {
        if (na.monomials[i].coeff != nb.monomials[i].coeff) return false;
        if (na.monomials[i].word != nb.monomials[i].word) return false;
    }
    return true;
}

Matrix swap2() {
    return Matrix::from_rows({{0, 1}, {1, 0}});
}

Matrix sign2() {
    return Matrix::diagonal({1, -1});
}

opalg::Assignment base_assignment() {
    return {{"U", swap2()}, {"D", sign2()}};
}

} // namespace

TEST_CASE("normal form sorts words length first, then lexicographically") {
    NormalForm nf = opalg::normal_form(parse("U*D + D"));
    REQUIRE(nf.monomials.size() == 2);
    CHECK(nf.monomials[0].word == Word{"D"});
    CHECK(nf.monomials[0].coeff == Rational(1));
    CHECK(nf.monomials[1].word == Word{"U", "D"});

    NormalForm cross = opalg::normal_form(parse("U*D - D*U"));
    REQUIRE(cross.monomials.size() == 2);
    CHECK(cross.monomials[0].word == Word{"D", "U"});
    CHECK(cross.monomials[0].coeff == Rational(-1));
    CHECK(cross.monomials[1].word == Word{"U", "D"});
    CHECK(cross.monomials[1].coeff == Rational(1));
}

TEST_CASE("cancellation yields the empty normal form") {
    NormalForm nf = opalg::normal_form(parse("D - D"));
    CHECK(nf.monomials.empty());
    CHECK(opalg::to_string(opalg::normalized_expr(nf)) == "0");
}

TEST_CASE("grammar: juxtaposition, bare rationals, powers, parentheses") {
    CHECK(same_normal_form(parse("2U"), parse("2*U")));
    CHECK(same_normal_form(parse("3/4*D"), opalg::NcExpr::scalar_mul(
                                                Rational(3, 4), opalg::NcExpr::gen(Generator{"D", false}))));
    CHECK(same_normal_form(parse("D^3"), parse("D*D*D")));
    CHECK(same_normal_form(parse("(U+D)^2"), parse("U^2 + U*D + D*U + D^2")));
    CHECK(same_normal_form(parse("-U + 2"), parse("2 - U")));
    CHECK(same_normal_form(parse("U(D+B)"), parse("U*D + U*B")));
    CHECK(same_normal_form(parse("D^0"), parse("1")));
    CHECK(same_normal_form(parse("5"), opalg::NcExpr::constant(Rational(5))));
}

TEST_CASE("parse failures carry a column, unknown names are semantic") {
    CHECK_THROWS_AS(parse("U +"), opalg::ParseError);
    CHECK_THROWS_AS(parse("(U"), opalg::ParseError);
    CHECK_THROWS_AS(parse("U^"), opalg::ParseError);
    CHECK_THROWS_AS(parse("U^-1"), opalg::ParseError);
    CHECK_THROWS_AS(parse(""), opalg::ParseError);
    CHECK_THROWS_AS(parse("*U"), opalg::ParseError);
    try {
        parse("2.5*D");
        FAIL("expected ParseError");
    } catch (const opalg::ParseError& e) {
        CHECK(e.column == 2);
    }
    CHECK_THROWS_AS(parse("X + U"), opalg::ValidationError);
    CHECK_THROWS_AS(parse("D^1025"), opalg::ValidationError);
    CHECK(same_normal_form(parse("D^1024"), parse("D^1024")));
}

TEST_CASE("factories reject empty aggregates") {
    CHECK_THROWS_AS(NcExpr::sum({}), opalg::Error);
    CHECK_THROWS_AS(NcExpr::product({}), opalg::Error);
    CHECK_THROWS_AS(NcExpr::power(NcExpr::constant(Rational(1)), 2000), opalg::ValidationError);
}

TEST_CASE("normal form records generator tags and rejects conflicts") {
    NormalForm nf = opalg::normal_form(parse("A*D"));
    CHECK(nf.generators.at("A").commutes_with_update);
    CHECK(!nf.generators.at("D").commutes_with_update);

    NcExpr conflict = NcExpr::product(
        {NcExpr::gen(Generator{"A", true}), NcExpr::gen(Generator{"A", false})});
    CHECK_THROWS_AS(opalg::normal_form(conflict), opalg::ValidationError);
}

TEST_CASE("rendered normal forms reparse to themselves") {
    for (const char* text : {"U*D - D*U", "2U + 3/4*B*D^2 - 1", "(U+D)*(U-D)", "A*D*A",
                             "-(U - D)^3", "1/2"}) {
        NcExpr e = parse(text);
        std::string rendered = opalg::to_string(opalg::normalized_expr(opalg::normal_form(e)));
        CHECK(same_normal_form(e, parse(rendered)));
    }
}

TEST_CASE("random trees round-trip through rendering") {
    std::mt19937_64 rng(555);
    std::vector<NcExpr> gens{NcExpr::gen(Generator{"U", false}), NcExpr::gen(Generator{"D", false}),
                             NcExpr::gen(Generator{"A", true})};
    auto rand_expr = [&](auto&& self, int depth) -> NcExpr {
        if (depth == 0 || rng() % 4 == 0) {
            if (rng() % 4 == 0) return NcExpr::constant(Rational(static_cast<long>(rng() % 7) - 3));
            return gens[rng() % gens.size()];
        }
        switch (rng() % 4) {
            case 0: {
                std::vector<NcExpr> terms;
                for (std::size_t i = 0; i < 1 + rng() % 3; ++i) terms.push_back(self(self, depth - 1));
                return NcExpr::sum(std::move(terms));
            }
            case 1: {
                std::vector<NcExpr> factors;
                for (std::size_t i = 0; i < 1 + rng() % 3; ++i)
                    factors.push_back(self(self, depth - 1));
                return NcExpr::product(std::move(factors));
            }
            case 2:
                return NcExpr::scalar_mul(Rational(static_cast<long>(rng() % 9) - 4),
                                          self(self, depth - 1));
            default:
                return NcExpr::power(self(self, depth - 1), static_cast<unsigned>(rng() % 4));
        }
    };
    for (int i = 0; i < 200; ++i) {
        NcExpr e = rand_expr(rand_expr, 3);
        std::string rendered = opalg::to_string(opalg::normalized_expr(opalg::normal_form(e)));
        CHECK(same_normal_form(e, parse(rendered)));
    }
}

TEST_CASE("derivation expansion splits at each bracket-operand occurrence") {
    Generator d{"D", false};

    opalg::ExpansionForm none = opalg::leibniz_expand(parse("A^2 + 3"), d);
    CHECK(none.terms.empty());
    CHECK(opalg::to_string(none) == "0");

    opalg::ExpansionForm single = opalg::leibniz_expand(parse("D"), d);
    REQUIRE(single.terms.size() == 1);
    CHECK(same_normal_form(single.terms[0].left, parse("1")));
    CHECK(same_normal_form(single.terms[0].right, parse("1")));

    opalg::ExpansionForm square = opalg::leibniz_expand(parse("D^2"), d);
    REQUIRE(square.terms.size() == 2);
    CHECK(same_normal_form(square.terms[0].left, parse("1")));
    CHECK(same_normal_form(square.terms[0].right, parse("D")));
    CHECK(same_normal_form(square.terms[1].left, parse("D")));
    CHECK(same_normal_form(square.terms[1].right, parse("1")));

    opalg::ExpansionForm mixed = opalg::leibniz_expand(parse("A*D*A*D"), d);
    REQUIRE(mixed.terms.size() == 2);
    CHECK(same_normal_form(mixed.terms[0].left, parse("A")));
    CHECK(same_normal_form(mixed.terms[0].right, parse("A*D")));
    CHECK(same_normal_form(mixed.terms[1].left, parse("A*D*A")));
    CHECK(same_normal_form(mixed.terms[1].right, parse("1")));

    opalg::ExpansionForm scaled = opalg::leibniz_expand(parse("3*A*D"), d);
    REQUIRE(scaled.terms.size() == 1);
    CHECK(same_normal_form(scaled.terms[0].left, parse("3*A")));
    CHECK(same_normal_form(scaled.terms[0].right, parse("1")));
}

TEST_CASE("expansion demands tagged coefficients and an untagged operand") {
    Generator d{"D", false};
    CHECK_THROWS_AS(opalg::leibniz_expand(parse("B*D"), d), opalg::UntaggedGenerator);
    // The update symbol itself never carries the tag, so it cannot serve as
    // an expansion coefficient either.
    CHECK_THROWS_AS(opalg::leibniz_expand(parse("U*D"), d), opalg::UntaggedGenerator);
    CHECK_THROWS_AS(opalg::leibniz_expand(parse("D"), Generator{"D", true}),
                    opalg::ValidationError);
}

TEST_CASE("evaluation is exact and checks shapes, assignments, tags") {
    opalg::Assignment a = base_assignment();
    CHECK(opalg::evaluate(parse("U*D"), a, 2) == Matrix::from_rows({{0, -1}, {1, 0}}));
    CHECK(opalg::evaluate(parse("2*U + 1"), a, 2) == Matrix::from_rows({{1, 2}, {2, 1}}));
    CHECK(opalg::evaluate(parse("U^2"), a, 2) == Matrix::identity(2));
    CHECK(opalg::evaluate(parse("U - U"), a, 2).is_zero());

    CHECK_THROWS_AS(opalg::evaluate(parse("U*B"), a, 2), opalg::MissingAssignment);
    CHECK_THROWS_AS(opalg::evaluate(parse("U*D"), a, 3), opalg::ShapeMismatch);

    // Tagged generator assigned a matrix that fails to commute with U.
    opalg::Assignment bad = a;
    bad.emplace("A", Matrix::diagonal({1, 2}));
    CHECK_THROWS_AS(opalg::evaluate(parse("A*D"), bad, 2), opalg::TagViolation);

    opalg::Assignment good = a;
    good.emplace("A", Matrix::from_rows({{1, 1}, {1, 1}})); // commutes with the swap
    CHECK(opalg::evaluate(parse("A*D"), good, 2) == Matrix::from_rows({{1, -1}, {1, -1}}));
}

TEST_CASE("expansion evaluates to the direct bracket") {
    Generator d{"D", false};
    opalg::Assignment a = base_assignment();
    a.emplace("A", Matrix::from_rows({{1, 1}, {1, 1}}));

    for (const char* text : {"D", "D^2", "A*D", "A*D*A*D", "A*D^2 - 2*D", "A + D", "A^2"}) {
        NcExpr e = parse(text);
        Matrix value = opalg::evaluate(e, a, 2);
        Matrix direct = opalg::commutator(swap2(), value);
        opalg::ExpansionForm form = opalg::leibniz_expand(e, d);
        CHECK(opalg::evaluate_expansion(form, a, 2) == direct);
    }

    // Empty expansion evaluates to zero without consulting the assignment.
    CHECK(opalg::evaluate_expansion(opalg::leibniz_expand(parse("A"), d), {}, 2).is_zero());
}
