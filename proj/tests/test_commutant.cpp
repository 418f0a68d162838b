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

#include <random>

#include "doctest.h"

#include "opalg/commutant.hpp"
#include "opalg/errors.hpp"

using opalg::Matrix;
using opalg::ProjectorSearchOutcome;
using opalg::Rational;
using opalg::SubalgebraBasis;

namespace {

Matrix swap2() {
    return Matrix::from_rows({{0, 1}, {1, 0}});
}

Matrix sign2() {
    return Matrix::diagonal({1, -1});
}

Matrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
    Matrix m(n, n);
    const unsigned long width = static_cast<unsigned long>(hi - lo + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m.at(i, j) = Rational(lo + static_cast<long>(rng() % width));
        }
    }
    return m;
}

} // namespace

TEST_CASE("commutant of a diagonal with distinct entries is the diagonals") {
    SubalgebraBasis c = opalg::commutant_basis(Matrix::diagonal({1, 2}));
    REQUIRE(c.dim() == 2);
    CHECK(c.elements()[0] == Matrix::diagonal({1, 0}));
    CHECK(c.elements()[1] == Matrix::diagonal({0, 1}));
    CHECK(c.closed());
    CHECK(c.identity_in_span());
    CHECK(c.span_contains(Matrix::diagonal({5, -7})));
    CHECK(!c.span_contains(swap2()));
}

TEST_CASE("commutant of the swap") {
    SubalgebraBasis c = opalg::commutant_basis(swap2());
    REQUIRE(c.dim() == 2);
    CHECK(c.elements()[0] == swap2());
    CHECK(c.elements()[1] == Matrix::identity(2));
}

TEST_CASE("commutant of a nilpotent") {
    Matrix n = Matrix::from_rows({{0, 1}, {0, 0}});
    SubalgebraBasis c = opalg::commutant_basis(n);
    REQUIRE(c.dim() == 2);
    CHECK(c.elements()[0] == n);
    CHECK(c.elements()[1] == Matrix::identity(2));
}

TEST_CASE("commutant of the identity is everything") {
    CHECK(opalg::commutant_basis(Matrix::identity(2)).dim() == 4);
    CHECK(opalg::commutant_basis(Matrix::identity(3)).dim() == 9);
}

TEST_CASE("dimension budget is enforced before any heavy work") {
    CHECK_THROWS_AS(opalg::commutant_basis(Matrix::identity(33)), opalg::DimBudgetExceeded);
    CHECK_THROWS_AS(opalg::algebra_closure({}, 33), opalg::DimBudgetExceeded);
}

TEST_CASE("intersection of commutants") {
    SubalgebraBasis joint =
        opalg::intersect({opalg::commutant_basis(swap2()), opalg::commutant_basis(sign2())});
    REQUIRE(joint.dim() == 1);
    CHECK(joint.elements()[0] == Matrix::identity(2));
    CHECK(joint.closed());

    SubalgebraBasis e00(2, {Matrix::diagonal({1, 0})});
    SubalgebraBasis e11(2, {Matrix::diagonal({0, 1})});
    CHECK(opalg::intersect({e00, e11}).dim() == 0);
    CHECK(opalg::intersect({e00}).dim() == 1);
    CHECK(!opalg::intersect({e00}).closed());
    CHECK_THROWS_AS(opalg::intersect({}), opalg::Error);
}

TEST_CASE("unital closure saturates under products") {
    CHECK(opalg::algebra_closure({}, 2).dim() == 1);
    CHECK(opalg::algebra_closure({Matrix::from_rows({{0, 1}, {0, 0}})}, 2).dim() == 2);
    SubalgebraBasis full = opalg::algebra_closure({swap2(), sign2()}, 2);
    CHECK(full.dim() == 4);
    CHECK(full.closed());
    CHECK(full.span_contains(Matrix::from_rows({{3, 1}, {-2, 7}})));
}

TEST_CASE("projector search finds the diagonal idempotent immediately") {
    ProjectorSearchOutcome o =
        opalg::find_unifying_projector(opalg::commutant_basis(Matrix::diagonal({1, 2})));
    CHECK(o.verdict == ProjectorSearchOutcome::Verdict::Found);
    REQUIRE(o.projector.has_value());
    CHECK(*o.projector == Matrix::diagonal({1, 0}));
    CHECK(o.attempts == 1);
}

TEST_CASE("projector search reaches the spectral phase on the swap commutant") {
    ProjectorSearchOutcome o = opalg::find_unifying_projector(opalg::commutant_basis(swap2()));
    CHECK(o.verdict == ProjectorSearchOutcome::Verdict::Found);
    REQUIRE(o.projector.has_value());
    Matrix half(2, 2);
    half.at(0, 0) = Rational(1, 2);
    half.at(0, 1) = Rational(1, 2);
    half.at(1, 0) = Rational(1, 2);
    half.at(1, 1) = Rational(1, 2);
    CHECK(*o.projector == half);
    CHECK(opalg::is_idempotent(*o.projector));
}

TEST_CASE("projector search proves scalar and empty spans trivial") {
    SubalgebraBasis scalars(2, {Matrix::identity(2)});
    ProjectorSearchOutcome o = opalg::find_unifying_projector(scalars);
    CHECK(o.verdict == ProjectorSearchOutcome::Verdict::ProvedTrivial);
    CHECK(o.attempts == 0);

    SubalgebraBasis empty(2, std::vector<Matrix>{});
    CHECK(opalg::find_unifying_projector(empty).verdict ==
          ProjectorSearchOutcome::Verdict::ProvedTrivial);

    // A line spanned by a non-identity matrix is not declared trivial.
    SubalgebraBasis nilline(2, {Matrix::from_rows({{0, 1}, {0, 0}})});
    CHECK(opalg::find_unifying_projector(nilline).verdict ==
          ProjectorSearchOutcome::Verdict::NotFoundWithinBudget);
}

TEST_CASE("projector search respects the budget and validates it") {
    ProjectorSearchOutcome o = opalg::find_unifying_projector(opalg::commutant_basis(swap2()), 1);
    CHECK(o.verdict == ProjectorSearchOutcome::Verdict::NotFoundWithinBudget);
    CHECK(o.attempts == 1);
    CHECK(o.budget == 1);
    CHECK_THROWS_AS(opalg::find_unifying_projector(opalg::commutant_basis(swap2()), 0),
                    opalg::ValidationError);
}

TEST_CASE("projector search is deterministic") {
    SubalgebraBasis full = opalg::algebra_closure({swap2(), sign2()}, 2);
    ProjectorSearchOutcome a = opalg::find_unifying_projector(full, 500, 42);
    ProjectorSearchOutcome b = opalg::find_unifying_projector(full, 500, 42);
    CHECK(a.verdict == b.verdict);
    CHECK(a.attempts == b.attempts);
    REQUIRE(a.projector.has_value());
    REQUIRE(b.projector.has_value());
    CHECK(*a.projector == *b.projector);
    CHECK(full.span_contains(*a.projector));
    CHECK(opalg::is_idempotent(*a.projector));
    CHECK(*a.projector != Matrix::identity(2));
    CHECK(!a.projector->is_zero());
}

TEST_CASE("split preservation report") {
    Matrix p = Matrix::diagonal({1, 0});

    opalg::JacobiRestrictionReport commuting =
        opalg::check_jacobi_restriction(Matrix::diagonal({1, 2}), Matrix::diagonal({3, 4}), p);
    CHECK(commuting.update_preserves);
    CHECK(commuting.discrimination_preserves);
    CHECK(commuting.corollary_applicable);
    CHECK(commuting.bracket_preserves);
    CHECK(commuting.bracket_central); // zero bracket is scalar

    Matrix half(2, 2);
    half.at(0, 0) = Rational(1, 2);
    half.at(0, 1) = Rational(1, 2);
    half.at(1, 0) = Rational(1, 2);
    half.at(1, 1) = Rational(1, 2);
    opalg::JacobiRestrictionReport skew = opalg::check_jacobi_restriction(swap2(), sign2(), half);
    CHECK(skew.update_preserves);
    CHECK(!skew.discrimination_preserves);
    CHECK(!skew.corollary_applicable);
    CHECK(!skew.bracket_preserves);
    CHECK(!skew.bracket_central);

    CHECK_THROWS_AS(opalg::check_jacobi_restriction(swap2(), sign2(), swap2()),
                    opalg::NotIdempotent);
}

TEST_CASE("a nontrivial preserved split restricts the bracket") {
    // 4x4 block pair: both operators fix the split {first two, last two}.
    Matrix u = Matrix::zero(4, 4);
    u.at(0, 1) = 1;
    u.at(1, 0) = 1;
    u.at(2, 2) = 1;
    u.at(3, 3) = 1;
    Matrix d = Matrix::zero(4, 4);
    d.at(0, 0) = 1;
    d.at(1, 1) = -1;
    d.at(2, 2) = 1;
    d.at(3, 3) = 1;
    Matrix p = Matrix::diagonal({0, 0, 1, 1});

    opalg::JacobiRestrictionReport r = opalg::check_jacobi_restriction(u, d, p);
    CHECK(r.update_preserves);
    CHECK(r.discrimination_preserves);
    CHECK(r.corollary_applicable);
    CHECK(r.bracket_preserves);
    CHECK(!r.bracket_central);
}

TEST_CASE("random commutants commute and are product-closed") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 60; ++i) {
        std::size_t n = 2 + rng() % 2;
        Matrix x = random_matrix(rng, n, -3, 3);
        SubalgebraBasis c = opalg::commutant_basis(x);
        CHECK(c.identity_in_span());
        for (const Matrix& e : c.elements()) {
            CHECK(opalg::commutator(x, e).is_zero());
        }
        for (const Matrix& a : c.elements()) {
            for (const Matrix& b : c.elements()) {
                CHECK(c.span_contains(a * b));
            }
        }
        CHECK(opalg::intersect({c, c}).dim() == c.dim());
    }
}
