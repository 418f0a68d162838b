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

#include "opalg/errors.hpp"
#include "opalg/scenarios.hpp"

using opalg::LiarScenario;
using opalg::Matrix;
using opalg::Rational;
using opalg::Vector;

namespace {

Matrix e00() {
    return Matrix::diagonal({1, 0});
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

TEST_CASE("liar scenario validation") {
    Matrix t = Matrix::diagonal({1, 2});
    Matrix f = Matrix::diagonal({0, 1});

    CHECK_NOTHROW(LiarScenario::make(t, f, e00(), Vector::unit(2, 0)));
    CHECK_THROWS_AS(LiarScenario::make(t, f, Matrix::from_rows({{1, 1}, {1, 1}}),
                                       Vector::unit(2, 0)),
                    opalg::NotIdempotent);
    CHECK_THROWS_AS(LiarScenario::make(t, f, Matrix::identity(2), Vector::unit(2, 0)),
                    opalg::NotRankOne);
    CHECK_THROWS_AS(LiarScenario::make(t, f, e00(), Vector(2)), opalg::ValidationError);
    CHECK_THROWS_AS(LiarScenario::make(t, f, e00(), Vector::unit(2, 1)), opalg::ValidationError);
    CHECK_THROWS_AS(LiarScenario::make(Matrix::identity(3), f, e00(), Vector::unit(2, 0)),
                    opalg::ShapeMismatch);
    CHECK_THROWS_AS(LiarScenario::make(Matrix::identity(1), Matrix::identity(1),
                                       Matrix::identity(1), Vector::unit(1, 0)),
                    opalg::ValidationError);

    LiarScenario derived = LiarScenario::from_projector(t, f, Matrix::diagonal({0, 1}));
    CHECK(derived.liar_vec == Vector::unit(2, 1));
    CHECK_THROWS_AS(LiarScenario::from_projector(t, f, Matrix::zero(2, 2)), opalg::NotRankOne);
}

TEST_CASE("commuting evaluation collapses the liar line") {
    LiarScenario s = LiarScenario::from_projector(Matrix::diagonal({1, 2}),
                                                  Matrix::diagonal({0, 1}), e00());
    opalg::LiarVerdict v = opalg::liar_collapse_check(s);
    CHECK(v.collapsed);
    REQUIRE(v.lambda.has_value());
    CHECK(*v.lambda == Rational(1));
    CHECK(v.demonstrative);
    CHECK(!v.commutator_value.has_value());

    LiarScenario s3 = LiarScenario::from_projector(Matrix::diagonal({3, 2}),
                                                   Matrix::diagonal({0, 1}), e00());
    opalg::LiarVerdict v3 = opalg::liar_collapse_check(s3);
    CHECK(v3.collapsed);
    CHECK(*v3.lambda == Rational(3));
    CHECK(!v3.demonstrative);
}

TEST_CASE("non-commuting evaluation escapes the collapse") {
    LiarScenario s = LiarScenario::from_projector(Matrix::from_rows({{1, 1}, {0, 0}}),
                                                  Matrix::zero(2, 2), e00());
    opalg::LiarVerdict v = opalg::liar_collapse_check(s);
    CHECK(!v.collapsed);
    CHECK(!v.lambda.has_value());
    REQUIRE(v.commutator_value.has_value());
    CHECK(*v.commutator_value == Matrix::from_rows({{0, -1}, {0, 0}}));
}

TEST_CASE("supplemented liar construction") {
    opalg::SupplementedLiar two = opalg::build_supplemented_liar(2);
    CHECK(two.scenario.token_op == Matrix::from_rows({{1, 1}, {0, 0}}));
    CHECK(two.scenario.falsity_op == two.scenario.token_op);
    CHECK(two.scenario.liar_proj == e00());
    CHECK(two.scenario.liar_vec == Vector::unit(2, 0));
    CHECK(two.supplement == two.scenario.token_op);
    CHECK(!opalg::liar_collapse_check(two.scenario).collapsed);

    opalg::SupplementedLiar three = opalg::build_supplemented_liar(3);
    CHECK(three.scenario.dim == 3);
    CHECK(three.supplement == Matrix::diagonal({0, 0, 1}));
    CHECK(!opalg::liar_collapse_check(three.scenario).collapsed);
    CHECK(opalg::commutator(three.scenario.token_op, three.supplement).is_zero());
    CHECK(opalg::commutator(three.scenario.falsity_op, three.supplement).is_zero());
    CHECK(opalg::is_idempotent(three.supplement));

    CHECK_THROWS_AS(opalg::build_supplemented_liar(1), opalg::ValidationError);
}

TEST_CASE("discrimination toy: active form") {
    opalg::ClassAToyBuild built = opalg::build_classA_toy(1, true);
    CHECK(built.toy.n_features == 1);
    CHECK(built.toy.feature_basis == std::vector<std::size_t>{0});
    CHECK(built.triple.update() == Matrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(built.triple.discrimination() == Matrix::diagonal({1, -1}));
    CHECK(built.triple.self_rep_is_expression());
    CHECK(built.triple.self_rep_value() == built.triple.discrimination());
    CHECK(opalg::is_active_classA(built.triple).active);
    CHECK(built.triple.discrimination() ==
          Matrix::from_rows({built.toy.discrimination_table[0].entries(),
                             built.toy.discrimination_table[1].entries()}));

    opalg::ClassAToyBuild wide = opalg::build_classA_toy(2, true);
    CHECK(wide.triple.dim() == 4);
    CHECK(wide.triple.discrimination() == Matrix::diagonal({1, 1, -1, -1}));
    Matrix u = wide.triple.update();
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(u.apply(Vector::unit(4, i)) == Vector::unit(4, i + 2));
        CHECK(u.apply(Vector::unit(4, i + 2)) == Vector::unit(4, i));
    }
    CHECK(opalg::is_active_classA(wide.triple).active);
}

TEST_CASE("discrimination toy: inactive form") {
    opalg::ClassAToyBuild built = opalg::build_classA_toy(1, false);
    CHECK(built.triple.update() == Matrix::diagonal({2, 1}));
    CHECK(built.triple.discrimination() == Matrix::diagonal({1, -1}));
    CHECK(!opalg::is_active_classA(built.triple).active);
    CHECK_THROWS_AS(opalg::build_classA_toy(0, true), opalg::ValidationError);
}

TEST_CASE("kernel witnesses: known small cases") {
    // Update forgets the discriminated coordinate.
    opalg::WitnessReport lower = opalg::find_witnesses(Matrix::from_rows({{0, 0}, {1, 0}}), e00());
    REQUIRE(lower.grafting.has_value());
    CHECK(*lower.grafting == Vector::unit(2, 0));
    CHECK(!lower.supplementary.has_value());
    CHECK(lower.ker_d_dim == 1);
    CHECK(lower.ker_du_dim == 2);
    CHECK(lower.ker_u_dim == 1);
    CHECK(lower.rank_u == 1);

    // Shift both ways: one coordinate forgotten, one made visible.
    opalg::WitnessReport shift = opalg::find_witnesses(Matrix::from_rows({{0, 1}, {0, 0}}), e00());
    REQUIRE(shift.grafting.has_value());
    CHECK(*shift.grafting == Vector::unit(2, 0));
    REQUIRE(shift.supplementary.has_value());
    CHECK(*shift.supplementary == Vector::unit(2, 1));

    // The identity update hides nothing.
    opalg::WitnessReport none = opalg::find_witnesses(Matrix::identity(2), e00());
    CHECK(!none.grafting.has_value());
    CHECK(!none.supplementary.has_value());

    CHECK_THROWS_AS(opalg::find_witnesses(Matrix::identity(2), Matrix::identity(3)),
                    opalg::ShapeMismatch);
    CHECK_THROWS_AS(opalg::find_witnesses(Matrix(2, 3), Matrix(2, 3)), opalg::ShapeMismatch);
}

TEST_CASE("kernel witnesses are sound on random pairs") {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 200; ++i) {
        std::size_t n = 2 + rng() % 3;
        Matrix u = random_matrix(rng, n, -2, 2);
        Matrix d = random_matrix(rng, n, -2, 2);
        opalg::WitnessReport r = opalg::find_witnesses(u, d);
        Matrix du = d * u;

        CHECK(r.ker_d_dim == opalg::kernel_basis(d).dim());
        CHECK(r.ker_du_dim == opalg::kernel_basis(du).dim());
        CHECK(r.rank_u + r.ker_u_dim == n);

        if (r.grafting) {
            CHECK(!d.apply(*r.grafting).is_zero());
            CHECK(du.apply(*r.grafting).is_zero());
        } else {
            // No grafting witness means ker(DU) sits inside ker(D).
            CHECK(opalg::kernel_basis(d).contains_span_of(opalg::kernel_basis(du)));
        }
        if (r.supplementary) {
            CHECK(d.apply(*r.supplementary).is_zero());
            CHECK(!du.apply(*r.supplementary).is_zero());
        } else {
            CHECK(opalg::kernel_basis(du).contains_span_of(opalg::kernel_basis(d)));
        }
    }
}
