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

#pragma once

#include <cstddef>
#include <optional>

#include "opalg/matrix.hpp"
#include "opalg/triple.hpp"

namespace opalg {

/// A liar configuration: a truth-evaluation operator T, a falsity operator
/// F, and a rank-one idempotent onto the liar line with a distinguished
/// vector spanning it. dim >= 2.
struct LiarScenario {
    std::size_t dim;
    Matrix token_op;  // T
    Matrix falsity_op;
    Matrix liar_proj; // rank-one idempotent
    Vector liar_vec;  // spans the image of liar_proj

    /// Validates: square operators of one dimension, liar_proj idempotent
    /// (NotIdempotent) of rank one (NotRankOne), liar_vec nonzero and fixed
    /// by liar_proj (ValidationError).
    static LiarScenario make(Matrix t, Matrix f, Matrix proj, Vector l);
    /// Same, deriving the liar vector as the first nonzero column of the
    /// projector.
    static LiarScenario from_projector(Matrix t, Matrix f, Matrix proj);
};

/// Collapse: [T, P] = 0 forces T to fix the liar line, with the exact
/// eigenvalue reported; lambda = 1 is the degenerate sign that the liar
/// token evaluates to itself.
struct LiarVerdict {
    bool collapsed;
    std::optional<Rational> lambda;
    bool demonstrative; // lambda == 1
    std::optional<Matrix> commutator_value; // [T, P] when not collapsed
};
LiarVerdict liar_collapse_check(const LiarScenario& s);

/// A liar whose evaluation operator escapes the collapse by acting across
/// a supplementary coordinate. `supplement` is the projector onto that
/// coordinate.
struct SupplementedLiar {
    LiarScenario scenario;
    Matrix supplement;
};
/// dim >= 2 required.
SupplementedLiar build_supplemented_liar(std::size_t dim);

/// Minimal discrimination toy on 2*n_features coordinates: features first,
/// then their contrasts. The discrimination is assembled from the contrast
/// table (its rows); the update rewrites both blocks.
struct ClassAToy {
    std::size_t n_features;
    std::vector<std::size_t> feature_basis;  // coordinates 0 .. n_features-1
    std::vector<Vector> discrimination_table; // rows of the discrimination
    Matrix update_rule;
};

/// Active: the update swaps each feature with its contrast while the
/// discrimination weighs them oppositely, so [U, D] != 0. Inactive: the
/// update rescales the feature block and fixes the table coordinates,
/// placing D in Comm(U). The triple carries R = D as an expression.
struct ClassAToyBuild {
    ClassAToy toy;
    ActionTriple triple;
};
ClassAToyBuild build_classA_toy(std::size_t n_features, bool active);

/// Kernel witnesses separating "discriminates but the update forgets"
/// (grafting: Dv != 0, DUv = 0) from "invisible until updated"
/// (supplementary: Dv = 0, DUv != 0). Witnesses are picked from canonical
/// kernel bases, first match; absence is certified by the corresponding
/// subspace containment.
struct WitnessReport {
    std::optional<Vector> grafting;      // in ker(DU), outside ker(D)
    std::optional<Vector> supplementary; // in ker(D), outside ker(DU)
    std::size_t ker_d_dim;
    std::size_t ker_du_dim;
    std::size_t ker_u_dim;
    std::size_t rank_u;
};
WitnessReport find_witnesses(const Matrix& u, const Matrix& d);

} // namespace opalg
