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

#include "opalg/scenarios.hpp"

#include <string>
#include <utility>

#include "opalg/errors.hpp"

namespace opalg {

LiarScenario LiarScenario::make(Matrix t, Matrix f, Matrix proj, Vector l) {
    if (!t.is_square()) throw ShapeMismatch("token operator must be square");
    std::size_t n = t.rows();
    if (n < 2) throw ValidationError("liar scenario needs dimension at least 2");
    auto check_shape = [n](const Matrix& m, const char* what) {
        if (m.rows() != n || m.cols() != n) {
            throw ShapeMismatch(std::string(what) + " is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " + std::to_string(n) +
                                "x" + std::to_string(n));
        }
    };
    check_shape(f, "falsity operator");
    check_shape(proj, "liar projector");
    if (l.dim() != n) {
        throw ShapeMismatch("liar vector has dimension " + std::to_string(l.dim()) +
                            ", expected " + std::to_string(n));
    }
    if (!is_idempotent(proj)) throw NotIdempotent("liar projector is not idempotent");
    if (rank(proj) != 1) {
        throw NotRankOne("liar projector has rank " + std::to_string(rank(proj)));
    }
    if (l.is_zero()) throw ValidationError("liar vector is zero");
    if (proj.apply(l) != l) {
        throw ValidationError("liar projector does not fix the liar vector");
    }
    return LiarScenario{n, std::move(t), std::move(f), std::move(proj), std::move(l)};
}

LiarScenario LiarScenario::from_projector(Matrix t, Matrix f, Matrix proj) {
    if (!proj.is_square()) throw ShapeMismatch("liar projector must be square");
    std::size_t pick = proj.cols();
    for (std::size_t j = 0; j < proj.cols(); ++j) {
        if (!proj.col(j).is_zero()) {
            pick = j;
            break;
        }
    }
    if (pick == proj.cols()) throw NotRankOne("liar projector is zero");
    Vector l = proj.col(pick);
    return make(std::move(t), std::move(f), std::move(proj), std::move(l));
}

LiarVerdict liar_collapse_check(const LiarScenario& s) {
    Matrix c = commutator(s.token_op, s.liar_proj);
    if (!c.is_zero()) {
        return LiarVerdict{false, std::nullopt, false, std::move(c)};
    }
    // [T, P] = 0 with P rank one fixing |L> puts T|L> = P T|L> back on the
    // liar line; read off the exact eigenvalue at a nonzero coordinate.
    Vector tl = s.token_op.apply(s.liar_vec);
    std::size_t pivot = 0;
    while (s.liar_vec[pivot].is_zero()) ++pivot;
    Rational lambda = tl[pivot] / s.liar_vec[pivot];
    if (tl != lambda * s.liar_vec) {
        throw Error("internal: collapse without an exact eigenvector");
    }
    bool demonstrative = lambda.is_one();
    return LiarVerdict{true, std::move(lambda), demonstrative, std::nullopt};
}

SupplementedLiar build_supplemented_liar(std::size_t dim) {
    if (dim < 2) throw ValidationError("supplemented liar needs dimension at least 2");
    // Token block [[1,1],[0,0]] on the liar pair; identity on any context
    // coordinates beyond it.
    Matrix t = Matrix::zero(dim, dim);
    t.at(0, 0) = Rational(1);
    t.at(0, 1) = Rational(1);
    for (std::size_t i = 2; i < dim; ++i) t.at(i, i) = Rational(1);
    Matrix f = t;
    Matrix proj = Matrix::zero(dim, dim);
    proj.at(0, 0) = Rational(1);
    Matrix sigma = Matrix::zero(dim, dim);
    if (dim == 2) {
        // No room for a context block; T itself is a non-scalar supplement.
        sigma = t;
    } else {
        sigma.at(dim - 1, dim - 1) = Rational(1);
    }
    LiarScenario scenario =
        LiarScenario::make(std::move(t), std::move(f), std::move(proj), Vector::unit(dim, 0));
    if (commutator(scenario.token_op, scenario.liar_proj).is_zero()) {
        throw Error("internal: supplemented liar fails to break the collapse");
    }
    if (!commutator(scenario.token_op, sigma).is_zero() ||
        !commutator(scenario.falsity_op, sigma).is_zero()) {
        throw Error("internal: supplement leaves the joint commutant");
    }
    if (sigma == sigma.at(0, 0) * Matrix::identity(dim)) {
        throw Error("internal: supplement is scalar");
    }
    return SupplementedLiar{std::move(scenario), std::move(sigma)};
}

ClassAToyBuild build_classA_toy(std::size_t n_features, bool active) {
    if (n_features < 1) throw ValidationError("toy needs at least one feature");
    std::size_t n = n_features;
    std::size_t dim = 2 * n;
    Matrix u = Matrix::zero(dim, dim);
    if (active) {
        // Swap each feature with its contrast: off-diagonal identity blocks.
        for (std::size_t i = 0; i < n; ++i) {
            u.at(i, n + i) = Rational(1);
            u.at(n + i, i) = Rational(1);
        }
    } else {
        // Rescale features, leave the table coordinates alone.
        for (std::size_t i = 0; i < n; ++i) {
            u.at(i, i) = Rational(2);
            u.at(n + i, n + i) = Rational(1);
        }
    }
    Matrix d = Matrix::zero(dim, dim);
    for (std::size_t i = 0; i < n; ++i) {
        d.at(i, i) = Rational(1);
        d.at(n + i, n + i) = Rational(-1);
    }
    ClassAToy toy{n, {}, {}, u};
    for (std::size_t i = 0; i < n; ++i) toy.feature_basis.push_back(i);
    for (std::size_t i = 0; i < dim; ++i) toy.discrimination_table.push_back(d.row(i));
    ActionTriple triple(u, std::move(d), NcExpr::gen(Generator{kDiscriminationName, false}), {});
    ActivityResult activity = is_active_classA(triple);
    if (activity.active != active) {
        throw Error("internal: toy activity does not match the request");
    }
    return ClassAToyBuild{std::move(toy), std::move(triple)};
}

WitnessReport find_witnesses(const Matrix& u, const Matrix& d) {
    if (!u.is_square() || !d.is_square() || u.rows() != d.rows()) {
        throw ShapeMismatch("witness search needs square operators of one dimension");
    }
    Matrix du = d * u;
    SubspaceBasis ker_d = kernel_basis(d);
    SubspaceBasis ker_du = kernel_basis(du);
    WitnessReport report{std::nullopt, std::nullopt, ker_d.dim(), ker_du.dim(),
                         kernel_basis(u).dim(), rank(u)};
    for (const Vector& v : ker_du.vectors()) {
        if (!d.apply(v).is_zero()) {
            report.grafting = v;
            break;
        }
    }
    for (const Vector& v : ker_d.vectors()) {
        if (!du.apply(v).is_zero()) {
            report.supplementary = v;
            break;
        }
    }
    // Absences are certified, not just unobserved: no grafting witness
    // means ker(DU) <= ker(D), and symmetrically.
    if (!report.grafting) {
        for (const Vector& v : ker_du.vectors()) {
            if (!ker_d.contains(v)) throw Error("internal: missed a grafting witness");
        }
    }
    if (!report.supplementary) {
        for (const Vector& v : ker_d.vectors()) {
            if (!ker_du.contains(v)) throw Error("internal: missed a supplementary witness");
        }
    }
    return report;
}

} // namespace opalg
