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

#include "opalg/triple.hpp"

#include <string>

#include "opalg/errors.hpp"

namespace opalg {

namespace {

void require_triple_shapes(const Matrix& u, const Matrix& d) {
    if (!u.is_square()) throw ShapeMismatch("update must be square");
    if (d.rows() != u.rows() || d.cols() != u.cols()) {
        throw ShapeMismatch("discrimination is " + std::to_string(d.rows()) + "x" +
                            std::to_string(d.cols()) + ", update is " + std::to_string(u.rows()) +
                            "x" + std::to_string(u.cols()));
    }
}

} // namespace

ActionTriple::ActionTriple(Matrix update, Matrix discrimination, Matrix self_rep)
    : update_(std::move(update)), discrimination_(std::move(discrimination)),
      self_rep_value_(std::move(self_rep)) {
    require_triple_shapes(update_, discrimination_);
    if (self_rep_value_.rows() != update_.rows() || self_rep_value_.cols() != update_.cols()) {
        throw ShapeMismatch("self-representation shape does not match the update");
    }
}

ActionTriple::ActionTriple(Matrix update, Matrix discrimination, NcExpr self_rep,
                           Assignment coefficients)
    : update_(std::move(update)), discrimination_(std::move(discrimination)),
      self_rep_expr_(std::move(self_rep)), coefficients_(std::move(coefficients)),
      self_rep_value_(1, 1) {
    require_triple_shapes(update_, discrimination_);
    NormalForm nf = normal_form(*self_rep_expr_);
    for (const auto& [name, g] : nf.generators) {
        if (name == kDiscriminationName) {
            if (g.commutes_with_update) {
                throw TagViolation("\"" + name + "\" must not carry the commutation tag");
            }
            continue;
        }
        if (!g.commutes_with_update) {
            throw TagViolation("generator \"" + name +
                               "\" in the self-representation is untagged");
        }
        if (!coefficients_.count(name)) {
            throw MissingAssignment("no coefficient matrix for generator \"" + name + "\"");
        }
    }
    // evaluate() re-checks shapes and the tag promises against the update.
    self_rep_value_ = evaluate(*self_rep_expr_, full_assignment(), dim());
}

Assignment ActionTriple::full_assignment() const {
    Assignment a = coefficients_;
    a.insert_or_assign(kUpdateName, update_);
    a.insert_or_assign(kDiscriminationName, discrimination_);
    return a;
}

ActivityResult is_active_classA(const ActionTriple& t) {
    Matrix b = commutator(t.update(), t.discrimination());
    bool active = !b.is_zero();
    return ActivityResult{std::move(b), active};
}

PropagationReport propagation_report(const ActionTriple& t) {
    Matrix direct = commutator(t.update(), t.self_rep_value());
    PropagationReport report{std::move(direct), false, std::nullopt, std::nullopt,
                             std::nullopt, std::nullopt};
    report.vanishes = report.direct.is_zero();
    if (!t.self_rep_is_expression()) return report;

    ExpansionForm expansion = leibniz_expand(*t.self_rep_expr(),
                                             Generator{kDiscriminationName, false});
    Matrix value = evaluate_expansion(expansion, t.full_assignment(), t.dim());
    report.expansion_matches_direct = (value == report.direct);
    if (expansion.terms.empty()) {
        report.classification = VanishingClass::NoDOccurrence;
    } else if (report.vanishes) {
        report.classification = VanishingClass::EmpiricalCancellation;
    } else {
        report.classification = VanishingClass::NonVanishing;
    }
    report.expansion = std::move(expansion);
    report.expansion_value = std::move(value);
    return report;
}

const char* subset_name(OperatorSubset s) {
    switch (s) {
        case OperatorSubset::U: return "U";
        case OperatorSubset::D: return "D";
        case OperatorSubset::R: return "R";
        case OperatorSubset::UD: return "UD";
        case OperatorSubset::UR: return "UR";
        case OperatorSubset::DR: return "DR";
        case OperatorSubset::UDR: return "UDR";
    }
    throw Error("internal: unknown operator subset");
}

bool subset_has_update(OperatorSubset s) {
    return s == OperatorSubset::U || s == OperatorSubset::UD || s == OperatorSubset::UR ||
           s == OperatorSubset::UDR;
}

bool subset_has_discrimination(OperatorSubset s) {
    return s == OperatorSubset::D || s == OperatorSubset::UD || s == OperatorSubset::DR ||
           s == OperatorSubset::UDR;
}

bool subset_has_self_rep(OperatorSubset s) {
    return s == OperatorSubset::R || s == OperatorSubset::UR || s == OperatorSubset::DR ||
           s == OperatorSubset::UDR;
}

namespace {

bool subset_strictly_inside(OperatorSubset a, OperatorSubset b) {
    unsigned ma = (subset_has_update(a) ? 1u : 0u) | (subset_has_discrimination(a) ? 2u : 0u) |
                  (subset_has_self_rep(a) ? 4u : 0u);
    unsigned mb = (subset_has_update(b) ? 1u : 0u) | (subset_has_discrimination(b) ? 2u : 0u) |
                  (subset_has_self_rep(b) ? 4u : 0u);
    return ma != mb && (ma & mb) == ma;
}

} // namespace

IdentityVerdict classify_identity(const ActionTriple& t, long budget, std::uint64_t seed) {
    SubalgebraBasis comm_u = commutant_basis(t.update());
    SubalgebraBasis comm_d = commutant_basis(t.discrimination());
    SubalgebraBasis comm_r = commutant_basis(t.self_rep_value());

    IdentityVerdict verdict{IdentityVerdict::Kind::Inconclusive, {}, std::nullopt, {}};
    for (OperatorSubset s : kAllSubsets) {
        std::vector<SubalgebraBasis> parts;
        if (subset_has_update(s)) parts.push_back(comm_u);
        if (subset_has_discrimination(s)) parts.push_back(comm_d);
        if (subset_has_self_rep(s)) parts.push_back(comm_r);
        SubalgebraBasis joint = intersect(parts);
        verdict.per_subset.emplace_back(s, find_unifying_projector(joint, budget, seed));
    }

    auto found = [&](OperatorSubset s) {
        for (const auto& [subset, outcome] : verdict.per_subset) {
            if (subset == s) return outcome.verdict == ProjectorSearchOutcome::Verdict::Found;
        }
        return false;
    };

    if (found(OperatorSubset::UDR)) {
        verdict.kind = IdentityVerdict::Kind::Unconditional;
        verdict.unifying = verdict.per_subset.back().second.projector;
        // A projector in the triple-wise commutant intersection commutes
        // with U and D, so the bracket restriction is automatic; assert it.
        JacobiRestrictionReport r =
            check_jacobi_restriction(t.update(), t.discrimination(), *verdict.unifying);
        if (!r.update_preserves || !r.discrimination_preserves || !r.bracket_preserves ||
            !commutator(t.self_rep_value(), *verdict.unifying).is_zero()) {
            throw Error("internal: unconditional projector fails a commutation it implies");
        }
        return verdict;
    }

    for (OperatorSubset s : kAllSubsets) {
        if (s == OperatorSubset::UDR || !found(s)) continue;
        bool maximal = true;
        for (OperatorSubset other : kAllSubsets) {
            if (other == OperatorSubset::UDR || other == s) continue;
            if (subset_strictly_inside(s, other) && found(other)) {
                maximal = false;
                break;
            }
        }
        if (maximal) verdict.frames.push_back(s);
    }
    if (!verdict.frames.empty()) {
        verdict.kind = IdentityVerdict::Kind::Supplemental;
    }
    return verdict;
}

} // namespace opalg
