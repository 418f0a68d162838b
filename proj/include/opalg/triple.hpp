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

#include <optional>
#include <utility>
#include <vector>

#include "opalg/commutant.hpp"
#include "opalg/matrix.hpp"
#include "opalg/ncexpr.hpp"

namespace opalg {

/// An update / discrimination / self-representation triple acting on one
/// space. The self-representation is either a plain matrix or an
/// expression in D whose other generators are tagged and assigned matrices
/// commuting with the update.
class ActionTriple {
public:
    ActionTriple(Matrix update, Matrix discrimination, Matrix self_rep);
    ActionTriple(Matrix update, Matrix discrimination, NcExpr self_rep, Assignment coefficients);

    std::size_t dim() const { return update_.rows(); }
    const Matrix& update() const { return update_; }
    const Matrix& discrimination() const { return discrimination_; }

    bool self_rep_is_expression() const { return self_rep_expr_.has_value(); }
    const std::optional<NcExpr>& self_rep_expr() const { return self_rep_expr_; }
    const Assignment& coefficients() const { return coefficients_; }
    const Matrix& self_rep_value() const { return self_rep_value_; }

    /// Coefficients plus the "U" and "D" bindings.
    Assignment full_assignment() const;

private:
    Matrix update_;
    Matrix discrimination_;
    std::optional<NcExpr> self_rep_expr_;
    Assignment coefficients_;
    Matrix self_rep_value_;
};

/// Activity for the discrimination pair: the bracket [U, D] and whether it
/// is nonzero.
struct ActivityResult {
    Matrix bracket;
    bool active;
};
ActivityResult is_active_classA(const ActionTriple& t);

enum class VanishingClass {
    NoDOccurrence,         // D does not occur in the normal form
    EmpiricalCancellation, // D occurs, yet [U, R] = 0 under this assignment
    NonVanishing,
};

/// [U, R] directly, and, for expression-valued R, the derivation expansion
/// with its evaluation. The expansion always matches the direct bracket;
/// the report records the comparison rather than assuming it.
struct PropagationReport {
    Matrix direct; // [U, R]
    bool vanishes;
    std::optional<ExpansionForm> expansion;
    std::optional<Matrix> expansion_value;
    std::optional<bool> expansion_matches_direct;
    std::optional<VanishingClass> classification;
};
PropagationReport propagation_report(const ActionTriple& t);

/// The seven non-empty subsets of {U, D, R}, in this fixed order.
enum class OperatorSubset { U, D, R, UD, UR, DR, UDR };
inline constexpr OperatorSubset kAllSubsets[] = {
    OperatorSubset::U,  OperatorSubset::D,  OperatorSubset::R, OperatorSubset::UD,
    OperatorSubset::UR, OperatorSubset::DR, OperatorSubset::UDR};
const char* subset_name(OperatorSubset s);
bool subset_has_update(OperatorSubset s);
bool subset_has_discrimination(OperatorSubset s);
bool subset_has_self_rep(OperatorSubset s);

/// Outcome of the search for a shared invariant split:
///   Unconditional - a nontrivial projector commutes with all three
///     operators;
///   Supplemental - none does, but some proper subset admits one; `frames`
///     lists the maximal such subsets;
///   Inconclusive - no subset produced a projector within budget.
struct IdentityVerdict {
    enum class Kind { Unconditional, Supplemental, Inconclusive };
    Kind kind;
    std::vector<std::pair<OperatorSubset, ProjectorSearchOutcome>> per_subset;
    std::optional<Matrix> unifying;      // set for Unconditional
    std::vector<OperatorSubset> frames;  // set for Supplemental
};
IdentityVerdict classify_identity(const ActionTriple& t, long budget = kDefaultSearchBudget,
                                  std::uint64_t seed = kDefaultSearchSeed);

} // namespace opalg
