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

#include <cstdint>
#include <optional>
#include <vector>

#include "opalg/matrix.hpp"

namespace opalg {

inline constexpr long kDefaultSearchBudget = 500;
inline constexpr std::uint64_t kDefaultSearchSeed = 42;

/// Ordered basis of a subspace of n x n matrices, independent as
/// n^2-vectors. `closed` records that closure under products has been
/// verified (or is structural, as for commutants).
class SubalgebraBasis {
public:
    SubalgebraBasis(std::size_t ambient_dim, std::vector<Matrix> elements, bool closed = false);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return elements_.size(); }
    const std::vector<Matrix>& elements() const { return elements_; }
    bool closed() const { return closed_; }

    bool span_contains(const Matrix& m) const;
    bool identity_in_span() const;

private:
    std::size_t ambient_;
    std::vector<Matrix> elements_;
    bool closed_;
    RowSpace span_;
};

/// Basis of {Y : XY = YX}, the kernel of Y -> XY - YX on the n^2-dim
/// space. Contains the identity; dimension is n^2 - rank of that map.
/// Throws DimBudgetExceeded for n > kMaxAmbientDim.
SubalgebraBasis commutant_basis(const Matrix& x);

/// Basis of the intersection of the given spans (all in the same ambient
/// dimension; the list must be non-empty). The result is marked closed
/// when every input is, the intersection of subalgebras being a
/// subalgebra.
SubalgebraBasis intersect(const std::vector<SubalgebraBasis>& bases);

/// Smallest unital algebra containing the generators: starts from the
/// identity and saturates under two-sided products. Throws
/// DimBudgetExceeded for ambient_dim > kMaxAmbientDim.
SubalgebraBasis algebra_closure(const std::vector<Matrix>& generators, std::size_t ambient_dim);

/// Outcome of the budgeted search for a nontrivial idempotent in a span.
/// ProvedTrivial means the span is the scalars (dimension 1), where no
/// idempotent other than 0 and 1 exists.
struct ProjectorSearchOutcome {
    enum class Verdict { Found, NotFoundWithinBudget, ProvedTrivial };
    Verdict verdict;
    std::optional<Matrix> projector;
    long attempts = 0;
    long budget = 0;
};

/// Deterministic search for P in the span with P^2 = P, P != 0, P != 1.
/// Three phases, each candidate examination counting one attempt against
/// the budget:
///   1. basis elements, then pairs with small integer weights, tested for
///      idempotency directly;
///   2. the same sequence again, now deriving a spectral idempotent from
///      any candidate whose minimal polynomial is squarefree with at least
///      two rational roots (roots tried in descending order);
///   3. seeded pseudo-random small-integer combinations of the whole
///      basis, both tests per candidate.
ProjectorSearchOutcome find_unifying_projector(const SubalgebraBasis& basis,
                                               long budget = kDefaultSearchBudget,
                                               std::uint64_t seed = kDefaultSearchSeed);

/// How a candidate projector sits relative to an update/discrimination
/// pair. When both operators preserve the split, the bracket does too;
/// that implication is asserted, not reported.
struct JacobiRestrictionReport {
    bool update_preserves;         // [U, P] = 0
    bool discrimination_preserves; // [D, P] = 0
    bool bracket_preserves;        // [[U, D], P] = 0
    bool bracket_central;          // [U, D] is a scalar multiple of the identity
    bool corollary_applicable;     // both operators preserve the split
};

/// P must be idempotent (NotIdempotent otherwise); operands square, equal
/// dimension.
JacobiRestrictionReport check_jacobi_restriction(const Matrix& u, const Matrix& d,
                                                 const Matrix& p);

} // namespace opalg
