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
#include <vector>

#include "opalg/matrix.hpp"
#include "opalg/triple.hpp"

namespace opalg {

/// Finite set of admissible configurations, order-preserving. Exact
/// membership; not a subspace.
struct AdmissibleSet {
    std::vector<Vector> configs;
    std::size_t dim;

    /// Non-empty, one dimension, pairwise distinct (ValidationError).
    static AdmissibleSet make(std::vector<Vector> configs);
};

/// The two orderings of "describe" and "update" applied to one state, and
/// their exact discrepancy: defect = rho1 - U rho0 = -[U, R] s.
struct DiagonalDefect {
    Vector rho0;   // R s
    Vector rho1;   // R U s
    Vector defect; // rho1 - U rho0
    bool in_kernel; // defect = 0, i.e. s in ker [U, R]
};
DiagonalDefect diagonal_defect(const ActionTriple& t, const Vector& s);

/// Per-totality row of the inclosure report. `omega_index` points into
/// the deduplicated totality list.
struct InclosureRow {
    std::size_t omega_index;
    Vector rho;            // the totality R q
    Vector representative; // q(rho): first config in input order with R q = rho
    Vector sigma;          // sigma_q(rho) = R U q(rho)
    bool closure_ok;       // sigma in omega
    bool transcendence;    // sigma != U rho
    bool predicted_transcendence; // q(rho) outside ker [U, R]
    bool prediction_match;
};

struct InclosureReport {
    std::vector<Vector> omega; // image of configs under R, deduped, input order
    std::vector<InclosureRow> rows;
    bool closure_all;
    bool prediction_all_match;
};

/// Verifies U(V_S) is inside V_S (NotClosed with the offending config
/// otherwise), builds the totality with first-occurrence representatives,
/// and checks the Closure and Transcendence clauses per totality. Closure
/// must hold on a closed set; that is asserted as well as reported. The
/// transcendence prediction comes from an independent route (membership in
/// the kernel basis of [U, R]).
InclosureReport inclosure_check(const ActionTriple& t, const AdmissibleSet& v_s);

} // namespace opalg
