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

#include "opalg/inclosure.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "opalg/errors.hpp"

namespace opalg {

AdmissibleSet AdmissibleSet::make(std::vector<Vector> configs) {
    if (configs.empty()) throw ValidationError("admissible set is empty");
    std::size_t dim = configs[0].dim();
    for (std::size_t i = 0; i < configs.size(); ++i) {
        if (configs[i].dim() != dim) {
            throw ValidationError("admissible config " + std::to_string(i) + " has dimension " +
                                  std::to_string(configs[i].dim()) + ", expected " +
                                  std::to_string(dim));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (configs[i] == configs[j]) {
                throw ValidationError("admissible configs " + std::to_string(j) + " and " +
                                      std::to_string(i) + " coincide");
            }
        }
    }
    return AdmissibleSet{std::move(configs), dim};
}

DiagonalDefect diagonal_defect(const ActionTriple& t, const Vector& s) {
    if (s.dim() != t.dim()) {
        throw ShapeMismatch("state has dimension " + std::to_string(s.dim()) +
                            ", triple acts on " + std::to_string(t.dim()));
    }
    const Matrix& u = t.update();
    const Matrix& r = t.self_rep_value();
    Vector rho0 = r.apply(s);
    Vector rho1 = r.apply(u.apply(s));
    Vector defect = rho1 - u.apply(rho0);
    if (defect != -(commutator(u, r).apply(s))) {
        throw Error("internal: diagonal defect disagrees with the bracket");
    }
    bool in_kernel = defect.is_zero();
    return DiagonalDefect{std::move(rho0), std::move(rho1), std::move(defect), in_kernel};
}

InclosureReport inclosure_check(const ActionTriple& t, const AdmissibleSet& v_s) {
    if (v_s.dim != t.dim()) {
        throw ShapeMismatch("admissible set lives in dimension " + std::to_string(v_s.dim) +
                            ", triple acts on " + std::to_string(t.dim()));
    }
    const Matrix& u = t.update();
    const Matrix& r = t.self_rep_value();

    auto member_index = [&v_s](const Vector& v) -> std::size_t {
        for (std::size_t i = 0; i < v_s.configs.size(); ++i) {
            if (v_s.configs[i] == v) return i;
        }
        return v_s.configs.size();
    };

    for (const Vector& s : v_s.configs) {
        Vector us = u.apply(s);
        if (member_index(us) == v_s.configs.size()) {
            throw NotClosed("update leaves the admissible set: U" + s.str() + " = " + us.str() +
                            " is not admissible");
        }
    }

    InclosureReport report{{}, {}, true, true};
    std::vector<std::size_t> representative_of; // parallel to report.omega
    for (std::size_t i = 0; i < v_s.configs.size(); ++i) {
        Vector rho = r.apply(v_s.configs[i]);
        bool seen = std::any_of(report.omega.begin(), report.omega.end(),
                                [&rho](const Vector& o) { return o == rho; });
        if (seen) continue;
        report.omega.push_back(std::move(rho));
        representative_of.push_back(i);
    }

    SubspaceBasis bracket_kernel = kernel_basis(commutator(u, r));
    for (std::size_t oi = 0; oi < report.omega.size(); ++oi) {
        const Vector& rho = report.omega[oi];
        const Vector& q = v_s.configs[representative_of[oi]];
        Vector sigma = r.apply(u.apply(q));
        bool closure_ok = std::any_of(report.omega.begin(), report.omega.end(),
                                      [&sigma](const Vector& o) { return o == sigma; });
        if (!closure_ok) {
            // U q is admissible and sigma = R(U q) is its totality, so this
            // cannot happen on a closed set.
            throw Error("internal: closure clause failed on a closed set at " + rho.str());
        }
        bool transcendence = (sigma != u.apply(rho));
        bool predicted = !bracket_kernel.contains(q);
        InclosureRow row{oi,          rho,           q,
                         sigma,       closure_ok,    transcendence,
                         predicted,   transcendence == predicted};
        report.closure_all = report.closure_all && closure_ok;
        report.prediction_all_match = report.prediction_all_match && row.prediction_match;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace opalg
