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

#include <utility>
#include <vector>

#include "opalg/rational.hpp"

namespace opalg {

/// Univariate polynomial over the rationals, coefficients low to high.
/// Normalized: no trailing zero coefficients; the zero polynomial is {}.
using Poly = std::vector<Rational>;

/// Degree; -1 for the zero polynomial.
int poly_degree(const Poly& p);

Poly poly_normalize(Poly p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Rational& c, const Poly& p);
Poly poly_derivative(const Poly& p);
Poly poly_monic(const Poly& p);

/// Quotient and remainder of num by den; den must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);

/// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(Poly a, Poly b);

/// gcd(p, p') is constant.
bool poly_is_squarefree(const Poly& p);

Rational poly_eval(const Poly& p, const Rational& x);

/// All rational roots, each listed once, ascending. Complete: a monic
/// integer model of the squarefree part is isolated by Sturm bisection over
/// half-integer endpoints, so every rational root (necessarily an integer
/// of the model) is found and confirmed by exact evaluation.
std::vector<Rational> rational_roots(const Poly& p);

} // namespace opalg
