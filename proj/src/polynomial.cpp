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

#include "opalg/polynomial.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <utility>

#include "opalg/errors.hpp"

namespace opalg {

int poly_degree(const Poly& p) {
    return static_cast<int>(p.size()) - 1;
}

Poly poly_normalize(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    return poly_normalize(std::move(out));
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
    }
    return poly_normalize(std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return poly_normalize(std::move(out));
}

Poly poly_scale(const Rational& c, const Poly& p) {
    if (c.is_zero()) return {};
    Poly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = c * p[i];
    return out;
}

Poly poly_derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = Rational(static_cast<long>(i)) * p[i];
    return poly_normalize(std::move(out));
}

Poly poly_monic(const Poly& p) {
    if (p.empty()) return {};
    return poly_scale(p.back().inverse(), p);
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
    if (den.empty()) throw Error("polynomial division by zero");
    Poly rem = num;
    if (rem.size() < den.size()) return {{}, std::move(rem)};
    Poly quo(rem.size() - den.size() + 1);
    Rational lead_inv = den.back().inverse();
    while (rem.size() >= den.size() && !rem.empty()) {
        std::size_t shift = rem.size() - den.size();
        Rational c = rem.back() * lead_inv;
        quo[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
        rem = poly_normalize(std::move(rem));
    }
    return {poly_normalize(std::move(quo)), std::move(rem)};
}

Poly poly_gcd(Poly a, Poly b) {
    a = poly_normalize(std::move(a));
    b = poly_normalize(std::move(b));
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

bool poly_is_squarefree(const Poly& p) {
    if (p.empty()) return false;
    if (p.size() == 1) return true;
    return poly_degree(poly_gcd(p, poly_derivative(p))) == 0;
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc;
    for (std::size_t i = p.size(); i-- > 0;) {
        acc = acc * x + p[i];
    }
    return acc;
}

namespace {

int sign_at(const Poly& p, const Rational& x) {
    return poly_eval(p, x).sign();
}

// Sign variations of the chain at x, ignoring exact zeros.
int variations(const std::vector<Poly>& chain, const Rational& x) {
    int count = 0;
    int prev = 0;
    for (const Poly& s : chain) {
        int sg = sign_at(s, x);
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

Rational at_half_above(const mpz_class& k) {
    mpq_class v(2 * k + 1, 2);
    v.canonicalize();
    return Rational::from_raw(std::move(v));
}

} // namespace

std::vector<Rational> rational_roots(const Poly& p_in) {
    Poly p = poly_normalize(p_in);
    if (p.empty()) throw Error("rational_roots of the zero polynomial");
    if (p.size() == 1) return {};

    // Squarefree part, same root set.
    Poly sf = poly_monic(poly_divmod(p, poly_gcd(p, poly_derivative(p))).first);

    // Integer model g(y) = L^d sf(y/L) with L the lcm of the denominators.
    // g is monic with integer coefficients, so its rational roots are
    // integers, and they are exactly L times the roots of sf.
    mpz_class ell(1);
    for (const Rational& c : sf) {
        mpz_class den(c.denominator_str());
        mpz_lcm(ell.get_mpz_t(), ell.get_mpz_t(), den.get_mpz_t());
    }
    Poly g(sf.size());
    mpz_class scale(1);
    for (std::size_t i = sf.size(); i-- > 0;) {
        g[i] = Rational::from_raw(sf[i].raw() * mpq_class(scale));
        scale *= ell;
    }

    // Root bound for monic g: |r| <= 1 + max |g_i|.
    mpz_class bound(1);
    for (std::size_t i = 0; i + 1 < g.size(); ++i) {
        mpz_class num(g[i].abs().numerator_str());
        if (num > bound) bound = num;
    }
    bound += 2;

    // Sturm chain of g. g is squarefree, and every evaluation point below
    // is a half-integer, never a root of the monic integer polynomial g.
    std::vector<Poly> chain{g, poly_derivative(g)};
    while (!chain.back().empty() && poly_degree(chain.back()) > 0) {
        Poly r = poly_divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.empty()) break;
        chain.push_back(poly_scale(Rational(-1), r));
    }

    // Bisection over intervals (a + 1/2, b + 1/2] with integer a < b; the
    // candidate integers inside are a+1 .. b.
    std::vector<mpz_class> integer_roots;
    struct Interval {
        mpz_class a, b;
        int va, vb;
    };
    std::vector<Interval> work;
    {
        mpz_class a0 = -bound - 1, b0 = bound;
        int va = variations(chain, at_half_above(a0));
        int vb = variations(chain, at_half_above(b0));
        work.push_back({std::move(a0), std::move(b0), va, vb});
    }
    while (!work.empty()) {
        Interval iv = std::move(work.back());
        work.pop_back();
        if (iv.va - iv.vb <= 0) continue;
        if (iv.b - iv.a == 1) {
            Rational candidate = Rational::from_raw(mpq_class(iv.b));
            if (poly_eval(g, candidate).is_zero()) integer_roots.push_back(iv.b);
            continue;
        }
        mpz_class m = iv.a + iv.b;
        mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), 1);
        int vm = variations(chain, at_half_above(m));
        work.push_back({iv.a, m, iv.va, vm});
        work.push_back({m, iv.b, vm, iv.vb});
    }

    std::sort(integer_roots.begin(), integer_roots.end());
    std::vector<Rational> roots;
    for (const mpz_class& n : integer_roots) {
        mpq_class v(n, ell);
        v.canonicalize();
        Rational root = Rational::from_raw(std::move(v));
        if (!poly_eval(p, root).is_zero()) {
            throw Error("internal: isolated root fails exact confirmation");
        }
        roots.push_back(std::move(root));
    }
    return roots;
}

} // namespace opalg
