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

#include "opalg/commutant.hpp"

#include <random>
#include <string>
#include <utility>

#include "opalg/errors.hpp"
#include "opalg/polynomial.hpp"

namespace opalg {

namespace {

void require_ambient_budget(std::size_t n, const char* what) {
    if (n > kMaxAmbientDim) {
        throw DimBudgetExceeded(std::string(what) + " refused for dimension " + std::to_string(n) +
                                " (limit " + std::to_string(kMaxAmbientDim) + ")");
    }
}

void require_square_of(const Matrix& m, std::size_t n, const char* what) {
    if (m.rows() != n || m.cols() != n) {
        throw ShapeMismatch(std::string(what) + " expects " + std::to_string(n) + "x" +
                            std::to_string(n) + " matrices, got " + std::to_string(m.rows()) +
                            "x" + std::to_string(m.cols()));
    }
}

} // namespace

SubalgebraBasis::SubalgebraBasis(std::size_t ambient_dim, std::vector<Matrix> elements, bool closed)
    : ambient_(ambient_dim), elements_(std::move(elements)), closed_(closed),
      span_(ambient_dim * ambient_dim) {
    if (ambient_dim == 0) throw ShapeMismatch("ambient dimension must be at least 1");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        require_square_of(elements_[i], ambient_, "subalgebra basis");
        if (!span_.insert(elements_[i].to_vec())) {
            throw Error("basis elements are linearly dependent at index " + std::to_string(i));
        }
    }
}

bool SubalgebraBasis::span_contains(const Matrix& m) const {
    require_square_of(m, ambient_, "span membership");
    return span_.contains(m.to_vec());
}

bool SubalgebraBasis::identity_in_span() const {
    return span_contains(Matrix::identity(ambient_));
}

SubalgebraBasis commutant_basis(const Matrix& x) {
    if (!x.is_square()) throw ShapeMismatch("commutant requires a square matrix");
    std::size_t n = x.rows();
    require_ambient_budget(n, "commutant");
    // The map Y -> XY - YX on the n^2-dim space, rows and columns indexed
    // by (i,j) and (k,l) row-major: entry X_ik [j=l] - [i=k] X_lj.
    Matrix sylvester(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t l = 0; l < n; ++l) {
                    Rational entry;
                    if (j == l) entry += x.at(i, k);
                    if (i == k) entry -= x.at(l, j);
                    sylvester.at(i * n + j, k * n + l) = std::move(entry);
                }
            }
        }
    }
    SubspaceBasis kernel = kernel_basis(sylvester);
    std::vector<Matrix> elements;
    elements.reserve(kernel.dim());
    for (const Vector& v : kernel.vectors()) {
        elements.push_back(Matrix::from_vec(v, n));
    }
    SubalgebraBasis out(n, std::move(elements), /*closed=*/true);
    if (!out.identity_in_span()) throw Error("internal: commutant lost the identity");
    return out;
}

SubalgebraBasis intersect(const std::vector<SubalgebraBasis>& bases) {
    if (bases.empty()) throw Error("intersect requires at least one basis");
    std::size_t n = bases[0].ambient_dim();
    for (const SubalgebraBasis& b : bases) {
        if (b.ambient_dim() != n) {
            throw ShapeMismatch("intersect: ambient dimensions differ");
        }
    }
    std::size_t m = n * n;
    bool all_closed = true;
    for (const SubalgebraBasis& b : bases) all_closed = all_closed && b.closed();
    // Accumulated intersection as canonical reduced rows of Q^(n^2).
    RowSpace acc(m);
    for (const Matrix& e : bases[0].elements()) acc.insert(e.to_vec());
    for (std::size_t b = 1; b < bases.size(); ++b) {
        const auto& w = bases[b].elements();
        std::vector<Vector> left = acc.rows();
        if (left.empty() || w.empty()) {
            acc = RowSpace(m);
            continue;
        }
        // Kernel of [left | w] columns: each null combination equates a
        // vector of the accumulated span with one of the next span.
        Matrix cols(m, left.size() + w.size());
        for (std::size_t j = 0; j < left.size(); ++j)
            for (std::size_t i = 0; i < m; ++i) cols.at(i, j) = left[j][i];
        for (std::size_t j = 0; j < w.size(); ++j) {
            Vector wv = w[j].to_vec();
            for (std::size_t i = 0; i < m; ++i) cols.at(i, left.size() + j) = wv[i];
        }
        SubspaceBasis null = kernel_basis(cols);
        RowSpace next(m);
        for (const Vector& kappa : null.vectors()) {
            Vector v(m);
            for (std::size_t j = 0; j < left.size(); ++j) {
                if (kappa[j].is_zero()) continue;
                v = v + kappa[j] * left[j];
            }
            if (!v.is_zero()) next.insert(std::move(v));
        }
        acc = std::move(next);
    }
    std::vector<Matrix> elements;
    elements.reserve(acc.dim());
    for (const Vector& v : acc.rows()) elements.push_back(Matrix::from_vec(v, n));
    return SubalgebraBasis(n, std::move(elements), all_closed);
}

SubalgebraBasis algebra_closure(const std::vector<Matrix>& generators, std::size_t ambient_dim) {
    require_ambient_budget(ambient_dim, "algebra closure");
    if (ambient_dim == 0) throw ShapeMismatch("ambient dimension must be at least 1");
    for (const Matrix& g : generators) require_square_of(g, ambient_dim, "algebra closure");
    RowSpace span(ambient_dim * ambient_dim);
    std::vector<Matrix> elements;
    auto admit = [&](const Matrix& m) {
        if (span.insert(m.to_vec())) {
            elements.push_back(m);
            return true;
        }
        return false;
    };
    admit(Matrix::identity(ambient_dim));
    for (const Matrix& g : generators) admit(g);
    // Saturate under products; each pass multiplies everything admitted so
    // far. Dimension is bounded by ambient^2, so this terminates.
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t count = elements.size();
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < count; ++j) {
                if (admit(elements[i] * elements[j])) grew = true;
            }
        }
    }
    return SubalgebraBasis(ambient_dim, std::move(elements), /*closed=*/true);
}

namespace {

// 0 and 1 are the trivial idempotents; anything else in the span is a hit.
bool nontrivial_idempotent(const Matrix& p, const SubalgebraBasis& basis) {
    if (p.is_zero()) return false;
    if (p == Matrix::identity(basis.ambient_dim())) return false;
    return is_idempotent(p) && basis.span_contains(p);
}

std::optional<Matrix> spectral_attempt(const Matrix& candidate, const SubalgebraBasis& basis) {
    if (candidate.is_zero()) return std::nullopt;
    Poly mu = minimal_polynomial(candidate);
    if (poly_degree(mu) < 2) return std::nullopt;
    if (!poly_is_squarefree(mu)) return std::nullopt;
    std::vector<Rational> roots = rational_roots(mu);
    if (roots.size() < 2) return std::nullopt;
    for (std::size_t i = roots.size(); i-- > 0;) {
        const Rational& r = roots[i];
        Poly h = poly_divmod(mu, Poly{-r, Rational(1)}).first;
        Rational hr = poly_eval(h, r);
        Matrix p = hr.inverse() * poly_at_matrix(h, candidate);
        if (nontrivial_idempotent(p, basis)) return p;
    }
    return std::nullopt;
}

// Fixed enumeration shared by the direct and spectral phases: single basis
// elements, then pairs weighted by nonzero integers in [-3, 3].
template <typename Fn>
bool for_each_candidate(const SubalgebraBasis& basis, Fn&& fn) {
    const auto& es = basis.elements();
    for (std::size_t i = 0; i < es.size(); ++i) {
        if (!fn(es[i])) return false;
    }
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            for (long c1 = -3; c1 <= 3; ++c1) {
                if (c1 == 0) continue;
                for (long c2 = -3; c2 <= 3; ++c2) {
                    if (c2 == 0) continue;
                    if (!fn(Rational(c1) * es[i] + Rational(c2) * es[j])) return false;
                }
            }
        }
    }
    return true;
}

} // namespace

ProjectorSearchOutcome find_unifying_projector(const SubalgebraBasis& basis, long budget,
                                               std::uint64_t seed) {
    if (budget < 1) throw ValidationError("search budget must be at least 1");
    require_ambient_budget(basis.ambient_dim(), "projector search");
    ProjectorSearchOutcome out{ProjectorSearchOutcome::Verdict::NotFoundWithinBudget,
                               std::nullopt, 0, budget};
    if (basis.dim() == 0 || (basis.dim() == 1 && basis.identity_in_span())) {
        out.verdict = ProjectorSearchOutcome::Verdict::ProvedTrivial;
        return out;
    }

    bool exhausted = false;
    auto spend = [&]() {
        if (out.attempts >= budget) {
            exhausted = true;
            return false;
        }
        ++out.attempts;
        return true;
    };

    // Phase 1: direct idempotency over the fixed enumeration.
    for_each_candidate(basis, [&](const Matrix& c) {
        if (!spend()) return false;
        if (nontrivial_idempotent(c, basis)) {
            out.verdict = ProjectorSearchOutcome::Verdict::Found;
            out.projector = c;
            return false;
        }
        return true;
    });
    if (out.projector || exhausted) return out;

    // Phase 2: spectral idempotents over the same enumeration.
    for_each_candidate(basis, [&](const Matrix& c) {
        if (!spend()) return false;
        if (auto p = spectral_attempt(c, basis)) {
            out.verdict = ProjectorSearchOutcome::Verdict::Found;
            out.projector = std::move(*p);
            return false;
        }
        return true;
    });
    if (out.projector || exhausted) return out;

    // Phase 3: seeded pseudo-random small-integer combinations. Raw draws
    // reduced mod 7 keep the stream platform-independent.
    std::mt19937_64 rng(seed);
    std::size_t n = basis.ambient_dim();
    while (out.attempts < budget) {
        Matrix c = Matrix::zero(n, n);
        bool any = false;
        for (const Matrix& e : basis.elements()) {
            long w = static_cast<long>(rng() % 7) - 3;
            if (w == 0) continue;
            any = true;
            c = c + Rational(w) * e;
        }
        if (!any) continue;
        ++out.attempts;
        if (nontrivial_idempotent(c, basis)) {
            out.verdict = ProjectorSearchOutcome::Verdict::Found;
            out.projector = std::move(c);
            return out;
        }
        if (auto p = spectral_attempt(c, basis)) {
            out.verdict = ProjectorSearchOutcome::Verdict::Found;
            out.projector = std::move(*p);
            return out;
        }
    }
    return out;
}

JacobiRestrictionReport check_jacobi_restriction(const Matrix& u, const Matrix& d,
                                                 const Matrix& p) {
    if (!is_idempotent(p)) throw NotIdempotent("restriction check requires an idempotent");
    Matrix b = commutator(u, d);
    JacobiRestrictionReport report{};
    report.update_preserves = commutator(u, p).is_zero();
    report.discrimination_preserves = commutator(d, p).is_zero();
    report.bracket_preserves = commutator(b, p).is_zero();
    report.bracket_central = (b == b.at(0, 0) * Matrix::identity(b.rows()));
    report.corollary_applicable = report.update_preserves && report.discrimination_preserves;
    if (report.corollary_applicable && !report.bracket_preserves) {
        // [[U,D],P] = [U,[D,P]] - [D,[U,P]] makes this unreachable.
        throw Error("internal: preserved split with non-preserved bracket");
    }
    return report;
}

} // namespace opalg
