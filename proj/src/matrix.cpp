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

#include "opalg/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "opalg/errors.hpp"

namespace opalg {

namespace {

void require_same_dim(const Vector& a, const Vector& b) {
    if (a.dim() != b.dim()) {
        throw ShapeMismatch("vector dimensions differ: " + std::to_string(a.dim()) +
                            " vs " + std::to_string(b.dim()));
    }
}

void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeMismatch("matrix shapes differ: " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                            "x" + std::to_string(b.cols()));
    }
}

void require_square(const Matrix& a, const char* what) {
    if (!a.is_square()) {
        throw ShapeMismatch(std::string(what) + " requires a square matrix, got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

} // namespace

Vector::Vector(std::size_t dim) {
    if (dim == 0) throw ShapeMismatch("vector dimension must be at least 1");
    entries_.assign(dim, Rational());
}

Vector::Vector(std::vector<Rational> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) throw ShapeMismatch("vector dimension must be at least 1");
}

Vector Vector::unit(std::size_t dim, std::size_t i) {
    Vector v(dim);
    v[i] = Rational(1);
    return v;
}

bool Vector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rational& r) { return r.is_zero(); });
}

Vector Vector::operator-() const {
    Vector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = -entries_[i];
    return out;
}

Vector operator+(const Vector& a, const Vector& b) {
    require_same_dim(a, b);
    Vector out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b) {
    require_same_dim(a, b);
    Vector out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] - b[i];
    return out;
}

Vector operator*(const Rational& c, const Vector& v) {
    Vector out(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) out[i] = c * v[i];
    return out;
}

std::string Vector::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < dim(); ++i) {
        if (i) os << ", ";
        os << entries_[i];
    }
    os << ")";
    return os.str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0) throw ShapeMismatch("matrix dimensions must be at least 1");
    data_.assign(rows * cols, Rational());
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
}

Matrix Matrix::diagonal(const std::vector<Rational>& entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, i) = entries[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty()) throw ShapeMismatch("matrix dimensions must be at least 1");
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols()) {
            throw ShapeMismatch("ragged rows: row " + std::to_string(i) + " has " +
                                std::to_string(rows[i].size()) + " entries, expected " +
                                std::to_string(m.cols()));
        }
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_vec(const Vector& v, std::size_t dim) {
    if (v.dim() != dim * dim) {
        throw ShapeMismatch("cannot reshape a vector of dimension " + std::to_string(v.dim()) +
                            " into a " + std::to_string(dim) + "x" + std::to_string(dim) +
                            " matrix");
    }
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = v[i * dim + j];
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Rational& r) { return r.is_zero(); });
}

Matrix Matrix::operator-() const {
    Matrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = -data_[i];
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeMismatch("cannot multiply " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                            "x" + std::to_string(b.cols()));
    }
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return out;
}

Matrix operator*(const Rational& c, const Matrix& a) {
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = c * a.data_[i];
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vector Matrix::apply(const Vector& v) const {
    if (v.dim() != cols_) {
        throw ShapeMismatch("cannot apply " + std::to_string(rows_) + "x" +
                            std::to_string(cols_) + " to a vector of dimension " +
                            std::to_string(v.dim()));
    }
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Vector Matrix::row(std::size_t i) const {
    Vector out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = at(i, j);
    return out;
}

Vector Matrix::col(std::size_t j) const {
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = at(i, j);
    return out;
}

Vector Matrix::to_vec() const {
    return Vector(data_);
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ", ";
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j);
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

Matrix commutator(const Matrix& x, const Matrix& y) {
    require_square(x, "commutator");
    require_square(y, "commutator");
    require_same_shape(x, y);
    return x * y - y * x;
}

bool is_idempotent(const Matrix& p) {
    require_square(p, "is_idempotent");
    return p * p == p;
}

Rref rref(const Matrix& a) {
    Rref out{a, {}};
    Matrix& m = out.mat;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = m.rows();
        for (std::size_t r = pivot_row; r < m.rows(); ++r) {
            if (!m.at(r, col).is_zero()) {
                found = r;
                break;
            }
        }
        if (found == m.rows()) continue;
        if (found != pivot_row) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(found, j), m.at(pivot_row, j));
        }
        Rational inv = m.at(pivot_row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || m.at(r, col).is_zero()) continue;
            Rational factor = m.at(r, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                m.at(r, j) -= factor * m.at(pivot_row, j);
            }
        }
        out.pivot_cols.push_back(col);
        ++pivot_row;
    }
    return out;
}

std::size_t rank(const Matrix& a) {
    return rref(a).pivot_cols.size();
}

RowSpace::RowSpace(std::size_t ambient) : ambient_(ambient) {
    if (ambient == 0) throw ShapeMismatch("row space ambient dimension must be at least 1");
}

Vector RowSpace::reduce(Vector v) const {
    if (v.dim() != ambient_) {
        throw ShapeMismatch("row space reduce: dimension " + std::to_string(v.dim()) +
                            " in ambient " + std::to_string(ambient_));
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& c = v[pivot_cols_[r]];
        if (c.is_zero()) continue;
        Rational factor = c; // pivot entry is 1
        for (std::size_t j = 0; j < ambient_; ++j) v[j] -= factor * rows_[r][j];
    }
    return v;
}

bool RowSpace::insert(Vector v) {
    Vector res = reduce(std::move(v));
    std::size_t lead = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j) {
        if (!res[j].is_zero()) {
            lead = j;
            break;
        }
    }
    if (lead == ambient_) return false;
    Rational inv = res[lead].inverse();
    for (std::size_t j = lead; j < ambient_; ++j) res[j] *= inv;
    // Back-eliminate the new pivot column from the existing rows, keeping
    // the full reduced form.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational c = rows_[r][lead];
        if (c.is_zero()) continue;
        for (std::size_t j = lead; j < ambient_; ++j) rows_[r][j] -= c * res[j];
    }
    auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), lead);
    std::size_t idx = static_cast<std::size_t>(pos - pivot_cols_.begin());
    pivot_cols_.insert(pos, lead);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), std::move(res));
    return true;
}

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> vectors)
    : ambient_(ambient_dim), vectors_(std::move(vectors)), span_(ambient_dim) {
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
        if (vectors_[i].dim() != ambient_) {
            throw ShapeMismatch("basis vector " + std::to_string(i) + " has dimension " +
                                std::to_string(vectors_[i].dim()) + ", ambient is " +
                                std::to_string(ambient_));
        }
        if (!span_.insert(vectors_[i])) {
            throw Error("basis vectors are linearly dependent at index " + std::to_string(i));
        }
    }
}

bool SubspaceBasis::contains_span_of(const SubspaceBasis& other) const {
    for (const Vector& v : other.vectors()) {
        if (!contains(v)) return false;
    }
    return true;
}

SubspaceBasis kernel_basis(const Matrix& a) {
    Rref r = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < a.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(a.cols());
        v[f] = Rational(1);
        for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr) {
            v[r.pivot_cols[pr]] = -r.mat.at(pr, f);
        }
        basis.push_back(std::move(v));
    }
    return SubspaceBasis(a.cols(), std::move(basis));
}

SubspaceBasis image_basis(const Matrix& a) {
    Rref r = rref(a.transpose());
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        basis.push_back(r.mat.row(i));
    }
    return SubspaceBasis(a.rows(), std::move(basis));
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.dim() != a.rows()) {
        throw ShapeMismatch("solve: right-hand side dimension " + std::to_string(b.dim()) +
                            " does not match " + std::to_string(a.rows()) + " rows");
    }
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Rref r = rref(aug);
    for (std::size_t c : r.pivot_cols) {
        if (c == a.cols()) return std::nullopt; // pivot in the constant column
    }
    Vector x(a.cols());
    for (std::size_t pr = 0; pr < r.pivot_cols.size(); ++pr) {
        x[r.pivot_cols[pr]] = r.mat.at(pr, a.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (!a.is_square()) throw ShapeMismatch("inverse requires a square matrix");
    std::size_t n = a.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    Rref r = rref(aug);
    if (r.pivot_cols.size() < n || r.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
    return inv;
}

std::vector<Rational> minimal_polynomial(const Matrix& a) {
    if (!a.is_square()) throw ShapeMismatch("minimal polynomial requires a square matrix");
    std::size_t n = a.rows();
    RowSpace seen(n * n);
    std::vector<Vector> power_vecs;
    Matrix power = Matrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        Vector v = power.to_vec();
        if (seen.contains(v)) {
            // v = sum_i x_i * power_vecs[i]; solve exactly.
            Matrix cols(n * n, k);
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t e = 0; e < n * n; ++e) cols.at(e, i) = power_vecs[i][e];
            auto x = solve(cols, v);
            if (!x) throw Error("internal: dependency detected but not solvable");
            std::vector<Rational> coeffs(k + 1);
            for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*x)[i];
            coeffs[k] = Rational(1);
            return coeffs;
        }
        seen.insert(v);
        power_vecs.push_back(std::move(v));
        power = power * a;
    }
    // Unreachable: the minimal polynomial has degree at most n.
    throw Error("internal: no dependency among matrix powers up to degree n");
}

Matrix poly_at_matrix(const std::vector<Rational>& coeffs, const Matrix& a) {
    if (!a.is_square()) throw ShapeMismatch("polynomial evaluation requires a square matrix");
    std::size_t n = a.rows();
    Matrix acc = Matrix::zero(n, n);
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * a;
        for (std::size_t d = 0; d < n; ++d) acc.at(d, d) += coeffs[i];
    }
    return acc;
}

} // namespace opalg
