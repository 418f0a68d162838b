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
#include <optional>
#include <string>
#include <vector>

#include "opalg/rational.hpp"

namespace opalg {

/// Ambient dimensions above this are refused by scenario loading and by the
/// commutant-side operations, whose cost grows with dim^2 basis elements.
inline constexpr std::size_t kMaxAmbientDim = 32;

/// Dense column vector over the rationals. Dimension is fixed at
/// construction and at least 1.
class Vector {
public:
    explicit Vector(std::size_t dim);
    explicit Vector(std::vector<Rational> entries);

    static Vector unit(std::size_t dim, std::size_t i);

    std::size_t dim() const { return entries_.size(); }
    const Rational& operator[](std::size_t i) const { return entries_[i]; }
    Rational& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Rational>& entries() const { return entries_; }

    bool is_zero() const;

    Vector operator-() const;
    friend Vector operator+(const Vector& a, const Vector& b);
    friend Vector operator-(const Vector& a, const Vector& b);
    friend Vector operator*(const Rational& c, const Vector& v);
    friend bool operator==(const Vector& a, const Vector& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

    /// Renders as "(a, b, c)".
    std::string str() const;

private:
    std::vector<Rational> entries_;
};

/// Dense matrix over the rationals, row-major. Rows and columns are at
/// least 1.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols);
    static Matrix diagonal(const std::vector<Rational>& entries);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    /// Reshapes a dim^2 vector into a dim x dim matrix, row-major.
    static Matrix from_vec(const Vector& v, std::size_t dim);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    bool is_zero() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& c, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Vector apply(const Vector& v) const;
    Matrix transpose() const;
    Vector row(std::size_t i) const;
    Vector col(std::size_t j) const;
    /// Flattens row-major into a rows*cols vector.
    Vector to_vec() const;

    /// Renders as "[[a, b], [c, d]]".
    std::string str() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// [X, Y] = XY - YX. Operands must be square and of equal dimension.
Matrix commutator(const Matrix& x, const Matrix& y);

/// P*P == P, exactly. P must be square.
bool is_idempotent(const Matrix& p);

/// Reduced row-echelon form. Pivot columns are strictly increasing, pivot
/// entries are 1, and pivot columns are zero elsewhere. Exact, hence
/// canonical for a given input.
struct Rref {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;
};
Rref rref(const Matrix& a);

std::size_t rank(const Matrix& a);

/// Incrementally maintained reduced row space of Q^ambient. Rows are kept
/// in reduced echelon form at all times, so equality of spans is equality
/// of row lists.
class RowSpace {
public:
    explicit RowSpace(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return rows_.size(); }
    const std::vector<Vector>& rows() const { return rows_; }

    /// Residue of v after elimination against the current rows.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const { return reduce(v).is_zero(); }
    /// Inserts v if it enlarges the span; returns whether it did.
    bool insert(Vector v);

private:
    std::size_t ambient_;
    std::vector<Vector> rows_;            // reduced echelon rows
    std::vector<std::size_t> pivot_cols_; // parallel to rows_, strictly increasing
};

/// Ordered basis of a subspace of Q^ambient. Construction verifies linear
/// independence of the given vectors; membership tests are exact.
class SubspaceBasis {
public:
    SubspaceBasis(std::size_t ambient_dim, std::vector<Vector> vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return vectors_.size(); }
    const std::vector<Vector>& vectors() const { return vectors_; }

    bool contains(const Vector& v) const { return span_.contains(v); }
    bool contains_span_of(const SubspaceBasis& other) const;

private:
    std::size_t ambient_;
    std::vector<Vector> vectors_;
    RowSpace span_;
};

/// Canonical basis of {v : Av = 0}: one vector per free column of rref(A),
/// free columns ascending, with the free coordinate set to 1.
SubspaceBasis kernel_basis(const Matrix& a);

/// Canonical basis of the column space: rref rows of A^T, reshaped as
/// column vectors.
SubspaceBasis image_basis(const Matrix& a);

/// One exact solution of Ax = b, or nullopt when inconsistent. Free
/// coordinates are set to 0.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Exact inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

/// Monic minimal polynomial of a square matrix, coefficients low to high.
/// Found as the first linear dependency among vec(A^0), vec(A^1), ...
std::vector<Rational> minimal_polynomial(const Matrix& a);

/// p(A) by Horner's rule; coefficients low to high, empty means zero.
Matrix poly_at_matrix(const std::vector<Rational>& coeffs, const Matrix& a);

} // namespace opalg
