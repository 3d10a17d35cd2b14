/*
   Copyright 2026 The cremona-kit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CREMONA_LINALG_HPP
#define CREMONA_LINALG_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

using Vector = std::vector<Rational>;

// Dense row-major matrix of rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows);
    static Matrix from_columns(const std::vector<Vector>& cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    std::vector<Vector> to_rows() const;
    Matrix transpose() const;

    Vector apply(std::span<const Rational> v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

struct Echelon {
    Matrix rref;                       // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Fraction-free (Bareiss) forward elimination over the integers after
// clearing row denominators, followed by exact back-reduction to RREF.
Echelon row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

// Canonical basis of {v : m v = 0}: one vector per free column, with a 1 in
// that column and zeros in the other free columns.
std::vector<Vector> nullspace(const Matrix& m);

Rational determinant(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace cremona

#endif
