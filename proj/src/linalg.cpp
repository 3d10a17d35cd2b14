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

#include "cremona/linalg.hpp"

#include <utility>

#include "cremona/error.hpp"

namespace cremona {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw Error(ErrorCode::ArityMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
    return from_rows(cols).transpose();
}

Vector Matrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector Matrix::column(std::size_t j) const {
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

std::vector<Vector> Matrix::to_rows() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector Matrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw Error(ErrorCode::ArityMismatch, "matrix-vector size mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != 0 && v[j] != 0) s += (*this)(i, j) * v[j];
        }
        out[i] = s;
    }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::ArityMismatch, "matrix product size mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Scale each row by the lcm of its denominators.
IntRows integer_rows(const Matrix& m) {
    IntRows out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    }
    return out;
}

struct BareissResult {
    IntRows rows;
    std::vector<std::size_t> pivots;
    int sign = 1;
};

BareissResult bareiss(IntRows a, std::size_t ncols) {
    BareissResult res;
    const std::size_t nrows = a.size();
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t p = r;
        while (p < nrows && a[p][c] == 0) ++p;
        if (p == nrows) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            res.sign = -res.sign;
        }
        const Integer& piv = a[r][c];
        for (std::size_t i = r + 1; i < nrows; ++i) {
            const Integer factor = a[i][c];
            for (std::size_t j = c + 1; j < ncols; ++j) {
                Integer t = piv * a[i][j] - factor * a[r][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = std::move(t);
            }
            a[i][c] = 0;
        }
        prev = piv;
        res.pivots.push_back(c);
        ++r;
    }
    res.rows = std::move(a);
    return res;
}

}  // namespace

Echelon row_echelon(const Matrix& m) {
    Echelon out;
    if (m.rows() == 0 || m.cols() == 0) {
        out.rref = m;
        return out;
    }
    auto fe = bareiss(integer_rows(m), m.cols());
    const std::size_t rk = fe.pivots.size();
    Matrix rref(m.rows(), m.cols());
    for (std::size_t i = 0; i < rk; ++i) {
        const Integer& piv = fe.rows[i][fe.pivots[i]];
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (fe.rows[i][j] != 0) rref(i, j) = Rational(fe.rows[i][j], piv);
            rref(i, j).canonicalize();
        }
    }
    for (std::size_t k = rk; k-- > 0;) {
        const std::size_t pc = fe.pivots[k];
        for (std::size_t i = 0; i < k; ++i) {
            const Rational f = rref(i, pc);
            if (f == 0) continue;
            for (std::size_t j = pc; j < m.cols(); ++j) {
                if (rref(k, j) != 0) rref(i, j) -= f * rref(k, j);
            }
        }
    }
    out.rref = std::move(rref);
    out.pivots = std::move(fe.pivots);
    return out;
}

std::size_t rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return bareiss(integer_rows(m), m.cols()).pivots.size();
}

std::vector<Vector> nullspace(const Matrix& m) {
    const std::size_t n = m.cols();
    if (m.rows() == 0) {
        std::vector<Vector> basis;
        for (std::size_t j = 0; j < n; ++j) {
            Vector v(n);
            v[j] = 1;
            basis.push_back(std::move(v));
        }
        return basis;
    }
    const Echelon e = row_echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rref(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    Integer scale = 1;
    IntRows rows = integer_rows(m);
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        scale *= l;
    }
    auto fe = bareiss(std::move(rows), n);
    if (fe.pivots.size() < n) return 0;
    Rational d(fe.rows[n - 1][n - 1] * fe.sign, scale);
    d.canonicalize();
    return d;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    const Echelon e = row_echelon(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
    return inv;
}

}  // namespace cremona
