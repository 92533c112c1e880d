/*
   Copyright 2026 The aim Authors

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

#ifndef AIM_MATRIX_HPP
#define AIM_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "aim/errors.hpp"

namespace aim {

/// Dense row-major matrix over a field.
template <class F>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, F(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<F> data) : rows_(rows), cols_(cols), a_(std::move(data)) {
        if (a_.size() != rows * cols) throw UsageError("matrix data does not match its dimensions");
    }
    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    F& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

   private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<F> a_;
};

template <class F>
std::vector<F> operator*(const Matrix<F>& m, const std::vector<F>& v) {
    if (v.size() != m.cols()) throw UsageError("matrix-vector dimension mismatch");
    std::vector<F> out(m.rows(), F(0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] = out[r] + m(r, c) * v[c];
    return out;
}

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const F inv = F(1) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            const F f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) = m(r, c) - f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
    return row_reduce(m).size();
}

/// Basis of {v : m v = 0}; one vector per free column, with a 1 in that column.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m) {
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// 2x2 determinant helper.
template <class F>
F det2(const F& a, const F& b, const F& c, const F& d) {
    return a * d - b * c;
}

}  // namespace aim

#endif
