/*
   Copyright 2026 The omegapi Authors

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

#include "omegapi/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "omegapi/errors.hpp"
#include "omegapi/span_basis.hpp"

namespace omegapi {

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

}  // namespace

Matrix Matrix::identity(std::uint64_t n) {
    Matrix m(n, n);
    for (std::uint64_t i = 0; i < n; ++i) m.entries_.emplace_hint(m.entries_.end(), i * n + i, Rational(1));
    return m;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
    const std::uint64_t r = rows.size();
    const std::uint64_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(r, c);
    for (std::uint64_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw DimensionError("ragged dense matrix: row " + std::to_string(i));
        for (std::uint64_t j = 0; j < c; ++j)
            if (!rows[i][j].is_zero()) m.entries_.emplace_hint(m.entries_.end(), i * c + j, rows[i][j]);
    }
    return m;
}

Matrix Matrix::permutation(const std::vector<std::uint64_t>& images) {
    const std::uint64_t n = images.size();
    Matrix m(n, n);
    for (std::uint64_t j = 0; j < n; ++j) {
        if (images[j] >= n) throw DimensionError("permutation image out of range");
        m.set(images[j], j, Rational(1));
    }
    return m;
}

Rational Matrix::at(std::uint64_t row, std::uint64_t col) const {
    if (row >= rows_ || col >= cols_) throw DimensionError("index out of range for " + shape(*this));
    auto it = entries_.find(row * cols_ + col);
    return it == entries_.end() ? Rational() : it->second;
}

void Matrix::set(std::uint64_t row, std::uint64_t col, const Rational& value) {
    if (row >= rows_ || col >= cols_) throw DimensionError("index out of range for " + shape(*this));
    const std::uint64_t key = row * cols_ + col;
    if (value.is_zero()) {
        entries_.erase(key);
    } else {
        entries_[key] = value;
    }
}

void Matrix::add_to(std::uint64_t row, std::uint64_t col, const Rational& value) {
    if (value.is_zero()) return;
    const std::uint64_t key = row * cols_ + col;
    auto [it, inserted] = entries_.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

std::vector<std::vector<Rational>> Matrix::to_dense() const {
    std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols_));
    for (const auto& [key, v] : entries_) out[key / cols_][key % cols_] = v;
    return out;
}

SparseVector<Rational> Matrix::flatten() const { return {entries_.begin(), entries_.end()}; }

Matrix Matrix::unflatten(std::uint64_t rows, std::uint64_t cols, const SparseVector<Rational>& v) {
    Matrix m(rows, cols);
    for (const auto& [key, value] : v) {
        if (key >= rows * cols) throw DimensionError("flat index out of range");
        if (!value.is_zero()) m.entries_[key] = value;
    }
    return m;
}

SparseVector<Rational> Matrix::column(std::uint64_t col) const {
    SparseVector<Rational> out;
    for (const auto& [key, v] : entries_)
        if (key % cols_ == col) out.emplace_back(key / cols_, v);
    return out;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum " + shape(*this) + " + " + shape(rhs));
    for (const auto& [key, v] : rhs.entries_) {
        auto [it, inserted] = entries_.try_emplace(key, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
    Matrix neg = rhs;
    neg *= Rational(-1);
    return *this += neg;
}

Matrix& Matrix::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& [key, v] : entries_) v *= scalar;
    return *this;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("mat_mul " + shape(a) + " * " + shape(b));
    // accumulate per output row so the result map is built in order
    Matrix out(a.rows(), b.cols());
    const auto& be = b.entries();
    auto it = a.entries().begin();
    const auto end = a.entries().end();
    std::map<std::uint64_t, Rational> row_acc;
    while (it != end) {
        const std::uint64_t row = it->first / a.cols();
        row_acc.clear();
        for (; it != end && it->first / a.cols() == row; ++it) {
            const std::uint64_t k = it->first % a.cols();
            auto bit = be.lower_bound(k * b.cols());
            const auto bend = be.lower_bound((k + 1) * b.cols());
            for (; bit != bend; ++bit) {
                Rational prod = it->second * bit->second;
                const std::uint64_t col = bit->first - k * b.cols();
                auto acc = row_acc.find(col);
                if (acc == row_acc.end()) {
                    row_acc.emplace(col, std::move(prod));
                } else {
                    acc->second += prod;
                }
            }
        }
        for (auto& [col, v] : row_acc)
            if (!v.is_zero()) out.add_to(row, col, v);
    }
    return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (const auto& [ka, va] : a.entries()) {
        const std::uint64_t ia = ka / a.cols(), ja = ka % a.cols();
        for (const auto& [kb, vb] : b.entries()) {
            const std::uint64_t ib = kb / b.cols(), jb = kb % b.cols();
            out.set(ia * b.rows() + ib, ja * b.cols() + jb, va * vb);
        }
    }
    return out;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (const auto& [key, v] : a.entries()) out.set(key % a.cols(), key / a.cols(), v);
    return out;
}

Matrix matrix_power(const Matrix& a, unsigned exponent) {
    if (a.rows() != a.cols()) throw DimensionError("matrix_power needs a square matrix, got " + shape(a));
    Matrix result = Matrix::identity(a.rows());
    for (unsigned i = 0; i < exponent; ++i) result = mat_mul(result, a);
    return result;
}

std::optional<Matrix> inverse(const Matrix& a) {
    if (a.rows() != a.cols()) throw DimensionError("inverse needs a square matrix, got " + shape(a));
    const std::uint64_t n = a.rows();
    auto m = a.to_dense();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
    for (std::uint64_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (std::uint64_t col = 0; col < n; ++col) {
        std::uint64_t pivot = col;
        while (pivot < n && m[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        const Rational scale = m[col][col].inverse();
        for (std::uint64_t j = 0; j < n; ++j) {
            m[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (std::uint64_t r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            const Rational f = m[r][col];
            for (std::uint64_t j = 0; j < n; ++j) {
                if (!m[col][j].is_zero()) m[r][j] -= f * m[col][j];
                if (!inv[col][j].is_zero()) inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return Matrix::from_dense(inv);
}

std::size_t rank(const Matrix& a) {
    SpanBasis<RationalField> basis(a.cols());
    for (std::uint64_t r = 0; r < a.rows(); ++r) {
        SparseVector<Rational> row;
        auto it = a.entries().lower_bound(r * a.cols());
        const auto end = a.entries().lower_bound((r + 1) * a.cols());
        for (; it != end; ++it) row.emplace_back(it->first - r * a.cols(), it->second);
        basis.insert(std::move(row));
    }
    return basis.rank();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    const auto dense = m.to_dense();
    for (const auto& row : dense) {
        os << '[';
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << "]\n";
    }
    return os;
}

}  // namespace omegapi
