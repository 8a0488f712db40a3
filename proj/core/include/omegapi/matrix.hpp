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

#ifndef OMEGAPI_MATRIX_HPP
#define OMEGAPI_MATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "omegapi/rational.hpp"

namespace omegapi {

// Sparse vector: (index, value) pairs sorted by index, no stored zeros.
template <class T>
using SparseVector = std::vector<std::pair<std::uint64_t, T>>;

/*
 * Sparse exact matrix. Entries live in a coordinate map keyed by the
 * row-major flat index row * cols + col, so iterating the map walks the
 * matrix in row-major order and the keys are exactly the flattened
 * coordinates used for span vectors.
 */
class Matrix {
   public:
    using Storage = std::map<std::uint64_t, Rational>;

    Matrix() = default;
    Matrix(std::uint64_t rows, std::uint64_t cols) : rows_(rows), cols_(cols) {}

    static Matrix identity(std::uint64_t n);
    static Matrix from_dense(const std::vector<std::vector<Rational>>& rows);
    // Permutation matrix with column j mapped to row images[j].
    static Matrix permutation(const std::vector<std::uint64_t>& images);

    std::uint64_t rows() const noexcept { return rows_; }
    std::uint64_t cols() const noexcept { return cols_; }
    std::size_t nonzeros() const noexcept { return entries_.size(); }
    bool is_zero() const noexcept { return entries_.empty(); }
    const Storage& entries() const noexcept { return entries_; }

    Rational at(std::uint64_t row, std::uint64_t col) const;
    void set(std::uint64_t row, std::uint64_t col, const Rational& value);
    void add_to(std::uint64_t row, std::uint64_t col, const Rational& value);

    std::vector<std::vector<Rational>> to_dense() const;
    // Row-major flattening; length rows*cols.
    SparseVector<Rational> flatten() const;
    static Matrix unflatten(std::uint64_t rows, std::uint64_t cols, const SparseVector<Rational>& v);

    // Column j as a sparse vector (used for witnesses and group-like checks).
    SparseVector<Rational> column(std::uint64_t col) const;

    Matrix& operator+=(const Matrix& rhs);
    Matrix& operator-=(const Matrix& rhs);
    Matrix& operator*=(const Rational& scalar);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

   private:
    std::uint64_t rows_ = 0;
    std::uint64_t cols_ = 0;
    Storage entries_;
};

// Throws DimensionError unless a.cols() == b.rows().
Matrix mat_mul(const Matrix& a, const Matrix& b);
// Row index convention (i1 * rows(b) + i2), likewise for columns.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix matrix_power(const Matrix& a, unsigned exponent);
// Exact inverse by Gauss-Jordan; nullopt when singular. Throws if not square.
std::optional<Matrix> inverse(const Matrix& a);
std::size_t rank(const Matrix& a);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace omegapi

#endif
