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

#ifndef OMEGAPI_SPAN_BASIS_HPP
#define OMEGAPI_SPAN_BASIS_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omegapi/errors.hpp"
#include "omegapi/field.hpp"
#include "omegapi/matrix.hpp"

namespace omegapi {

/*
 * Incremental basis of a subspace of F^N kept in reduced row echelon form.
 *
 * Every stored row is sparse, has leading coefficient 1 at its pivot, and is
 * zero at every other row's pivot. The RREF of a subspace is unique, so the
 * stored rows depend only on the span and not on the insertion order.
 *
 * reduce() is const and may run concurrently with other reduce() calls;
 * insert() needs exclusive access.
 */
template <class Field>
class SpanBasis {
   public:
    using value_type = typename Field::value_type;
    using Vector = SparseVector<value_type>;

    explicit SpanBasis(std::uint64_t ambient, Field field = Field{}) : ambient_(ambient), field_(std::move(field)) {}

    std::uint64_t ambient() const noexcept { return ambient_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const Field& field() const noexcept { return field_; }
    // Total stored nonzeros; used by callers enforcing memory caps.
    std::size_t stored_entries() const noexcept { return stored_; }

    // Remainder of v modulo the span. It is supported on non-pivot columns,
    // and is empty iff v lies in the span. Input need not be sorted but must
    // not repeat indices.
    Vector reduce(const Vector& v) const {
        Vector acc;
        acc.reserve(v.size());
        for (const auto& [idx, x] : v) {
            check_index(idx);
            if (field_.is_zero(x)) continue;
            auto p = pivot_row_.find(idx);
            if (p == pivot_row_.end()) {
                acc.emplace_back(idx, x);
                continue;
            }
            // row has 1 at idx; subtracting x*row clears idx and only touches free columns
            for (const auto& [j, r] : rows_[p->second]) {
                if (j == idx) continue;
                acc.emplace_back(j, field_.neg(field_.mul(x, r)));
            }
        }
        return combine(std::move(acc));
    }

    bool contains(const Vector& v) const { return reduce(v).empty(); }

    // Returns true iff the rank grew.
    bool insert(const Vector& v) { return insert_reduced(reduce(v)); }

    // Inserts a vector already reduced against the current basis (the output
    // of reduce() with no insertions in between). Re-reduces defensively if
    // the basis changed, so a stale remainder is still handled correctly.
    bool insert_reduced(Vector r) {
        if (r.empty()) return false;
        for (const auto& e : r) {
            if (pivot_row_.count(e.first)) {
                r = reduce(r);
                break;
            }
        }
        if (r.empty()) return false;
        const std::uint64_t pivot = r.front().first;
        const value_type scale = field_.inv(r.front().second);
        for (auto& e : r) e.second = field_.mul(e.second, scale);

        for (auto& row : rows_) {
            auto it = std::lower_bound(row.begin(), row.end(), pivot,
                                       [](const auto& e, std::uint64_t k) { return e.first < k; });
            if (it == row.end() || it->first != pivot) continue;
            const value_type f = it->second;
            Vector merged;
            merged.reserve(row.size() + r.size());
            auto a = row.begin();
            auto b = r.begin();
            while (a != row.end() || b != r.end()) {
                if (b == r.end() || (a != row.end() && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == row.end() || b->first < a->first) {
                    merged.emplace_back(b->first, field_.neg(field_.mul(f, b->second)));
                    ++b;
                } else {
                    value_type x = field_.sub(a->second, field_.mul(f, b->second));
                    if (!field_.is_zero(x)) merged.emplace_back(a->first, std::move(x));
                    ++a;
                    ++b;
                }
            }
            stored_ += merged.size();
            stored_ -= row.size();
            row = std::move(merged);
        }
        pivot_row_.emplace(pivot, rows_.size());
        stored_ += r.size();
        rows_.push_back(std::move(r));
        return true;
    }

    // Rows ordered by strictly increasing pivot.
    std::vector<Vector> basis() const {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return rows_[a].front().first < rows_[b].front().first; });
        std::vector<Vector> out;
        out.reserve(order.size());
        for (std::size_t i : order) out.push_back(rows_[i]);
        return out;
    }

    std::vector<std::uint64_t> pivots() const {
        std::vector<std::uint64_t> out;
        out.reserve(rows_.size());
        for (const auto& row : rows_) out.push_back(row.front().first);
        std::sort(out.begin(), out.end());
        return out;
    }

   private:
    void check_index(std::uint64_t idx) const {
        if (idx >= ambient_)
            throw DimensionError("span vector index " + std::to_string(idx) + " outside ambient dimension " +
                                 std::to_string(ambient_));
    }

    Vector combine(Vector acc) const {
        std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Vector out;
        out.reserve(acc.size());
        for (auto& e : acc) {
            if (!out.empty() && out.back().first == e.first) {
                out.back().second = field_.add(out.back().second, e.second);
            } else {
                if (!out.empty() && field_.is_zero(out.back().second)) out.pop_back();
                out.push_back(std::move(e));
            }
        }
        if (!out.empty() && field_.is_zero(out.back().second)) out.pop_back();
        return out;
    }

    std::uint64_t ambient_;
    Field field_;
    std::vector<Vector> rows_;
    std::unordered_map<std::uint64_t, std::size_t> pivot_row_;
    std::size_t stored_ = 0;
};

// Inserts a matrix flattened row-major. Throws DimensionError on length mismatch.
inline bool span_insert(SpanBasis<RationalField>& basis, const Matrix& m) {
    if (m.rows() * m.cols() != basis.ambient())
        throw DimensionError("matrix of " + std::to_string(m.rows() * m.cols()) + " entries into span of ambient " +
                             std::to_string(basis.ambient()));
    return basis.insert(m.flatten());
}

// Maps a rational sparse vector into another field, dropping entries that vanish.
template <class Field>
SparseVector<typename Field::value_type> convert_vector(const Field& field, const SparseVector<Rational>& v) {
    SparseVector<typename Field::value_type> out;
    out.reserve(v.size());
    for (const auto& [i, x] : v) {
        auto y = field.from(x);
        if (!field.is_zero(y)) out.emplace_back(i, std::move(y));
    }
    return out;
}

}  // namespace omegapi

#endif
