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

#include "omegapi/linear_algebra.hpp"

#include <map>
#include <unordered_map>

namespace omegapi {

namespace {

struct EchelonRow {
    std::map<std::uint64_t, Rational> vec;  // smallest key is the pivot, coefficient 1
    std::map<std::size_t, Rational> combo;  // expresses vec in terms of the inputs
};

template <class Key>
void axpy(std::map<Key, Rational>& y, const Rational& a, const std::map<Key, Rational>& x) {
    for (const auto& [k, v] : x) {
        auto [it, inserted] = y.try_emplace(k, a * v);
        if (!inserted) {
            it->second += a * v;
            if (it->second.is_zero()) y.erase(it);
        }
    }
}

}  // namespace

std::vector<std::vector<Rational>> kernel_relations(const std::vector<SparseVector<Rational>>& vectors) {
    std::vector<EchelonRow> rows;
    std::unordered_map<std::uint64_t, std::size_t> by_pivot;
    std::vector<std::vector<Rational>> kernel;

    for (std::size_t i = 0; i < vectors.size(); ++i) {
        EchelonRow w;
        for (const auto& [k, v] : vectors[i])
            if (!v.is_zero()) w.vec[k] += v;
        w.combo[i] = 1;
        // entries added by a subtraction are all above the pivot being cleared
        auto it = w.vec.begin();
        while (it != w.vec.end()) {
            auto p = by_pivot.find(it->first);
            if (p == by_pivot.end()) {
                ++it;
                continue;
            }
            const std::uint64_t key = it->first;
            const Rational factor = -it->second;
            axpy(w.vec, factor, rows[p->second].vec);
            axpy(w.combo, factor, rows[p->second].combo);
            it = w.vec.upper_bound(key);
        }
        if (w.vec.empty()) {
            std::vector<Rational> relation(vectors.size());
            for (const auto& [k, v] : w.combo) relation[k] = v;
            kernel.push_back(std::move(relation));
            continue;
        }
        const Rational scale = w.vec.begin()->second.inverse();
        for (auto& [k, v] : w.vec) v *= scale;
        for (auto& [k, v] : w.combo) v *= scale;
        by_pivot.emplace(w.vec.begin()->first, rows.size());
        rows.push_back(std::move(w));
    }
    return kernel;
}

}  // namespace omegapi
