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

#include "omegapi/builtin_algebras.hpp"

#include <algorithm>
#include <stdexcept>

#include "omegapi/combinatorics.hpp"

namespace omegapi {

void validate_group_table(const GroupTable& table) {
    const std::size_t n = table.size();
    if (n == 0) throw std::invalid_argument("empty multiplication table");
    for (const auto& row : table) {
        if (row.size() != n) throw std::invalid_argument("multiplication table is not square");
        for (std::size_t x : row)
            if (x >= n) throw std::invalid_argument("multiplication table entry out of range");
    }
    std::size_t e = n;
    for (std::size_t g = 0; g < n && e == n; ++g) {
        bool ok = true;
        for (std::size_t h = 0; h < n && ok; ++h) ok = table[g][h] == h && table[h][g] == h;
        if (ok) e = g;
    }
    if (e == n) throw std::invalid_argument("multiplication table has no identity");
    for (std::size_t g = 0; g < n; ++g) {
        bool has_inverse = false;
        for (std::size_t h = 0; h < n; ++h) has_inverse |= table[g][h] == e && table[h][g] == e;
        if (!has_inverse) throw std::invalid_argument("element " + std::to_string(g) + " has no inverse");
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k)
                if (table[table[g][h]][k] != table[g][table[h][k]])
                    throw std::invalid_argument("multiplication table is not associative");
    }
}

GroupTable cyclic_group(std::size_t n) {
    if (n == 0) throw std::invalid_argument("cyclic group of order 0");
    GroupTable t(n, std::vector<std::size_t>(n));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h) t[g][h] = (g + h) % n;
    return t;
}

GroupTable symmetric_group(std::size_t n) {
    auto perms = Permutation::all(n);
    GroupTable t(perms.size(), std::vector<std::size_t>(perms.size()));
    for (std::size_t g = 0; g < perms.size(); ++g)
        for (std::size_t h = 0; h < perms.size(); ++h) {
            Permutation p = perms[g] * perms[h];
            t[g][h] = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
        }
    return t;
}

GroupTable named_group(std::string_view name) {
    if (name == "klein") {
        GroupTable t(4, std::vector<std::size_t>(4));
        for (std::size_t g = 0; g < 4; ++g)
            for (std::size_t h = 0; h < 4; ++h) t[g][h] = g ^ h;
        return t;
    }
    if (name.size() >= 2 && (name[0] == 'c' || name[0] == 's')) {
        std::size_t n = 0;
        for (char ch : name.substr(1)) {
            if (ch < '0' || ch > '9' || n > 1000) throw std::invalid_argument("bad group name");
            n = n * 10 + static_cast<std::size_t>(ch - '0');
        }
        if (name[0] == 'c' && n >= 1 && n <= 64) return cyclic_group(n);
        if (name[0] == 's' && n >= 1 && n <= 5) return symmetric_group(n);
    }
    throw std::invalid_argument("unknown group '" + std::string(name) + "' (use cN, sN with N <= 5, or klein)");
}

FiniteOmegaAlgebra group_hopf(const GroupTable& table) {
    validate_group_table(table);
    const std::size_t n = table.size();
    std::size_t e = 0;
    while (table[e][0] != 0 || table[0][e] != 0 || table[e][e] != e) ++e;
    Matrix mu(n, n * n), u(n, 1), delta(n * n, n), eps(1, n), s(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
            mu.set(table[g][h], g * n + h, 1);
            if (table[g][h] == e) s.set(h, g, 1);
        }
        delta.set(g * n + g, g, 1);
        eps.set(0, g, 1);
    }
    u.set(e, 0, 1);
    Signature sig{{"mu", 2, 1}, {"u", 0, 1}, {"Delta", 1, 2}, {"eps", 1, 0}, {"S", 1, 1}};
    return FiniteOmegaAlgebra(std::move(sig), n, {mu, u, delta, eps, s});
}

FiniteOmegaAlgebra kc2_hopf() { return group_hopf(cyclic_group(2)); }

FiniteOmegaAlgebra vector_space(std::size_t d) { return FiniteOmegaAlgebra(Signature{}, d, {}); }

Matrix yd_kc2_braiding() {
    // columns a⊗a, a⊗b, b⊗a, b⊗b
    Matrix c(4, 4);
    c.set(0, 0, 1);
    c.set(2, 1, 1);
    c.set(1, 2, -1);
    c.set(3, 3, 1);
    return c;
}

FiniteOmegaAlgebra yd_kc2_sigma() {
    return FiniteOmegaAlgebra(Signature{{"sigma", 2, 2}}, 2, {yd_kc2_braiding()});
}

FiniteOmegaAlgebra yd_kc2_braided() {
    return FiniteOmegaAlgebra(Signature{}, 2, {}, Braiding::custom(yd_kc2_braiding()));
}

const std::vector<BuiltinInfo>& builtin_catalog() {
    static const std::vector<BuiltinInfo> catalog{
        {"kc2-hopf", "group Hopf algebra of the cyclic group of order 2 (dim 2, mu/u/Delta/eps/S)"},
        {"group-hopf", "group Hopf algebra of a finite group (--group cN | sN | klein)"},
        {"vector-space", "bare vector space of dimension --dim, swap braiding"},
        {"yd-kc2-sigma", "2-dim Yetter-Drinfel'd module over kC2, braiding as generator sigma, swap backend"},
        {"yd-kc2-braided", "2-dim Yetter-Drinfel'd module over kC2, braiding as the backend, no generators"},
    };
    return catalog;
}

FiniteOmegaAlgebra builtin_algebra(std::string_view name, const BuiltinParams& params) {
    if (name == "kc2-hopf") return kc2_hopf();
    if (name == "group-hopf") return group_hopf(named_group(params.group));
    if (name == "vector-space") {
        if (params.dim == 0) throw std::invalid_argument("vector-space needs --dim >= 1");
        return vector_space(params.dim);
    }
    if (name == "yd-kc2-sigma") return yd_kc2_sigma();
    if (name == "yd-kc2-braided") return yd_kc2_braided();
    throw std::invalid_argument("unknown builtin algebra '" + std::string(name) + "'");
}

}  // namespace omegapi
