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

#include "omegapi/normal_forms.hpp"

#include "omegapi/combinatorics.hpp"
#include "omegapi/errors.hpp"

namespace omegapi {
namespace {

struct Letter {
    std::size_t variable;  // 1-based
    bool inverted;
};

Term gen(const char* name, std::size_t s, std::size_t t) { return Term::generator(name, s, t); }

Term build(std::size_t m, const std::vector<std::vector<Letter>>& outputs) {
    std::vector<std::size_t> uses(m + 1, 0);
    std::size_t total = 0;
    for (const auto& out : outputs)
        for (const auto& l : out) {
            if (l.variable < 1 || l.variable > m)
                throw ArityError("variable x" + std::to_string(l.variable) + " outside x1..x" + std::to_string(m));
            ++uses[l.variable];
            ++total;
        }

    std::vector<Term> copies;
    std::vector<std::size_t> offset(m + 2, 0);
    for (std::size_t q = 1; q <= m; ++q) {
        offset[q + 1] = offset[q] + uses[q];
        copies.push_back(uses[q] == 0 ? gen("eps", 1, 0) : delta_tree(uses[q]));
    }
    Term bottom = tensor_all(copies);

    // leg (q, r) sits at offset[q] + r and must reach the position of the
    // r-th occurrence of x_q
    std::vector<std::size_t> images(total);
    std::vector<std::size_t> seen(m + 1, 0);
    std::size_t pos = 0;
    std::vector<Term> antipodes;
    for (const auto& out : outputs)
        for (const auto& l : out) {
            images[offset[l.variable] + seen[l.variable]++] = pos + 1;
            antipodes.push_back(l.inverted ? gen("S", 1, 1) : Term::identity(1));
            ++pos;
        }
    Term routing = perm_to_term(Permutation::from_images(images));

    std::vector<Term> products;
    for (const auto& out : outputs) products.push_back(product_tree(out.size()));

    Term f = compose(tensor_all(products), compose(tensor_all(antipodes), compose(routing, bottom)));
    return flatten(f).term();
}

}  // namespace

Term delta_tree(std::size_t p) {
    if (p == 0) throw ArityError("a Delta tree needs at least one leg");
    Term t = Term::identity(1);
    for (std::size_t k = 2; k <= p; ++k) t = compose(whisker(0, gen("Delta", 1, 2), k - 2), t);
    return t;
}

Term product_tree(std::size_t t) {
    if (t == 0) return gen("u", 0, 1);
    Term p = Term::identity(1);
    for (std::size_t k = 2; k <= t; ++k) p = compose(p, whisker(0, gen("mu", 2, 1), k - 2));
    return p;
}

Term phi(std::size_t m, const std::vector<GroupWord>& words) {
    std::vector<std::vector<Letter>> outputs;
    for (const auto& w : words) {
        if (w.kind() != GroupWord::Kind::Free) throw ArityError("phi takes free group words");
        std::vector<Letter> out;
        for (int l : w.letters()) out.push_back({static_cast<std::size_t>(l > 0 ? l : -l), l < 0});
        outputs.push_back(std::move(out));
    }
    return build(m, outputs);
}

Term psi(std::size_t m, const std::vector<std::vector<std::int64_t>>& exponents) {
    std::vector<std::vector<Letter>> outputs;
    for (const auto& row : exponents) {
        if (row.size() != m)
            throw ArityError("exponent vector of length " + std::to_string(row.size()) + ", expected " +
                             std::to_string(m));
        std::vector<Letter> out;
        for (std::size_t r = 0; r < m; ++r) {
            std::int64_t s = row[r];
            for (std::int64_t j = 0; j < (s < 0 ? -s : s); ++j) out.push_back({r + 1, s < 0});
        }
        outputs.push_back(std::move(out));
    }
    return build(m, outputs);
}

Term psi(std::size_t m, const std::vector<GroupWord>& words) {
    std::vector<std::vector<std::int64_t>> exps;
    for (const auto& w : words) {
        if (w.kind() != GroupWord::Kind::FreeAbelian) throw ArityError("psi takes free abelian words");
        if (w.max_variable() > m)
            throw ArityError("variable x" + std::to_string(w.max_variable()) + " outside x1..x" + std::to_string(m));
        std::vector<std::int64_t> row(m, 0);
        for (std::size_t r = 0; r < m; ++r) row[r] = w.exponent(r + 1);
        exps.push_back(std::move(row));
    }
    return psi(m, exps);
}

}  // namespace omegapi
