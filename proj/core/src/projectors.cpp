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

#include "omegapi/projectors.hpp"

#include <stdexcept>

namespace omegapi {
namespace {

void check_pair(std::size_t n, std::size_t i, std::size_t j) {
    if (n < 2 || i < 1 || j < 1 || i > n || j > n || i == j)
        throw std::invalid_argument("projector indices (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") invalid for n = " + std::to_string(n));
}

const Rational kHalf(1, 2);

Polynomial conjugate(const Term& g, const Polynomial& p, const Term& g_inv) {
    return compose(compose(Polynomial(g), p), Polynomial(g_inv));
}

Polynomial product(const std::vector<Polynomial>& factors, std::size_t n) {
    Polynomial acc(Term::identity(n));
    for (const auto& f : factors) acc = compose(acc, f);
    return acc;
}

Polynomial q_or_r(std::size_t n, std::size_t i, std::size_t j, const std::optional<BraidWord>& rho, int sign) {
    check_pair(n, i, j);
    BraidWord b = rho ? *rho : default_rho(n, i, j);
    b.validate();
    Permutation p = b.permutation();
    if (b.strands != n || p(1) != std::min(i, j) || p(2) != std::max(i, j))
        throw std::invalid_argument("routing braid must send strands 1, 2 to min(i,j), max(i,j)");
    Term twist = whisker(0, compose(Term::braid(1, 1), Term::braid(1, 1)), n - 2);
    Polynomial core(Term::identity(n), kHalf);
    core.add_term(twist, sign * kHalf);
    return conjugate(braid_to_term(b), core, braid_to_term(b.inverse()));
}

}  // namespace

Permutation routing_permutation(std::size_t n, std::size_t first, std::size_t second) {
    check_pair(n, first, second);
    std::vector<std::size_t> img{first, second};
    for (std::size_t v = 1; v <= n; ++v)
        if (v != first && v != second) img.push_back(v);
    return Permutation::from_images(img);
}

Polynomial p_ij(std::size_t n, std::size_t i, std::size_t j) {
    check_pair(n, i, j);
    Term sigma = Term::generator("sigma", 2, 2);
    Polynomial base(Term::identity(n), kHalf);
    base.add_term(whisker(0, compose(Term::braid(1, 1), sigma), n - 2), -kHalf);
    Permutation rho = routing_permutation(n, j, i);
    return conjugate(perm_to_term(rho), base, perm_to_term(rho.inverse()));
}

Polynomial p_subset(std::size_t n, const std::set<std::size_t>& in) {
    if (in.empty() || in.size() >= n) throw std::invalid_argument("p_I needs a proper nonempty subset");
    std::vector<Polynomial> factors;
    for (std::size_t i : in)
        for (std::size_t j = 1; j <= n; ++j)
            if (!in.count(j)) factors.push_back(p_ij(n, i, j));
    return product(factors, n);
}

Polynomial p_empty(std::size_t n) {
    Polynomial out(Term::identity(n));
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        std::set<std::size_t> in;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) in.insert(k + 1);
        out -= p_subset(n, in);
    }
    return out;
}

BraidWord default_rho(std::size_t n, std::size_t i, std::size_t j) {
    check_pair(n, i, j);
    return BraidWord::positive_lift(routing_permutation(n, std::min(i, j), std::max(i, j)));
}

Polynomial q_ij(std::size_t n, std::size_t i, std::size_t j, const std::optional<BraidWord>& rho) {
    return q_or_r(n, i, j, rho, -1);
}

Polynomial r_ij(std::size_t n, std::size_t i, std::size_t j, const std::optional<BraidWord>& rho) {
    return q_or_r(n, i, j, rho, +1);
}

std::vector<std::set<std::size_t>> unordered_splits(std::size_t n) {
    std::vector<std::set<std::size_t>> out;
    if (n < 2) return out;
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
        if (!(mask & 1)) continue;
        std::set<std::size_t> in;
        for (std::size_t k = 0; k < n; ++k)
            if (mask >> k & 1) in.insert(k + 1);
        out.push_back(std::move(in));
    }
    return out;
}

Polynomial q_decomp(std::size_t n, const std::set<std::size_t>& in) {
    for (std::size_t x : in)
        if (x < 1 || x > n) throw std::invalid_argument("subset entry outside 1..n");
    if (in.empty() || in.size() == n) {
        Polynomial out(Term::identity(n));
        for (const auto& part : unordered_splits(n)) out -= q_decomp(n, part);
        return out;
    }
    std::vector<Polynomial> factors;
    std::vector<std::size_t> inside(in.begin(), in.end());
    std::vector<std::size_t> outside;
    for (std::size_t j = 1; j <= n; ++j)
        if (!in.count(j)) outside.push_back(j);
    for (std::size_t i : inside)
        for (std::size_t j : outside) factors.push_back(q_ij(n, i, j));
    for (const auto* block : {&inside, &outside})
        for (std::size_t a = 0; a < block->size(); ++a)
            for (std::size_t b = a + 1; b < block->size(); ++b) factors.push_back(r_ij(n, (*block)[a], (*block)[b]));
    return product(factors, n);
}

}  // namespace omegapi
