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

#ifndef OMEGAPI_TESTS_SUPPORT_HPP
#define OMEGAPI_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "omegapi/algebra.hpp"
#include "omegapi/signature.hpp"
#include "omegapi/term.hpp"

namespace omegapi::testing {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Signature exercising every arity shape up to 2.
inline Signature mixed_signature() {
    return Signature{{"f", 1, 1}, {"m", 2, 1}, {"c", 1, 2}, {"e", 1, 0}, {"z", 0, 1}, {"s", 2, 2}};
}

// Random algebra over the signature with entries in -2..2.
inline FiniteOmegaAlgebra random_algebra(Rng& rng, const Signature& sig, std::size_t d = 2) {
    std::vector<Matrix> structure;
    for (const auto& g : sig.generators()) {
        const std::uint64_t rows = checked_power(d, g.coarity);
        const std::uint64_t cols = checked_power(d, g.arity);
        Matrix m(rows, cols);
        for (std::uint64_t r = 0; r < rows; ++r)
            for (std::uint64_t c = 0; c < cols; ++c)
                m.set(r, c, Rational(static_cast<std::int64_t>(pick(rng, 0, 4)) - 2));
        structure.push_back(std::move(m));
    }
    return FiniteOmegaAlgebra(sig, d, std::move(structure));
}

// A single leaf with domain exactly dom, padded with identities.
inline Term random_layer(Rng& rng, const Signature& sig, std::size_t dom, std::size_t max_object) {
    std::vector<Term> leaves{Term::identity(1)};
    if (dom >= 2) {
        leaves.push_back(Term::braid(1, 1));
        leaves.push_back(Term::braid_inverse(1, 1));
    }
    if (dom >= 3) {
        leaves.push_back(Term::braid(1, 2));
        leaves.push_back(Term::braid_inverse(2, 1));
    }
    for (const auto& g : sig.generators())
        if (g.arity <= dom) leaves.push_back(Term::generator(g.name, g.arity, g.coarity));
    const Term& x = leaves[pick(rng, 0, leaves.size() - 1)];
    if (x.dom() > dom) return Term::identity(dom);
    const std::size_t a = pick(rng, 0, dom - x.dom());
    const std::size_t b = dom - x.dom() - a;
    if (a + x.cod() + b > max_object) return Term::identity(dom);
    // keep raw identity factors so flattening has work to do
    return tensor(tensor(Term::identity(a), x), Term::identity(b));
}

// Random term with the given domain; objects along the way stay <= max_object.
inline Term random_term(Rng& rng, const Signature& sig, std::size_t dom, std::size_t depth,
                        std::size_t max_object = 4) {
    const std::size_t choice = depth == 0 ? 0 : pick(rng, 0, 3);
    if (choice <= 1) return random_layer(rng, sig, dom, max_object);
    if (choice == 2) {
        Term g = random_term(rng, sig, dom, depth - 1, max_object);
        Term f = random_term(rng, sig, g.cod(), depth - 1, max_object);
        return compose(f, g);
    }
    const std::size_t left = pick(rng, 0, dom);
    Term f = random_term(rng, sig, left, depth - 1, max_object / 2 + 1);
    Term g = random_term(rng, sig, dom - left, depth - 1, max_object / 2 + 1);
    return tensor(f, g);
}

}  // namespace omegapi::testing

#endif
