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

#ifndef OMEGAPI_BUILTIN_ALGEBRAS_HPP
#define OMEGAPI_BUILTIN_ALGEBRAS_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "omegapi/algebra.hpp"

namespace omegapi {

// Group multiplication table over elements 0..n-1: table[g][h] = gh.
using GroupTable = std::vector<std::vector<std::size_t>>;

// Throws std::invalid_argument unless the table is a group.
void validate_group_table(const GroupTable& table);
GroupTable cyclic_group(std::size_t n);
// S_n with elements in lexicographic order of image arrays (identity first).
GroupTable symmetric_group(std::size_t n);
// "c<N>", "s<N>" (N <= 5), "klein".
GroupTable named_group(std::string_view name);

/*
 * Group Hopf algebra kG on the basis of group elements, with signature
 * {mu, u, Delta, eps, S}: mu(g⊗h) = gh, u = e, Delta g = g⊗g, eps g = 1,
 * S g = g^{-1}.
 */
FiniteOmegaAlgebra group_hopf(const GroupTable& table);
// kC₂ with basis 1 (index 0) and c (index 1).
FiniteOmegaAlgebra kc2_hopf();
// Bare vector space of dimension d: no generators, swap braiding.
FiniteOmegaAlgebra vector_space(std::size_t d);

/*
 * The two-dimensional Yetter-Drinfel'd module ⟨a, b⟩ over kC₂ (a index 0,
 * b index 1) with coaction a -> 1⊗a, b -> c⊗b and action ca = -a, cb = b.
 * Its braiding m⊗n -> m_{(-1)}n ⊗ m_{(0)} is
 *   a⊗a -> a⊗a, a⊗b -> b⊗a, b⊗a -> -a⊗b, b⊗b -> b⊗b.
 */
Matrix yd_kc2_braiding();
// The YD braiding as a generator "sigma" over the ordinary swap.
FiniteOmegaAlgebra yd_kc2_sigma();
// No generators; the YD braiding is the backend braiding.
FiniteOmegaAlgebra yd_kc2_braided();

struct BuiltinParams {
    std::size_t dim = 2;             // vector-space
    std::string group = "s3";        // group-hopf
};

struct BuiltinInfo {
    std::string name;
    std::string description;
};

const std::vector<BuiltinInfo>& builtin_catalog();
// Throws std::invalid_argument for an unknown name or bad parameters.
FiniteOmegaAlgebra builtin_algebra(std::string_view name, const BuiltinParams& params = {});

}  // namespace omegapi

#endif
