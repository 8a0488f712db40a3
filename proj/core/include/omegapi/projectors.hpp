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

#ifndef OMEGAPI_PROJECTORS_HPP
#define OMEGAPI_PROJECTORS_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "omegapi/combinatorics.hpp"
#include "omegapi/polynomial.hpp"

namespace omegapi {

/*
 * Projector families for the two-dimensional Yetter-Drinfel'd module.
 * Indices are 1-based tensor positions; all functions throw
 * std::invalid_argument for indices outside 1..n or i == j.
 */

// Least permutation (lexicographically) with ρ(1) = first, ρ(2) = second.
Permutation routing_permutation(std::size_t n, std::size_t first, std::size_t second);

/*
 * Over {sigma} with the ordinary swap: p_21 = ½(id_2 - tau(1,1) . sigma) # id_{n-2},
 * and p_ij = θ(ρ) p_21 θ(ρ)^{-1} with ρ(2) = i, ρ(1) = j. Over the YD
 * module it keeps u_1⊗...⊗u_n when u_i = a and u_j = b and kills the rest.
 */
Polynomial p_ij(std::size_t n, std::size_t i, std::size_t j);
// Π_{i∈I, j∉I} p_ij for a proper nonempty I.
Polynomial p_subset(std::size_t n, const std::set<std::size_t>& in);
// id_n - Σ_I p_I.
Polynomial p_empty(std::size_t n);

/*
 * Over ∅ with the YD braiding: q_ij = ½ θ(ρ)(id_n - τ² # id_{n-2}) θ(ρ)^{-1}
 * and r_ij likewise with +, where ρ is a braid with underlying permutation
 * sending 1 to min(i,j) and 2 to max(i,j). By default ρ is the positive lift
 * of routing_permutation; any other braid with that property may be passed.
 */
Polynomial q_ij(std::size_t n, std::size_t i, std::size_t j, const std::optional<BraidWord>& rho = std::nullopt);
Polynomial r_ij(std::size_t n, std::size_t i, std::size_t j, const std::optional<BraidWord>& rho = std::nullopt);
BraidWord default_rho(std::size_t n, std::size_t i, std::size_t j);

// q_{I,Ī}; the empty set (or the full set) gives q_∅ = id - Σ over all
// unordered splits {I, Ī} with both parts nonempty.
Polynomial q_decomp(std::size_t n, const std::set<std::size_t>& in);

// All unordered splits {I, Ī} with I nonempty and proper, represented by
// the part containing 1.
std::vector<std::set<std::size_t>> unordered_splits(std::size_t n);

}  // namespace omegapi

#endif
