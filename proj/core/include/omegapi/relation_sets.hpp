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

#ifndef OMEGAPI_RELATION_SETS_HPP
#define OMEGAPI_RELATION_SETS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "omegapi/evaluate.hpp"
#include "omegapi/signature.hpp"

namespace omegapi {

// Named relators f, each read as the identity f ≡ 0.
struct RelationSet {
    std::string name;
    Signature signature;
    std::vector<NamedPolynomial> relators;
};

RelationSet v_symm();
RelationSet v_assoc();
// V_symm plus the twelve bialgebra and antipode relators.
RelationSet v_hopf();
RelationSet v_cochopf();
RelationSet v_commcochopf();
// Cocommutativity, commutativity, x_(1)x_(2) = eps(x)1 and the
// three-leg relator on P = id - u.eps.
RelationSet c2_identities();
// μ(P⊗P)Δ + 2P and S - id, consequences of c2_identities.
RelationSet c2_derived();
// V_symm plus the antisymmetrizer on d+1 strands padded to n.
RelationSet v_symm_d(std::size_t d, std::size_t n);
// Projector relators over {sigma} for one n (2 <= n <= 5).
RelationSet v2(std::size_t n);
// Relators over ∅ for one n >= 2; braid families are sampled with the seed.
RelationSet v3(std::size_t n, std::uint64_t seed = 1, std::size_t samples = 4);

// "v-symm", "v-assoc", "v-hopf", "v-cochopf", "v-commcochopf",
// "c2-identities", "c2-derived", "v2(n)", "v3(n)", "v-symm-d(d,n)".
// Throws std::invalid_argument for an unknown name.
RelationSet relation_set(std::string_view name);
std::vector<std::string> relation_set_names();

}  // namespace omegapi

#endif
