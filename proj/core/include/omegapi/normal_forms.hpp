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

#ifndef OMEGAPI_NORMAL_FORMS_HPP
#define OMEGAPI_NORMAL_FORMS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "omegapi/group_word.hpp"
#include "omegapi/term.hpp"

namespace omegapi {

/*
 * Normal-form monomials over {mu, u, Delta, eps, S}.
 *
 * Both compilers emit, read from the inputs up:
 *   1. per input variable x_q: eps if it is unused, id(1) if used once,
 *      otherwise a left-combed Delta tree (Delta # id(p-2)) . ... . Delta;
 *   2. a routing permutation sending the r-th leg of x_q to the r-th
 *      occurrence of x_q, scanning the outputs left to right;
 *   3. S on every inverted letter;
 *   4. per output a left-combed product mu . (mu # id(1)) . ..., or u
 *      for an empty output.
 *
 * The result is flattened. Applied to x_1⊗...⊗x_m in the group algebra it
 * returns exactly the given tuple of words.
 */

// Throws ArityError when a word uses a variable beyond m or is not a free word.
Term phi(std::size_t m, const std::vector<GroupWord>& words);
// exponents[k][r] is the exponent of x_{r+1} in output k; every row has length m.
Term psi(std::size_t m, const std::vector<std::vector<std::int64_t>>& exponents);
// psi on free abelian words (exponent vectors padded to m).
Term psi(std::size_t m, const std::vector<GroupWord>& words);

// Left-combed Delta tree with p outputs (p >= 1), and left-combed product of t inputs (t >= 0).
Term delta_tree(std::size_t p);
Term product_tree(std::size_t t);

}  // namespace omegapi

#endif
