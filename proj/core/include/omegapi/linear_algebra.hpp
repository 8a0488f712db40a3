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

#ifndef OMEGAPI_LINEAR_ALGEBRA_HPP
#define OMEGAPI_LINEAR_ALGEBRA_HPP

#include <vector>

#include "omegapi/matrix.hpp"

namespace omegapi {

// Basis of { c : sum_i c_i v_i = 0 }, one coefficient vector of length
// vectors.size() per kernel element. Exact over Q.
std::vector<std::vector<Rational>> kernel_relations(const std::vector<SparseVector<Rational>>& vectors);

}  // namespace omegapi

#endif
