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

#ifndef OMEGAPI_ALGEBRA_IO_HPP
#define OMEGAPI_ALGEBRA_IO_HPP

#include <string>
#include <string_view>

#include "omegapi/algebra.hpp"

namespace omegapi {

/*
 * Algebra definition files (UTF-8 JSON):
 *
 *   { "dim": 2,
 *     "field": {"type": "Q"} | {"type": "GFp", "p": 1000003},
 *     "braiding": "swap" | {"matrix": [[...], ...]},
 *     "generators": [ {"name": "mu", "arity": 2, "coarity": 1,
 *                      "matrix": [[1, 0, 0, "1/2"], ...]} ] }
 *
 * Matrix entries are integers or strings "a/b". "field" and "braiding"
 * default to Q and swap.
 *
 * Loading throws ParseError for malformed JSON and Error for a document that
 * does not fit the schema; shape problems surface as DimensionError.
 */
FiniteOmegaAlgebra algebra_from_json(std::string_view text);
std::string algebra_to_json(const FiniteOmegaAlgebra& alg);
FiniteOmegaAlgebra load_algebra(const std::string& path);

}  // namespace omegapi

#endif
