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

#ifndef OMEGAPI_PARSER_HPP
#define OMEGAPI_PARSER_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>

#include "omegapi/polynomial.hpp"
#include "omegapi/signature.hpp"
#include "omegapi/term.hpp"

namespace omegapi {

/*
 * Term grammar:
 *
 *   term := tens ("." tens)*
 *   tens := atom ("#" atom)*
 *   atom := IDENT | "id(" NAT ")" | "tau(" NAT "," NAT ")"
 *         | "tau_inv(" NAT "," NAT ")" | "(" term ")"
 *
 * "f . g" is f after g. "#" binds tighter than ".", and both chains
 * associate to the right.
 *
 * Errors: ParseError (with position) for syntax and unknown generators,
 * ArityError for a composition whose objects disagree.
 */
Term parse_term(std::string_view text, const Signature& sig);

/*
 * poly    := "0" | [sign] summand (sign summand)*
 * summand := [NAT ["/" NAT] "*"] term
 * sign    := "+" | "-" | U+2212
 *
 * "0" needs an explicit shape since it has no terms to infer it from.
 */
Polynomial parse_polynomial(std::string_view text, const Signature& sig,
                            std::optional<std::pair<std::size_t, std::size_t>> shape = std::nullopt);

}  // namespace omegapi

#endif
