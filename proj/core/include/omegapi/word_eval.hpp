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

#ifndef OMEGAPI_WORD_EVAL_HPP
#define OMEGAPI_WORD_EVAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "omegapi/group_word.hpp"
#include "omegapi/rational.hpp"
#include "omegapi/signature.hpp"
#include "omegapi/term.hpp"

namespace omegapi {

using WordTuple = std::vector<GroupWord>;

// Sparse element of kG^{⊗n}: coefficients on n-tuples of group words.
class WordVector {
   public:
    WordVector(std::size_t arity, GroupWord::Kind kind) : arity_(arity), kind_(kind) {}
    static WordVector basis(const WordTuple& tuple, GroupWord::Kind kind);

    std::size_t arity() const noexcept { return arity_; }
    GroupWord::Kind kind() const noexcept { return kind_; }
    const std::map<WordTuple, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(const WordTuple& tuple) const;

    // Throws ArityError on a tuple of the wrong length.
    void add(const WordTuple& tuple, const Rational& coefficient);
    WordVector& operator+=(const WordVector& rhs);
    WordVector& operator*=(const Rational& scalar);
    friend WordVector operator+(WordVector a, const WordVector& b) { return a += b; }
    friend WordVector operator*(const Rational& s, WordVector a) { return a *= s; }

    friend bool operator==(const WordVector&, const WordVector&) = default;

    std::string to_string() const;

   private:
    std::size_t arity_;
    GroupWord::Kind kind_;
    std::map<WordTuple, Rational> terms_;
};

// {mu: 2->1, u: 0->1, Delta: 1->2, eps: 1->0, S: 1->1}
const Signature& hopf_signature();

/*
 * Interprets f over the group algebra kG: mu multiplies words, u is the
 * empty word, Delta is g -> g⊗g, eps is g -> 1, S inverts, and braidings
 * swap blocks of tensor factors. Linear in the input.
 *
 * Throws SignatureError for any other generator and ArityError when the
 * input arity differs from dom(f).
 */
WordVector apply(const Term& f, const WordVector& input);

// Linear independence over Q. Throws ArityError on mixed arities.
bool independent(const std::vector<WordVector>& vectors);

}  // namespace omegapi

#endif
