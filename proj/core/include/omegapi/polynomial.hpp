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

#ifndef OMEGAPI_POLYNOMIAL_HPP
#define OMEGAPI_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omegapi/rational.hpp"
#include "omegapi/term.hpp"

namespace omegapi {

/*
 * Finite formal linear combination of Ω-monomials sharing one (dom, cod),
 * with rational coefficients. Monomials are stored flattened, so terms that
 * flatten to the same canonical form are merged. Zero coefficients are never
 * stored; the order of first appearance is kept for printing.
 */
class Polynomial {
   public:
    using Entry = std::pair<Term, Rational>;

    Polynomial(std::size_t dom, std::size_t cod) : dom_(dom), cod_(cod) {}
    // NOLINTNEXTLINE(google-explicit-constructor)
    Polynomial(const Term& monomial, const Rational& coefficient = 1);

    std::size_t dom() const noexcept { return dom_; }
    std::size_t cod() const noexcept { return cod_; }
    const std::vector<Entry>& terms() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool is_zero() const noexcept { return entries_.empty(); }
    Rational coefficient(const Term& t) const;

    // Throws ArityError when t does not have this polynomial's dom/cod.
    void add_term(const Term& t, const Rational& coefficient);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

    // Equal as formal combinations (order of terms ignored).
    friend bool operator==(const Polynomial& a, const Polynomial& b);

   private:
    void check_shape(std::size_t dom, std::size_t cod) const;

    std::size_t dom_;
    std::size_t cod_;
    std::vector<Entry> entries_;
    std::unordered_map<Term, std::size_t, TermHash> index_;
};

// Bilinear extensions of compose and tensor.
Polynomial compose(const Polynomial& f, const Polynomial& g);
Polynomial tensor(const Polynomial& f, const Polynomial& g);

// "mu . Delta - u . eps", "1/2 * id(2) - 1/2 * tau(1,1) . sigma", "0".
std::string to_string(const Polynomial& p);

}  // namespace omegapi

#endif
