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

#ifndef OMEGAPI_FIELD_HPP
#define OMEGAPI_FIELD_HPP

#include <cstdint>
#include <string>
#include <variant>

#include "omegapi/rational.hpp"

__extension__ typedef unsigned __int128 omegapi_u128;

namespace omegapi {

// Which field a computation runs over: exact rationals or GF(p).
struct FieldSpec {
    enum class Kind { Rational, Prime };
    Kind kind = Kind::Rational;
    std::uint64_t prime = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec gf(std::uint64_t p);

    // "q" / "Q" or "gfp:P"
    static FieldSpec parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

// Arithmetic policy over Q, shaped like PrimeField so linear algebra can be
// written once against either.
struct RationalField {
    using value_type = Rational;

    value_type zero() const { return {}; }
    value_type one() const { return 1; }
    value_type from(const Rational& r) const { return r; }
    Rational to_rational(const value_type& v) const { return v; }
    bool is_zero(const value_type& v) const { return v.is_zero(); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    value_type inv(const value_type& a) const { return a.inverse(); }
    std::string to_string(const value_type& v) const { return v.to_string(); }
};

// GF(p) for a prime p < 2^62.
class PrimeField {
   public:
    using value_type = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t modulus() const noexcept { return p_; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    // Throws std::domain_error if p divides the denominator.
    value_type from(const Rational& r) const;
    Rational to_rational(const value_type& v) const { return Rational(static_cast<std::int64_t>(v)); }
    bool is_zero(value_type v) const { return v == 0; }
    value_type add(value_type a, value_type b) const {
        value_type s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p_ - b; }
    value_type mul(value_type a, value_type b) const {
        return static_cast<value_type>((static_cast<omegapi_u128>(a) * b) % p_);
    }
    value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
    value_type inv(value_type a) const;
    std::string to_string(value_type v) const { return std::to_string(v); }

   private:
    value_type pow(value_type base, std::uint64_t exp) const;

    std::uint64_t p_;
};

}  // namespace omegapi

#endif
