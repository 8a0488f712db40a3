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

#ifndef OMEGAPI_RATIONAL_HPP
#define OMEGAPI_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace omegapi {

/*
 * Exact rational number.
 *
 * Values whose reduced numerator and denominator fit in int64 are kept inline
 * and combined with 128-bit intermediates; anything larger is promoted to a
 * GMP mpq_class and demoted again as soon as it fits. The denominator is
 * always positive and gcd(num, den) = 1.
 */
class Rational {
   public:
    Rational() noexcept = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(int value) : Rational(static_cast<std::int64_t>(value)) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& value);

    Rational(const Rational& other);
    Rational(Rational&& other) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&& other) noexcept = default;
    ~Rational() = default;

    // Accepts "a", "-a", "a/b" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    bool is_zero() const noexcept { return !big_ && num_ == 0; }
    bool is_one() const noexcept { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    bool is_small() const noexcept { return !big_; }
    int sign() const noexcept;

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    double to_double() const;
    std::string to_string() const;

    Rational operator-() const;
    Rational inverse() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs);
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

   private:
    void assign_big(mpq_class value);
    __extension__ void assign_wide(__int128 num, __int128 den);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace omegapi

#endif
