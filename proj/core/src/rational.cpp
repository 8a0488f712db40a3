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

#include "omegapi/rational.hpp"

#include <limits>
#include <ostream>

#include "omegapi/errors.hpp"

namespace omegapi {

namespace {

__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    // inputs are never INT64_MIN here, see fits()
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

mpz_class to_mpz(i128 v) {
    const bool negative = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return negative ? mpz_class(-r) : r;
}

bool mpz_fits_small(const mpz_class& z) {
    // keep |value| <= INT64_MAX so negation never overflows
    return mpz_sizeinbase(z.get_mpz_t(), 2) <= 63;
}

}  // namespace

Rational::Rational(std::int64_t value) {
    if (value == std::numeric_limits<std::int64_t>::min()) {
        assign_big(mpq_class(to_mpz(value)));
    } else {
        num_ = value;
    }
}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    assign_wide(num, den);
}

Rational::Rational(const mpq_class& value) { assign_big(value); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Rational::assign_big(mpq_class value) {
    value.canonicalize();
    if (mpz_fits_small(value.get_num()) && mpz_fits_small(value.get_den())) {
        num_ = value.get_num().get_si();
        den_ = value.get_den().get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(value));
    }
}

void Rational::assign_wide(i128 num, i128 den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    const u128 g = gcd128(uabs(num), static_cast<u128>(den));
    if (g > 1) {
        num /= static_cast<i128>(g);
        den /= static_cast<i128>(g);
    }
    if (uabs(num) <= static_cast<u128>(kMax64) && den <= kMax64) {
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
        big_.reset();
    } else {
        mpq_class q(to_mpz(num), to_mpz(den));
        num_ = 0;
        den_ = 1;
        big_ = std::make_unique<mpq_class>(std::move(q));
    }
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) throw ParseError("empty rational literal", 0);
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string_view num_text = trim(text.substr(0, slash));
    std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
    if (!valid_int(num_text)) throw ParseError("malformed rational numerator '" + std::string(text) + "'", 0);
    if (!valid_int(den_text) || den_text.front() == '-' || den_text.front() == '+')
        throw ParseError("malformed rational denominator '" + std::string(text) + "'", slash);
    std::string num_str(num_text);
    if (num_str.front() == '+') num_str.erase(0, 1);
    mpz_class num(num_str), den{std::string(den_text)};
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash);
    return Rational(mpq_class(num, den));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_)); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_)); }

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_) {
        r.assign_big(-*big_);
    } else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational r;
    if (big_) {
        r.assign_big(1 / *big_);
    } else {
        r.assign_wide(den_, num_);
    }
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (big_ || rhs.big_) {
        assign_big(to_mpq() + rhs.to_mpq());
        return *this;
    }
    if (den_ == rhs.den_) {
        assign_wide(static_cast<i128>(num_) + rhs.num_, den_);
        return *this;
    }
    const std::int64_t g = gcd64(den_, rhs.den_);
    const i128 num = static_cast<i128>(num_) * (rhs.den_ / g) + static_cast<i128>(rhs.num_) * (den_ / g);
    const i128 den = static_cast<i128>(den_) * (rhs.den_ / g);
    assign_wide(num, den);
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    if (big_ || rhs.big_) {
        assign_big(to_mpq() * rhs.to_mpq());
        return *this;
    }
    if (num_ == 0 || rhs.num_ == 0) {
        num_ = 0;
        den_ = 1;
        return *this;
    }
    const std::int64_t g1 = gcd64(num_, rhs.den_);
    const std::int64_t g2 = gcd64(rhs.num_, den_);
    const i128 num = static_cast<i128>(num_ / g1) * (rhs.num_ / g2);
    const i128 den = static_cast<i128>(den_ / g2) * (rhs.den_ / g1);
    assign_wide(num, den);
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Rational& lhs, const Rational& rhs) {
    if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
    return false;  // canonical: a value that fits is never stored big
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    if (!lhs.big_ && !rhs.big_) {
        const i128 a = static_cast<i128>(lhs.num_) * rhs.den_;
        const i128 b = static_cast<i128>(rhs.num_) * lhs.den_;
        return a <=> b;
    }
    const int c = cmp(lhs.to_mpq(), rhs.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

}  // namespace omegapi
