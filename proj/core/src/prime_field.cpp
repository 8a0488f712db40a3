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

#include <stdexcept>
#include <string>

#include "omegapi/errors.hpp"
#include "omegapi/field.hpp"

namespace omegapi {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<omegapi_u128>(a) * b) % n);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e) {
        std::uint64_t r = 1;
        a %= n;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::gf(std::uint64_t p) {
    if (!is_prime(p) || p >= (1ULL << 62)) throw std::invalid_argument("GF(p) requires a prime p < 2^62, got " + std::to_string(p));
    return FieldSpec{Kind::Prime, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    const std::string prefix = "gfp:";
    if (text.rfind(prefix, 0) == 0 || text.rfind("GFp:", 0) == 0) {
        const std::string digits = text.substr(prefix.size());
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed field '" + text + "'");
        return gf(std::stoull(digits));
    }
    throw std::invalid_argument("unknown field '" + text + "' (expected q or gfp:P)");
}

std::string FieldSpec::to_string() const { return kind == Kind::Rational ? "q" : "gfp:" + std::to_string(prime); }

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p) || p >= (1ULL << 62)) throw std::invalid_argument("PrimeField requires a prime p < 2^62");
}

PrimeField::value_type PrimeField::pow(value_type base, std::uint64_t exp) const {
    value_type r = 1;
    while (exp) {
        if (exp & 1) r = mul(r, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return r;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
    if (a == 0) throw std::domain_error("GF(p): inverse of zero");
    return pow(a, p_ - 2);
}

PrimeField::value_type PrimeField::from(const Rational& r) const {
    const mpz_class pz(std::to_string(p_));
    mpz_class num = r.numerator() % pz;
    if (num < 0) num += pz;
    mpz_class den = r.denominator() % pz;
    if (den == 0) throw std::domain_error("rational " + r.to_string() + " has no image in GF(" + std::to_string(p_) + ")");
    const value_type n = std::stoull(num.get_str());
    const value_type d = std::stoull(den.get_str());
    return mul(n, inv(d));
}

}  // namespace omegapi
