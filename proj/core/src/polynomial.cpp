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

#include "omegapi/polynomial.hpp"

#include "omegapi/errors.hpp"

namespace omegapi {

Polynomial::Polynomial(const Term& monomial, const Rational& coefficient)
    : dom_(monomial.dom()), cod_(monomial.cod()) {
    add_term(monomial, coefficient);
}

void Polynomial::check_shape(std::size_t dom, std::size_t cod) const {
    if (dom != dom_ || cod != cod_)
        throw ArityError("polynomial of shape " + std::to_string(dom_) + "->" + std::to_string(cod_) +
                         " cannot take a term of shape " + std::to_string(dom) + "->" + std::to_string(cod));
}

Rational Polynomial::coefficient(const Term& t) const {
    auto it = index_.find(flatten(t).term());
    return it == index_.end() ? Rational() : entries_[it->second].second;
}

void Polynomial::add_term(const Term& t, const Rational& coefficient) {
    check_shape(t.dom(), t.cod());
    if (coefficient.is_zero()) return;
    Term key = flatten(t).term();
    auto it = index_.find(key);
    if (it == index_.end()) {
        index_.emplace(key, entries_.size());
        entries_.emplace_back(std::move(key), coefficient);
        return;
    }
    Rational& c = entries_[it->second].second;
    c += coefficient;
    if (!c.is_zero()) return;
    entries_.erase(entries_.begin() + static_cast<std::ptrdiff_t>(it->second));
    index_.clear();
    for (std::size_t i = 0; i < entries_.size(); ++i) index_.emplace(entries_[i].first, i);
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    check_shape(rhs.dom_, rhs.cod_);
    for (const auto& [t, c] : rhs.entries_) add_term(t, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    check_shape(rhs.dom_, rhs.cod_);
    for (const auto& [t, c] : rhs.entries_) add_term(t, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        entries_.clear();
        index_.clear();
        return *this;
    }
    for (auto& e : entries_) e.second *= scalar;
    return *this;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.dom_ != b.dom_ || a.cod_ != b.cod_ || a.entries_.size() != b.entries_.size()) return false;
    for (const auto& [t, c] : a.entries_) {
        auto it = b.index_.find(t);
        if (it == b.index_.end() || b.entries_[it->second].second != c) return false;
    }
    return true;
}

Polynomial compose(const Polynomial& f, const Polynomial& g) {
    if (f.dom() != g.cod())
        throw ArityError("cannot compose polynomials: domain " + std::to_string(f.dom()) + " vs codomain " +
                         std::to_string(g.cod()));
    Polynomial out(g.dom(), f.cod());
    for (const auto& [a, x] : f.terms())
        for (const auto& [b, y] : g.terms()) out.add_term(compose(a, b), x * y);
    return out;
}

Polynomial tensor(const Polynomial& f, const Polynomial& g) {
    Polynomial out(f.dom() + g.dom(), f.cod() + g.cod());
    for (const auto& [a, x] : f.terms())
        for (const auto& [b, y] : g.terms()) out.add_term(tensor(a, b), x * y);
    return out;
}

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : p.terms()) {
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (!mag.is_one()) out += mag.to_string() + " * ";
        out += to_string(t);
        first = false;
    }
    return out;
}

}  // namespace omegapi
