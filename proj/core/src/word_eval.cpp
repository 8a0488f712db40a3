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

#include "omegapi/word_eval.hpp"

#include <algorithm>
#include <unordered_map>

#include "omegapi/errors.hpp"
#include "omegapi/field.hpp"
#include "omegapi/span_basis.hpp"

namespace omegapi {

WordVector WordVector::basis(const WordTuple& tuple, GroupWord::Kind kind) {
    WordVector v(tuple.size(), kind);
    v.add(tuple, 1);
    return v;
}

Rational WordVector::coefficient(const WordTuple& tuple) const {
    auto it = terms_.find(tuple);
    return it == terms_.end() ? Rational() : it->second;
}

void WordVector::add(const WordTuple& tuple, const Rational& coefficient) {
    if (tuple.size() != arity_)
        throw ArityError("tuple of length " + std::to_string(tuple.size()) + " in a vector of arity " +
                         std::to_string(arity_));
    if (coefficient.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(tuple, coefficient);
    if (inserted) return;
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
}

WordVector& WordVector::operator+=(const WordVector& rhs) {
    if (rhs.arity_ != arity_) throw ArityError("adding word vectors of different arity");
    for (const auto& [t, c] : rhs.terms_) add(t, c);
    return *this;
}

WordVector& WordVector::operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& e : terms_) e.second *= scalar;
    return *this;
}

std::string WordVector::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : terms_) {
        if (!out.empty()) out += " + ";
        if (!c.is_one()) out += c.to_string() + " ";
        out += "(";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) out += ", ";
            out += t[i].to_string();
        }
        out += ")";
    }
    return out;
}

const Signature& hopf_signature() {
    static const Signature sig{{"mu", 2, 1}, {"u", 0, 1}, {"Delta", 1, 2}, {"eps", 1, 0}, {"S", 1, 1}};
    return sig;
}

namespace {

// f applied to a single basis tuple
WordVector apply_basis(const Term& f, const WordTuple& in, GroupWord::Kind kind) {
    WordVector out(f.cod(), kind);
    switch (f.kind()) {
        case TermKind::Identity:
            out.add(in, 1);
            break;
        case TermKind::Braid: {
            // (X, Y) with |X| = m  ->  (Y, X)
            WordTuple t(in.begin() + static_cast<std::ptrdiff_t>(f.left_count()), in.end());
            t.insert(t.end(), in.begin(), in.begin() + static_cast<std::ptrdiff_t>(f.left_count()));
            out.add(t, 1);
            break;
        }
        case TermKind::BraidInverse: {
            // (Y, X) with |Y| = n  ->  (X, Y)
            WordTuple t(in.begin() + static_cast<std::ptrdiff_t>(f.right_count()), in.end());
            t.insert(t.end(), in.begin(), in.begin() + static_cast<std::ptrdiff_t>(f.right_count()));
            out.add(t, 1);
            break;
        }
        case TermKind::Generator: {
            const auto& sig = hopf_signature();
            auto idx = sig.index_of(f.name());
            if (!idx || sig.generators()[*idx].arity != f.dom() || sig.generators()[*idx].coarity != f.cod())
                throw SignatureError("word evaluation only interprets mu, u, Delta, eps, S; got '" + f.name() + "'");
            const std::string& n = f.name();
            if (n == "mu")
                out.add({in[0] * in[1]}, 1);
            else if (n == "u")
                out.add({GroupWord(kind)}, 1);
            else if (n == "Delta")
                out.add({in[0], in[0]}, 1);
            else if (n == "eps")
                out.add({}, 1);
            else
                out.add({in[0].inverse()}, 1);
            break;
        }
        case TermKind::Compose: {
            WordVector mid = apply_basis(f.rhs(), in, kind);
            return apply(f.lhs(), mid);
        }
        case TermKind::Tensor: {
            std::size_t split = f.lhs().dom();
            WordTuple a(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(split));
            WordTuple b(in.begin() + static_cast<std::ptrdiff_t>(split), in.end());
            WordVector va = apply_basis(f.lhs(), a, kind);
            WordVector vb = apply_basis(f.rhs(), b, kind);
            for (const auto& [ta, ca] : va.terms())
                for (const auto& [tb, cb] : vb.terms()) {
                    WordTuple t = ta;
                    t.insert(t.end(), tb.begin(), tb.end());
                    out.add(t, ca * cb);
                }
            break;
        }
    }
    return out;
}

}  // namespace

WordVector apply(const Term& f, const WordVector& input) {
    if (input.arity() != f.dom())
        throw ArityError("input of arity " + std::to_string(input.arity()) + " for a term with domain " +
                         std::to_string(f.dom()));
    WordVector out(f.cod(), input.kind());
    for (const auto& [t, c] : input.terms()) out += c * apply_basis(f, t, input.kind());
    return out;
}

bool independent(const std::vector<WordVector>& vectors) {
    if (vectors.empty()) return true;
    std::map<WordTuple, std::uint64_t> coords;
    for (const auto& v : vectors) {
        if (v.arity() != vectors.front().arity()) throw ArityError("independence test over mixed arities");
        for (const auto& e : v.terms()) coords.emplace(e.first, 0);
    }
    std::uint64_t next = 0;
    for (auto& e : coords) e.second = next++;
    SpanBasis<RationalField> span(coords.size());
    for (const auto& v : vectors) {
        SparseVector<Rational> s;
        for (const auto& [t, c] : v.terms()) s.emplace_back(coords.at(t), c);
        if (!span.insert(s)) return false;
    }
    return true;
}

}  // namespace omegapi
