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

#include "omegapi/term.hpp"

#include <functional>
#include <tuple>

#include "omegapi/errors.hpp"

namespace omegapi {

struct Term::Node {
    TermKind kind;
    std::size_t dom;
    std::size_t cod;
    std::string name;
    std::size_t left = 0;
    std::size_t right = 0;
    std::vector<Term> children;
    std::size_t hash = 0;
    std::size_t size = 1;
};

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 12) + (h >> 4));
}

const std::string& empty_name() {
    static const std::string s;
    return s;
}

}  // namespace

Term Term::identity(std::size_t n) {
    auto node = std::make_shared<Node>();
    node->kind = TermKind::Identity;
    node->dom = node->cod = n;
    node->left = n;
    node->hash = mix(mix(1, n), 0);
    return Term(std::move(node));
}

Term Term::braid(std::size_t m, std::size_t n) {
    auto node = std::make_shared<Node>();
    node->kind = TermKind::Braid;
    node->dom = node->cod = m + n;
    node->left = m;
    node->right = n;
    node->hash = mix(mix(2, m), n);
    return Term(std::move(node));
}

Term Term::braid_inverse(std::size_t m, std::size_t n) {
    auto node = std::make_shared<Node>();
    node->kind = TermKind::BraidInverse;
    node->dom = node->cod = m + n;
    node->left = m;
    node->right = n;
    node->hash = mix(mix(3, m), n);
    return Term(std::move(node));
}

Term Term::generator(std::string name, std::size_t arity, std::size_t coarity) {
    auto node = std::make_shared<Node>();
    node->kind = TermKind::Generator;
    node->dom = arity;
    node->cod = coarity;
    node->hash = mix(mix(mix(4, std::hash<std::string>{}(name)), arity), coarity);
    node->name = std::move(name);
    return Term(std::move(node));
}

Term Term::generator(const Signature& sig, std::string_view name) {
    const GeneratorSpec& g = sig.at(name);
    return generator(g.name, g.arity, g.coarity);
}

TermKind Term::kind() const noexcept { return node_->kind; }
std::size_t Term::dom() const noexcept { return node_->dom; }
std::size_t Term::cod() const noexcept { return node_->cod; }
const std::string& Term::name() const noexcept {
    return node_->kind == TermKind::Generator ? node_->name : empty_name();
}
std::size_t Term::left_count() const noexcept { return node_->left; }
std::size_t Term::right_count() const noexcept { return node_->right; }
std::size_t Term::hash() const noexcept { return node_->hash; }
std::size_t Term::size() const noexcept { return node_->size; }

const Term& Term::lhs() const {
    if (is_leaf()) throw std::logic_error("lhs() of a leaf term");
    return node_->children[0];
}

const Term& Term::rhs() const {
    if (is_leaf()) throw std::logic_error("rhs() of a leaf term");
    return node_->children[1];
}

Term compose(const Term& f, const Term& g) {
    if (f.dom() != g.cod())
        throw ArityError("cannot compose " + to_string(f) + " (domain " + std::to_string(f.dom()) + ") after " +
                         to_string(g) + " (codomain " + std::to_string(g.cod()) + ")");
    auto node = std::make_shared<Term::Node>();
    node->kind = TermKind::Compose;
    node->dom = g.dom();
    node->cod = f.cod();
    node->children = {f, g};
    node->hash = mix(mix(5, f.hash()), g.hash());
    node->size = 1 + f.size() + g.size();
    return Term(std::move(node));
}

Term tensor(const Term& f, const Term& g) {
    auto node = std::make_shared<Term::Node>();
    node->kind = TermKind::Tensor;
    node->dom = f.dom() + g.dom();
    node->cod = f.cod() + g.cod();
    node->children = {f, g};
    node->hash = mix(mix(6, f.hash()), g.hash());
    node->size = 1 + f.size() + g.size();
    return Term(std::move(node));
}

Term compose_all(const std::vector<Term>& factors, std::size_t object_if_empty) {
    if (factors.empty()) return Term::identity(object_if_empty);
    Term acc = factors.back();
    for (std::size_t i = factors.size() - 1; i-- > 0;) acc = compose(factors[i], acc);
    return acc;
}

Term tensor_all(const std::vector<Term>& factors) {
    if (factors.empty()) return Term::identity(0);
    Term acc = factors.back();
    for (std::size_t i = factors.size() - 1; i-- > 0;) acc = tensor(factors[i], acc);
    return acc;
}

Term whisker(std::size_t a, const Term& f, std::size_t b) {
    std::vector<Term> parts;
    if (a > 0) parts.push_back(Term::identity(a));
    parts.push_back(f);
    if (b > 0) parts.push_back(Term::identity(b));
    return tensor_all(parts);
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.dom() != b.dom() || a.cod() != b.cod() ||
        a.size() != b.size())
        return false;
    switch (a.kind()) {
        case TermKind::Generator:
            return a.name() == b.name();
        case TermKind::Identity:
        case TermKind::Braid:
        case TermKind::BraidInverse:
            return a.left_count() == b.left_count() && a.right_count() == b.right_count();
        case TermKind::Compose:
        case TermKind::Tensor:
            return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
    return false;
}

bool structurally_less(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return false;
    auto key = [](const Term& t) {
        return std::make_tuple(static_cast<int>(t.kind()), t.dom(), t.cod(), t.left_count(), t.right_count());
    };
    if (key(a) != key(b)) return key(a) < key(b);
    if (a.kind() == TermKind::Generator) return a.name() < b.name();
    if (a.is_leaf()) return false;
    if (structurally_less(a.lhs(), b.lhs())) return true;
    if (structurally_less(b.lhs(), a.lhs())) return false;
    return structurally_less(a.rhs(), b.rhs());
}

namespace {

void compose_factors(const Term& f, std::vector<Term>& out) {
    if (f.kind() == TermKind::Compose) {
        compose_factors(f.lhs(), out);
        compose_factors(f.rhs(), out);
    } else {
        out.push_back(f);
    }
}

void tensor_factors(const Term& f, std::vector<Term>& out) {
    if (f.kind() == TermKind::Tensor) {
        tensor_factors(f.lhs(), out);
        tensor_factors(f.rhs(), out);
    } else {
        out.push_back(f);
    }
}

Term flatten_term(const Term& f) {
    switch (f.kind()) {
        case TermKind::Generator:
        case TermKind::Identity:
            return f;
        case TermKind::Braid:
        case TermKind::BraidInverse:
            if (f.left_count() == 0 || f.right_count() == 0) return Term::identity(f.dom());
            return f;
        case TermKind::Compose: {
            std::vector<Term> raw;
            compose_factors(flatten_term(f.lhs()), raw);
            compose_factors(flatten_term(f.rhs()), raw);
            std::vector<Term> kept;
            for (auto& t : raw)
                if (!t.is_identity()) kept.push_back(t);
            return compose_all(kept, f.dom());
        }
        case TermKind::Tensor: {
            std::vector<Term> raw;
            tensor_factors(flatten_term(f.lhs()), raw);
            tensor_factors(flatten_term(f.rhs()), raw);
            std::vector<Term> kept;
            for (auto& t : raw) {
                if (t.is_identity()) {
                    if (t.dom() == 0) continue;
                    if (!kept.empty() && kept.back().is_identity()) {
                        kept.back() = Term::identity(kept.back().dom() + t.dom());
                        continue;
                    }
                }
                kept.push_back(t);
            }
            return tensor_all(kept);
        }
    }
    return f;
}

std::string print(const Term& f) {
    switch (f.kind()) {
        case TermKind::Generator:
            return f.name();
        case TermKind::Identity:
            return "id(" + std::to_string(f.dom()) + ")";
        case TermKind::Braid:
            return "tau(" + std::to_string(f.left_count()) + "," + std::to_string(f.right_count()) + ")";
        case TermKind::BraidInverse:
            return "tau_inv(" + std::to_string(f.left_count()) + "," + std::to_string(f.right_count()) + ")";
        case TermKind::Compose: {
            // chains parse right-associatively
            std::string l = print(f.lhs());
            if (f.lhs().kind() == TermKind::Compose) l = "(" + l + ")";
            return l + " . " + print(f.rhs());
        }
        case TermKind::Tensor: {
            std::string l = print(f.lhs());
            std::string r = print(f.rhs());
            if (!f.lhs().is_leaf()) l = "(" + l + ")";
            if (f.rhs().kind() == TermKind::Compose) r = "(" + r + ")";
            return l + " # " + r;
        }
    }
    return {};
}

}  // namespace

CanonicalTerm flatten(const Term& f) { return CanonicalTerm(flatten_term(f)); }

std::string to_string(const Term& f) { return print(f); }

}  // namespace omegapi
