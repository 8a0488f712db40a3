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

#ifndef OMEGAPI_TERM_HPP
#define OMEGAPI_TERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "omegapi/signature.hpp"

namespace omegapi {

enum class TermKind { Generator, Identity, Braid, BraidInverse, Compose, Tensor };

/*
 * An Ω-monomial: a morphism dom -> cod of the free braided strict monoidal
 * category on a signature, kept as an immutable expression tree.
 *
 * Composition follows function notation: compose(f, g) is "f . g", i.e. g is
 * applied first and dom(f) must equal cod(g).
 *
 * Leaves:
 *   Identity(n)       n -> n
 *   Braid(m, n)       τ_{m,n}, m+n -> n+m
 *   BraidInverse(m,n) τ^{-1}_{m,n}, n+m -> m+n
 *   Generator ω       s(ω) -> t(ω)
 *
 * Equality is structural. Two terms that are equal in the free category
 * (interchange law, braid relations) may still compare unequal; semantic
 * questions go through evaluation.
 */
class Term {
   public:
    static Term identity(std::size_t n);
    static Term braid(std::size_t m, std::size_t n);
    static Term braid_inverse(std::size_t m, std::size_t n);
    static Term generator(std::string name, std::size_t arity, std::size_t coarity);
    // Looks the generator up in sig; throws SignatureError if absent.
    static Term generator(const Signature& sig, std::string_view name);

    TermKind kind() const noexcept;
    std::size_t dom() const noexcept;
    std::size_t cod() const noexcept;

    // Generator name; empty for other kinds.
    const std::string& name() const noexcept;
    // Identity: (n, 0); Braid/BraidInverse: (m, n).
    std::size_t left_count() const noexcept;
    std::size_t right_count() const noexcept;
    // Compose(f, g): lhs = f (applied last), rhs = g. Tensor(f, g): f ⊗ g.
    const Term& lhs() const;
    const Term& rhs() const;

    bool is_leaf() const noexcept { return kind() != TermKind::Compose && kind() != TermKind::Tensor; }
    bool is_identity() const noexcept { return kind() == TermKind::Identity; }
    std::size_t hash() const noexcept;
    // Number of nodes in the tree.
    std::size_t size() const noexcept;

    friend bool operator==(const Term& a, const Term& b);
    // Total structural order, used for deterministic containers.
    friend bool structurally_less(const Term& a, const Term& b);

   private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    friend Term compose(const Term& f, const Term& g);
    friend Term tensor(const Term& f, const Term& g);

    std::shared_ptr<const Node> node_;
};

// f . g (g first). Throws ArityError unless dom(f) == cod(g).
Term compose(const Term& f, const Term& g);
Term tensor(const Term& f, const Term& g);

// Right-associated chains; compose_all({f, g, h}) = f . (g . h).
// An empty composition chain needs its object, an empty tensor chain is id(0).
Term compose_all(const std::vector<Term>& factors, std::size_t object_if_empty);
Term tensor_all(const std::vector<Term>& factors);

// id(a) # f # id(b)
Term whisker(std::size_t a, const Term& f, std::size_t b);

struct TermHash {
    std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

// Canonical structural representative of a term. Flattening right-associates
// composition and tensor chains, drops id(0) tensor factors, merges adjacent
// identities, absorbs identities in compositions, and rewrites τ_{0,n},
// τ_{n,0} (and inverses) to identities. It is idempotent and preserves the
// value of the term under every evaluation; it is not a decision procedure
// for equality of monomials.
class CanonicalTerm {
   public:
    const Term& term() const noexcept { return term_; }
    operator const Term&() const noexcept { return term_; }  // NOLINT(google-explicit-constructor)
    friend bool operator==(const CanonicalTerm&, const CanonicalTerm&) = default;

   private:
    explicit CanonicalTerm(Term t) : term_(std::move(t)) {}
    friend CanonicalTerm flatten(const Term& f);
    Term term_;
};

CanonicalTerm flatten(const Term& f);

// Text in the term grammar; parse_term(to_string(f)) == f structurally.
std::string to_string(const Term& f);

}  // namespace omegapi

template <>
struct std::hash<omegapi::Term> {
    std::size_t operator()(const omegapi::Term& t) const noexcept { return t.hash(); }
};

#endif
