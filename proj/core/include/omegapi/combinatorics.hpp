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

#ifndef OMEGAPI_COMBINATORICS_HPP
#define OMEGAPI_COMBINATORICS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "omegapi/polynomial.hpp"
#include "omegapi/rational.hpp"
#include "omegapi/term.hpp"

namespace omegapi {

// Weakly decreasing positive parts.
struct Partition {
    std::vector<std::size_t> parts;

    std::size_t weight() const;
    std::size_t height() const { return parts.size(); }
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions(std::size_t n);
// Number of standard tableaux of shape λ, by the hook-length formula.
std::uint64_t hook_dim(const Partition& lambda);
// Σ f_λ² over λ ⊢ n with at most d rows. Throws std::overflow_error past uint64.
std::uint64_t schur_weyl_codim(std::size_t d, std::size_t n);

std::uint64_t factorial(std::size_t n);
std::uint64_t binomial(std::size_t n, std::size_t k);
std::uint64_t catalan(std::size_t n);

// Bijection of {1..n}; p(i) is the image of i.
class Permutation {
   public:
    explicit Permutation(std::size_t n = 0);
    // 1-based images; throws std::invalid_argument unless bijective.
    static Permutation from_images(std::vector<std::size_t> images);
    // Product of cycles, e.g. {{1, 2, 3}} sends 1->2->3->1.
    static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);
    // Adjacent transposition (i i+1).
    static Permutation adjacent(std::size_t n, std::size_t i);
    // All of S_n in lexicographic order of image arrays.
    static std::vector<Permutation> all(std::size_t n);

    std::size_t size() const noexcept { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_.at(i - 1); }
    const std::vector<std::size_t>& images() const noexcept { return images_; }
    bool is_identity() const;
    int sign() const;
    std::size_t length() const;  // number of inversions
    Permutation inverse() const;

    // (p * q)(i) = p(q(i)): q acts first.
    friend Permutation operator*(const Permutation& p, const Permutation& q);
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

    // Indices i1..ik with p = s_{i1} s_{i2} ... s_{ik} and k = length(),
    // found by repeatedly splitting off the smallest right descent.
    std::vector<std::size_t> reduced_word() const;

    std::string to_string() const;

   private:
    std::vector<std::size_t> images_;
};

// Word in the Artin generators σ_i^{±1} of B_n; entry +i is σ_i, -i is σ_i^{-1}.
struct BraidWord {
    std::size_t strands = 0;
    std::vector<int> letters;

    // Throws std::invalid_argument on an index outside 1..strands-1.
    void validate() const;
    Permutation permutation() const;
    BraidWord inverse() const;
    // Positive braid over the reduced word of p.
    static BraidWord positive_lift(const Permutation& p);
    friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
};

/*
 * θ into term space. θ(s_i) = id_{i-1} # tau(1,1) # id_{n-i-1}, and words
 * map to compositions in the same order, so θ(pq) = θ(p) . θ(q). Over a
 * symmetric braiding, θ(p) moves the tensor factor in position s to position
 * p(s).
 */
Term perm_to_term(const Permutation& p);
Term braid_to_term(const BraidWord& b);

// Element of the group algebra Q S_n.
class PermutationSum {
   public:
    explicit PermutationSum(std::size_t n) : n_(n) {}
    PermutationSum(const Permutation& p, const Rational& c = 1);  // NOLINT(google-explicit-constructor)

    std::size_t degree() const noexcept { return n_; }
    const std::map<Permutation, Rational>& terms() const noexcept { return terms_; }
    void add(const Permutation& p, const Rational& c);
    PermutationSum& operator+=(const PermutationSum& rhs);
    friend PermutationSum operator*(const PermutationSum& a, const PermutationSum& b);
    friend PermutationSum operator*(const Rational& s, PermutationSum a);

    Polynomial to_polynomial() const;

   private:
    std::size_t n_;
    std::map<Permutation, Rational> terms_;
};

// Tableau with a bijective filling by 1..n (not necessarily standard).
struct YoungTableau {
    Partition shape;
    std::vector<std::vector<std::size_t>> rows;

    // Filled 1..n row by row.
    static YoungTableau row_reading(const Partition& shape);
    // Throws std::invalid_argument unless the filling fits the shape bijectively.
    void validate() const;
    bool is_standard() const;
    std::size_t size() const { return shape.weight(); }
    std::vector<std::vector<std::size_t>> columns() const;
};

// Row symmetrizer a_T and column antisymmetrizer b_T.
PermutationSum row_symmetrizer(const YoungTableau& t);
PermutationSum column_antisymmetrizer(const YoungTableau& t);
// a_T b_T, or b_T a_T when star is set, as a polynomial of θ-images.
Polynomial young_symmetrizer(const YoungTableau& t, bool star);
// Σ_{σ ∈ S_{d+1}} sign(σ) θ(σ), padded by id to arity n ≥ d+1.
Polynomial antisymmetrizer(std::size_t d, std::size_t n);

// Pure braids on n strands of the form Π w σ_i^{±2} w^{-1} with short random
// conjugators, deterministic in the seed.
std::vector<BraidWord> sample_pure_braids(std::size_t n, std::size_t count, std::uint64_t seed,
                                          std::size_t max_factors = 3, std::size_t max_conjugator = 3);

}  // namespace omegapi

#endif
