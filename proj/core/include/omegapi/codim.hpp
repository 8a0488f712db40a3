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

#ifndef OMEGAPI_CODIM_HPP
#define OMEGAPI_CODIM_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "omegapi/algebra.hpp"
#include "omegapi/matrix.hpp"
#include "omegapi/polynomial.hpp"
#include "omegapi/term.hpp"

namespace omegapi {

struct SaturationOptions {
    // Worker threads for candidate reduction; 0 picks hardware concurrency.
    std::size_t threads = 0;
    // Cap on stored sparse entries (span rows plus generators) per source
    // object; exceeding it throws ResourceLimitError.
    std::size_t max_entries = 60'000'000;
};

/*
 * Spans E_A(P(m, n)) of evaluated monomials with every intermediate object
 * bounded by K.
 *
 * A monomial m -> n is a path id_m -> ... -> f of elementary layers
 * id_a # x # id_b, where x is a generator, tau(1,1) or tau_inv(1,1). The
 * span of hom(m, n) is therefore the closure of E(id_m) under left
 * multiplication by layer matrices, and each source object m is saturated
 * independently and on demand. The closure is semi-naive: every vector that
 * enlarged a span is multiplied by every layer exactly once.
 *
 * Candidate vectors of one round are reduced in parallel against the spans
 * as they stood at the start of the round; insertions are serialized. Final
 * ranks do not depend on the schedule.
 */
class Saturation {
   public:
    Saturation(const FiniteOmegaAlgebra& alg, std::size_t bound, SaturationOptions options = {});
    ~Saturation();
    Saturation(Saturation&&) noexcept;
    Saturation& operator=(Saturation&&) noexcept;

    std::size_t bound() const noexcept;
    // Saturates source m if needed. Requires m, n <= bound.
    std::size_t rank(std::size_t m, std::size_t n);
    void saturate_source(std::size_t m);
    bool saturated(std::size_t m) const;
    // Ranks of hom(m, n) after each round of the closure of source m.
    std::vector<std::size_t> rank_history(std::size_t m, std::size_t n);
    // Echelon basis of hom(m, n) flattened row-major (rational field only).
    std::vector<SparseVector<Rational>> basis(std::size_t m, std::size_t n);
    std::size_t stored_entries() const;

   private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Saturates every source 0..bound.
Saturation saturate(const FiniteOmegaAlgebra& alg, std::size_t bound, SaturationOptions options = {});

// max(m, n) + 2 * (largest coarity in the signature)
std::size_t default_bound(const FiniteOmegaAlgebra& alg, std::size_t m, std::size_t n);

struct CodimResult {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t bound = 0;
    std::size_t value = 0;     // rank at bound
    std::size_t rank_next = 0; // rank at bound + 1
    bool stable = false;
};

CodimResult codim(const FiniteOmegaAlgebra& alg, std::size_t m, std::size_t n,
                  std::optional<std::size_t> bound = std::nullopt, SaturationOptions options = {});

// Grid 0..max_m × 0..max_n; the bound defaults to default_bound(max_m, max_n).
std::vector<std::vector<CodimResult>> codim_table(const FiniteOmegaAlgebra& alg, std::size_t max_m,
                                                  std::size_t max_n, std::optional<std::size_t> bound = std::nullopt,
                                                  SaturationOptions options = {});

/*
 * Basis of the polynomials Σ c_i t_i vanishing on the algebra (the kernel of
 * evaluation on span{t_i}). Every returned polynomial is checked with
 * check_identity before it is returned. Throws ArityError on mixed shapes.
 */
std::vector<Polynomial> find_identities(const FiniteOmegaAlgebra& alg, const std::vector<Term>& terms);

// Appends unary generators with the given d×d matrices. Throws DimensionError on shape mismatch.
FiniteOmegaAlgebra extend_with_operators(const FiniteOmegaAlgebra& alg,
                                         const std::vector<std::pair<std::string, Matrix>>& operators);

}  // namespace omegapi

#endif
