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

#ifndef OMEGAPI_EVALUATE_HPP
#define OMEGAPI_EVALUATE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "omegapi/algebra.hpp"
#include "omegapi/matrix.hpp"
#include "omegapi/polynomial.hpp"
#include "omegapi/term.hpp"

namespace omegapi {

// Two coherent ways of building τ_{m,n} from τ_{1,1}. LeftFirst peels the
// left block one strand at a time, RightFirst the right block.
enum class BraidExpansion { LeftFirst, RightFirst };

/*
 * The evaluation functor E_A. A term f: m -> n becomes a d^n × d^m matrix;
 * compose is matrix product and tensor is kron. Results are memoized by
 * structural hash, so one Evaluator should be reused across related terms.
 * Not thread-safe; use one per thread.
 */
class Evaluator {
   public:
    explicit Evaluator(const FiniteOmegaAlgebra& alg, BraidExpansion expansion = BraidExpansion::LeftFirst);

    const FiniteOmegaAlgebra& algebra() const noexcept { return alg_; }

    // Throws SignatureError for a generator the algebra does not have.
    const Matrix& evaluate(const Term& f);
    Matrix evaluate(const Polynomial& p);
    // τ_{m,n} (or τ^{-1}_{m,n}) as a d^{m+n} square matrix.
    const Matrix& braid(std::size_t m, std::size_t n, bool inverse = false);

   private:
    const Matrix& identity(std::size_t n);

    const FiniteOmegaAlgebra& alg_;
    BraidExpansion expansion_;
    std::unordered_map<Term, Matrix, TermHash> cache_;
    std::map<std::tuple<std::size_t, std::size_t, bool>, Matrix> braids_;
    std::map<std::size_t, Matrix> identities_;
};

Matrix evaluate(const FiniteOmegaAlgebra& alg, const Term& f);
Matrix evaluate_poly(const FiniteOmegaAlgebra& alg, const Polynomial& p);
Matrix braid_matrix(const FiniteOmegaAlgebra& alg, std::size_t m, std::size_t n, bool inverse = false,
                    BraidExpansion expansion = BraidExpansion::LeftFirst);

// True iff p evaluates to zero over the algebra's field.
bool check_identity(const FiniteOmegaAlgebra& alg, const Polynomial& p);
// A matrix is zero over the field (entries reduced mod p for GF(p)).
bool is_zero_over(const FieldSpec& field, const Matrix& m);

struct BraidingReport {
    bool shape_ok = false;
    std::size_t dim = 0;
    bool invertible = false;
    bool yang_baxter = false;
    // (c⊗I)(I⊗c)(c⊗I) − (I⊗c)(c⊗I)(I⊗c)
    Matrix residual;
    bool involutive = false;
    // Least k ≤ 24 with c^k = I.
    std::optional<unsigned> order;

    bool passed() const { return shape_ok && invertible && yang_baxter; }
};

// Throws DimensionError unless c is square of side d² for some d ≥ 1.
BraidingReport validate_braiding(const Matrix& c);

using NamedPolynomial = std::pair<std::string, Polynomial>;

struct RelationResult {
    std::string name;
    bool passed = false;
    // For a failing relation: a basis input tuple on which it is nonzero and
    // the value there.
    std::vector<std::size_t> witness_input;
    SparseVector<Rational> witness_output;
};

std::vector<RelationResult> validate_relations(const FiniteOmegaAlgebra& alg,
                                               const std::vector<NamedPolynomial>& relations);

// Basis tuple (digits base d, most significant first) of a flat index.
std::vector<std::size_t> basis_tuple(std::uint64_t index, std::size_t d, std::size_t length);
std::uint64_t basis_index(const std::vector<std::size_t>& tuple, std::size_t d);

/*
 * Ω*-duality. The dual algebra has every generator reversed (arity and
 * coarity swapped, matrix transposed) and renamed by dual_name; the dual
 * braiding has τ_{1,1} = transpose(c^{-1}). dualize_term reverses
 * compositions, keeps tensor order, exchanges τ and τ^{-1}, and renames
 * generators, so evaluate(dualize(A), dualize_term(f)) = transpose(evaluate(A, f)).
 */
FiniteOmegaAlgebra dualize(const FiniteOmegaAlgebra& alg);
Term dualize_term(const Term& f);
Polynomial dualize_polynomial(const Polynomial& p);
// "mu" <-> "mu_dual"
std::string dual_name(const std::string& name);

}  // namespace omegapi

#endif
