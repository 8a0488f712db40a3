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

#ifndef OMEGAPI_ALGEBRA_HPP
#define OMEGAPI_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "omegapi/field.hpp"
#include "omegapi/matrix.hpp"
#include "omegapi/signature.hpp"

namespace omegapi {

// The matrix realizing τ_{1,1} on A⊗A. Swap is the flip of tensor factors;
// Custom carries an arbitrary invertible d²×d² matrix and its inverse.
struct Braiding {
    enum class Kind { Swap, Custom };

    Kind kind = Kind::Swap;
    Matrix c;
    Matrix c_inv;

    static Braiding swap() { return {}; }
    // Computes the inverse when it is not supplied; throws DimensionError if
    // c is singular or the two do not multiply to the identity.
    static Braiding custom(Matrix c, std::optional<Matrix> c_inv = std::nullopt);

    friend bool operator==(const Braiding&, const Braiding&) = default;
};

// d²×d² flip x⊗y -> y⊗x.
Matrix swap_matrix(std::size_t d);

/*
 * A finite-dimensional Ω-algebra: one structure matrix per generator, of
 * shape d^{coarity} × d^{arity}, indexed row-major over basis tuples (the
 * first tensor factor is the most significant digit).
 *
 * Entries are kept as rationals. With a GF(p) field every identity and rank
 * question is answered after reducing them mod p.
 */
class FiniteOmegaAlgebra {
   public:
    // Throws SignatureError / DimensionError when the structure does not fit.
    FiniteOmegaAlgebra(Signature sig, std::size_t dim, std::vector<Matrix> structure,
                       Braiding braiding = Braiding::swap(), FieldSpec field = FieldSpec::rationals());

    const Signature& signature() const noexcept { return sig_; }
    std::size_t dim() const noexcept { return dim_; }
    const FieldSpec& field() const noexcept { return field_; }
    const Braiding& braiding() const noexcept { return braiding_; }
    const std::vector<Matrix>& structure() const noexcept { return structure_; }
    const Matrix& structure(std::string_view name) const;

    // τ_{1,1} and its inverse as matrices, whatever the backend.
    const Matrix& braiding_matrix() const noexcept { return c_; }
    const Matrix& braiding_inverse_matrix() const noexcept { return c_inv_; }
    bool braiding_is_involutive() const noexcept { return involutive_; }

    FiniteOmegaAlgebra with_field(FieldSpec field) const;

    friend bool operator==(const FiniteOmegaAlgebra& a, const FiniteOmegaAlgebra& b) {
        return a.sig_ == b.sig_ && a.dim_ == b.dim_ && a.field_ == b.field_ && a.braiding_ == b.braiding_ &&
               a.structure_ == b.structure_;
    }

   private:
    Signature sig_;
    std::size_t dim_;
    std::vector<Matrix> structure_;
    Braiding braiding_;
    FieldSpec field_;
    Matrix c_;
    Matrix c_inv_;
    bool involutive_ = false;
};

// Same algebra with only the named generators (in the given order).
FiniteOmegaAlgebra restrict(const FiniteOmegaAlgebra& alg, const std::vector<std::string>& names);

// d^n, throwing DimensionError past 2^62.
std::uint64_t checked_power(std::uint64_t d, std::size_t n);

}  // namespace omegapi

#endif
