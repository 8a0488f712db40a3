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

#include "omegapi/algebra.hpp"

#include "omegapi/errors.hpp"

namespace omegapi {

std::uint64_t checked_power(std::uint64_t d, std::size_t n) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (d != 0 && out > (std::uint64_t{1} << 62) / d)
            throw DimensionError(std::to_string(d) + "^" + std::to_string(n) + " is too large");
        out *= d;
    }
    return out;
}

Matrix swap_matrix(std::size_t d) {
    std::vector<std::uint64_t> images(d * d);
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y) images[x * d + y] = y * d + x;
    return Matrix::permutation(images);
}

Braiding Braiding::custom(Matrix c, std::optional<Matrix> c_inv) {
    if (c.rows() != c.cols()) throw DimensionError("braiding matrix must be square");
    Braiding b;
    b.kind = Kind::Custom;
    if (c_inv) {
        if (mat_mul(c, *c_inv) != Matrix::identity(c.rows()))
            throw DimensionError("braiding matrix and its given inverse do not multiply to the identity");
        b.c_inv = std::move(*c_inv);
    } else {
        auto inv = inverse(c);
        if (!inv) throw DimensionError("braiding matrix is singular");
        b.c_inv = std::move(*inv);
    }
    b.c = std::move(c);
    return b;
}

FiniteOmegaAlgebra::FiniteOmegaAlgebra(Signature sig, std::size_t dim, std::vector<Matrix> structure,
                                       Braiding braiding, FieldSpec field)
    : sig_(std::move(sig)),
      dim_(dim),
      structure_(std::move(structure)),
      braiding_(std::move(braiding)),
      field_(field) {
    if (dim_ == 0) throw DimensionError("algebra dimension must be positive");
    if (structure_.size() != sig_.size())
        throw SignatureError("expected " + std::to_string(sig_.size()) + " structure matrices, got " +
                             std::to_string(structure_.size()));
    for (std::size_t i = 0; i < sig_.size(); ++i) {
        const auto& g = sig_.generators()[i];
        const Matrix& m = structure_[i];
        if (m.rows() != checked_power(dim_, g.coarity) || m.cols() != checked_power(dim_, g.arity))
            throw DimensionError("structure matrix of '" + g.name + "' is " + std::to_string(m.rows()) + "x" +
                                 std::to_string(m.cols()) + ", expected " +
                                 std::to_string(checked_power(dim_, g.coarity)) + "x" +
                                 std::to_string(checked_power(dim_, g.arity)));
    }
    if (braiding_.kind == Braiding::Kind::Swap) {
        c_ = swap_matrix(dim_);
        c_inv_ = c_;
        involutive_ = true;
    } else {
        if (braiding_.c.rows() != dim_ * dim_ || braiding_.c.cols() != dim_ * dim_ ||
            braiding_.c_inv.rows() != dim_ * dim_ || braiding_.c_inv.cols() != dim_ * dim_)
            throw DimensionError("braiding matrix must be " + std::to_string(dim_ * dim_) + "x" +
                                 std::to_string(dim_ * dim_));
        c_ = braiding_.c;
        c_inv_ = braiding_.c_inv;
        involutive_ = c_ == c_inv_;
    }
}

const Matrix& FiniteOmegaAlgebra::structure(std::string_view name) const {
    auto idx = sig_.index_of(name);
    if (!idx) throw SignatureError("algebra has no generator '" + std::string(name) + "'");
    return structure_[*idx];
}

FiniteOmegaAlgebra FiniteOmegaAlgebra::with_field(FieldSpec field) const {
    return FiniteOmegaAlgebra(sig_, dim_, structure_, braiding_, field);
}

FiniteOmegaAlgebra restrict(const FiniteOmegaAlgebra& alg, const std::vector<std::string>& names) {
    Signature sig;
    std::vector<Matrix> mats;
    for (const auto& n : names) {
        sig.add(alg.signature().at(n));
        mats.push_back(alg.structure(n));
    }
    return FiniteOmegaAlgebra(std::move(sig), alg.dim(), std::move(mats), alg.braiding(), alg.field());
}

}  // namespace omegapi
