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

#include "omegapi/evaluate.hpp"

#include "omegapi/errors.hpp"

namespace omegapi {

Evaluator::Evaluator(const FiniteOmegaAlgebra& alg, BraidExpansion expansion) : alg_(alg), expansion_(expansion) {}

const Matrix& Evaluator::identity(std::size_t n) {
    auto it = identities_.find(n);
    if (it == identities_.end()) it = identities_.emplace(n, Matrix::identity(checked_power(alg_.dim(), n))).first;
    return it->second;
}

const Matrix& Evaluator::braid(std::size_t m, std::size_t n, bool inv) {
    auto key = std::make_tuple(m, n, inv);
    if (auto it = braids_.find(key); it != braids_.end()) return it->second;
    Matrix out;
    if (m == 0 || n == 0) {
        out = identity(m + n);
    } else if (m == 1 && n == 1) {
        out = inv ? alg_.braiding_inverse_matrix() : alg_.braiding_matrix();
    } else if (expansion_ == BraidExpansion::LeftFirst ? m > 1 : n == 1) {
        // τ_{m,n} = (τ_{m-1,n} ⊗ id_1)(id_{m-1} ⊗ τ_{1,n})
        Matrix outer = kron(braid(m - 1, n, inv), identity(1));
        Matrix inner = kron(identity(m - 1), braid(1, n, inv));
        out = inv ? mat_mul(inner, outer) : mat_mul(outer, inner);
    } else if (expansion_ == BraidExpansion::LeftFirst) {
        // τ_{1,n} = (id_1 ⊗ τ_{1,n-1})(τ_{1,1} ⊗ id_{n-1})
        Matrix outer = kron(identity(1), braid(1, n - 1, inv));
        Matrix inner = kron(braid(1, 1, inv), identity(n - 1));
        out = inv ? mat_mul(inner, outer) : mat_mul(outer, inner);
    } else {
        // τ_{m,n} = (id_{n-1} ⊗ τ_{m,1})(τ_{m,n-1} ⊗ id_1)
        Matrix outer = kron(identity(n - 1), braid(m, 1, inv));
        Matrix inner = kron(braid(m, n - 1, inv), identity(1));
        out = inv ? mat_mul(inner, outer) : mat_mul(outer, inner);
    }
    return braids_.emplace(key, std::move(out)).first->second;
}

const Matrix& Evaluator::evaluate(const Term& f) {
    if (auto it = cache_.find(f); it != cache_.end()) return it->second;
    Matrix out;
    switch (f.kind()) {
        case TermKind::Generator: {
            auto idx = alg_.signature().index_of(f.name());
            if (!idx) throw SignatureError("algebra has no generator '" + f.name() + "'");
            const auto& g = alg_.signature().generators()[*idx];
            if (g.arity != f.dom() || g.coarity != f.cod())
                throw SignatureError("generator '" + f.name() + "' used with shape " + std::to_string(f.dom()) +
                                     "->" + std::to_string(f.cod()) + " but declared " + std::to_string(g.arity) +
                                     "->" + std::to_string(g.coarity));
            out = alg_.structure()[*idx];
            break;
        }
        case TermKind::Identity:
            out = identity(f.dom());
            break;
        case TermKind::Braid:
            out = braid(f.left_count(), f.right_count(), false);
            break;
        case TermKind::BraidInverse:
            out = braid(f.left_count(), f.right_count(), true);
            break;
        case TermKind::Compose: {
            const Matrix& a = evaluate(f.lhs());
            out = mat_mul(a, evaluate(f.rhs()));
            break;
        }
        case TermKind::Tensor: {
            const Matrix& a = evaluate(f.lhs());
            out = kron(a, evaluate(f.rhs()));
            break;
        }
    }
    return cache_.emplace(f, std::move(out)).first->second;
}

Matrix Evaluator::evaluate(const Polynomial& p) {
    Matrix out(checked_power(alg_.dim(), p.cod()), checked_power(alg_.dim(), p.dom()));
    for (const auto& [t, c] : p.terms()) out += evaluate(t) * c;
    return out;
}

Matrix evaluate(const FiniteOmegaAlgebra& alg, const Term& f) { return Evaluator(alg).evaluate(f); }

Matrix evaluate_poly(const FiniteOmegaAlgebra& alg, const Polynomial& p) { return Evaluator(alg).evaluate(p); }

Matrix braid_matrix(const FiniteOmegaAlgebra& alg, std::size_t m, std::size_t n, bool inv, BraidExpansion expansion) {
    return Evaluator(alg, expansion).braid(m, n, inv);
}

bool is_zero_over(const FieldSpec& field, const Matrix& m) {
    if (field.kind == FieldSpec::Kind::Rational) return m.is_zero();
    PrimeField f(field.prime);
    for (const auto& [k, v] : m.entries())
        if (!f.is_zero(f.from(v))) return false;
    return true;
}

bool check_identity(const FiniteOmegaAlgebra& alg, const Polynomial& p) {
    return is_zero_over(alg.field(), evaluate_poly(alg, p));
}

BraidingReport validate_braiding(const Matrix& c) {
    if (c.rows() != c.cols()) throw DimensionError("braiding matrix must be square");
    std::size_t d = 1;
    while (d * d < c.rows()) ++d;
    if (d * d != c.rows() || d == 0) throw DimensionError("braiding matrix side is not a perfect square");
    BraidingReport r;
    r.shape_ok = true;
    r.dim = d;
    r.invertible = inverse(c).has_value();
    Matrix id = Matrix::identity(d);
    Matrix c1 = kron(c, id);
    Matrix c2 = kron(id, c);
    r.residual = mat_mul(mat_mul(c1, c2), c1) - mat_mul(mat_mul(c2, c1), c2);
    r.yang_baxter = r.residual.is_zero();
    Matrix ident = Matrix::identity(c.rows());
    r.involutive = mat_mul(c, c) == ident;
    if (r.invertible) {
        Matrix power = c;
        for (unsigned k = 1; k <= 24; ++k) {
            if (power == ident) {
                r.order = k;
                break;
            }
            power = mat_mul(power, c);
        }
    }
    return r;
}

std::vector<std::size_t> basis_tuple(std::uint64_t index, std::size_t d, std::size_t length) {
    std::vector<std::size_t> out(length);
    for (std::size_t i = length; i-- > 0;) {
        out[i] = index % d;
        index /= d;
    }
    return out;
}

std::uint64_t basis_index(const std::vector<std::size_t>& tuple, std::size_t d) {
    std::uint64_t out = 0;
    for (std::size_t x : tuple) out = out * d + x;
    return out;
}

std::vector<RelationResult> validate_relations(const FiniteOmegaAlgebra& alg,
                                               const std::vector<NamedPolynomial>& relations) {
    Evaluator ev(alg);
    std::vector<RelationResult> out;
    for (const auto& [name, poly] : relations) {
        RelationResult r;
        r.name = name;
        Matrix value = ev.evaluate(poly);
        r.passed = is_zero_over(alg.field(), value);
        if (!r.passed) {
            std::uint64_t col = value.cols();
            for (const auto& [k, v] : value.entries()) col = std::min(col, k % value.cols());
            r.witness_input = basis_tuple(col, alg.dim(), poly.dom());
            r.witness_output = value.column(col);
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::string dual_name(const std::string& name) {
    static const std::string suffix = "_dual";
    if (name.size() > suffix.size() && name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0)
        return name.substr(0, name.size() - suffix.size());
    return name + suffix;
}

FiniteOmegaAlgebra dualize(const FiniteOmegaAlgebra& alg) {
    Signature sig;
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < alg.signature().size(); ++i) {
        const auto& g = alg.signature().generators()[i];
        sig.add({dual_name(g.name), g.coarity, g.arity});
        mats.push_back(transpose(alg.structure()[i]));
    }
    Braiding b = alg.braiding();
    if (b.kind == Braiding::Kind::Custom) b = Braiding::custom(transpose(b.c_inv), transpose(b.c));
    return FiniteOmegaAlgebra(std::move(sig), alg.dim(), std::move(mats), std::move(b), alg.field());
}

Term dualize_term(const Term& f) {
    switch (f.kind()) {
        case TermKind::Generator:
            return Term::generator(dual_name(f.name()), f.cod(), f.dom());
        case TermKind::Identity:
            return f;
        case TermKind::Braid:
            return Term::braid_inverse(f.left_count(), f.right_count());
        case TermKind::BraidInverse:
            return Term::braid(f.left_count(), f.right_count());
        case TermKind::Compose:
            return compose(dualize_term(f.rhs()), dualize_term(f.lhs()));
        case TermKind::Tensor:
            return tensor(dualize_term(f.lhs()), dualize_term(f.rhs()));
    }
    return f;
}

Polynomial dualize_polynomial(const Polynomial& p) {
    Polynomial out(p.cod(), p.dom());
    for (const auto& [t, c] : p.terms()) out.add_term(dualize_term(t), c);
    return out;
}

}  // namespace omegapi
