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

#include "omegapi/codim.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <thread>
#include <variant>

#include <gmpxx.h>

#include "omegapi/errors.hpp"
#include "omegapi/evaluate.hpp"
#include "omegapi/span_basis.hpp"

namespace omegapi {

namespace {

constexpr std::size_t kChunk = 256;

template <class Field>
class Engine {
   public:
    using value_type = typename Field::value_type;
    using Vector = SparseVector<value_type>;

    Engine(const FiniteOmegaAlgebra& alg, std::size_t bound, SaturationOptions options, Field field)
        : field_(std::move(field)), d_(alg.dim()), bound_(bound), options_(options) {
        // every hom(m, n) with m, n <= bound + 0 must be indexable
        checked_power(d_, 2 * bound_);
        powers_.push_back(1);
        for (std::size_t i = 1; i <= 2 * bound_; ++i) powers_.push_back(powers_.back() * d_);

        const auto& gens = alg.signature().generators();
        for (std::size_t i = 0; i < gens.size(); ++i) add_layer(gens[i].arity, gens[i].coarity, alg.structure()[i]);
        add_layer(2, 2, alg.braiding_matrix());
        if (!alg.braiding_is_involutive()) add_layer(2, 2, alg.braiding_inverse_matrix());

        threads_ = options_.threads ? options_.threads : std::max(1u, std::thread::hardware_concurrency());
        sources_.resize(bound_ + 1);
    }

    std::size_t bound() const { return bound_; }

    bool saturated(std::size_t m) const {
        check_source(m);
        return sources_[m].done;
    }

    std::size_t rank(std::size_t m, std::size_t n) {
        check_target(n);
        saturate(m);
        return sources_[m].spans[n].rank();
    }

    std::vector<std::size_t> history(std::size_t m, std::size_t n) {
        check_target(n);
        saturate(m);
        std::vector<std::size_t> out;
        for (const auto& round : sources_[m].history) out.push_back(round[n]);
        return out;
    }

    std::vector<SparseVector<Rational>> basis(std::size_t m, std::size_t n) {
        check_target(n);
        saturate(m);
        std::vector<SparseVector<Rational>> out;
        for (const auto& row : sources_[m].spans[n].basis()) {
            SparseVector<Rational> r;
            r.reserve(row.size());
            for (const auto& [i, x] : row) r.emplace_back(i, field_.to_rational(x));
            out.push_back(std::move(r));
        }
        return out;
    }

    std::size_t stored_entries() const {
        std::size_t total = 0;
        for (const auto& s : sources_) total += s.entries;
        return total;
    }

    void saturate(std::size_t m) {
        check_source(m);
        Source& src = sources_[m];
        if (src.done) return;
        src.spans.clear();
        src.gens.assign(bound_ + 1, {});
        for (std::size_t k = 0; k <= bound_; ++k) src.spans.emplace_back(powers_[m + k], field_);

        std::deque<std::pair<std::size_t, std::size_t>> work;
        Vector id;
        for (std::uint64_t i = 0; i < powers_[m]; ++i) id.emplace_back(i * powers_[m] + i, field_.one());
        src.spans[m].insert(id);
        src.gens[m].push_back(std::move(id));
        work.emplace_back(m, 0);
        record(src);

        while (!work.empty()) {
            std::vector<std::pair<std::size_t, std::size_t>> round(work.begin(), work.end());
            work.clear();
            for (std::size_t start = 0; start < round.size(); start += kChunk) {
                const std::size_t stop = std::min(round.size(), start + kChunk);
                std::vector<std::pair<std::size_t, Vector>> cands;
                for (std::size_t i = start; i < stop; ++i) {
                    const auto [k, g] = round[i];
                    expand(m, k, src.gens[k][g], cands);
                }
                std::vector<Vector> rems(cands.size());
                reduce_all(src, cands, rems);
                for (std::size_t i = 0; i < cands.size(); ++i) {
                    const std::size_t k = cands[i].first;
                    if (rems[i].empty()) continue;
                    if (!src.spans[k].insert_reduced(std::move(rems[i]))) continue;
                    src.gens_entries += cands[i].second.size();
                    src.gens[k].push_back(std::move(cands[i].second));
                    work.emplace_back(k, src.gens[k].size() - 1);
                }
                enforce_cap(src, m);
            }
            record(src);
        }
        src.gens.clear();
        src.gens.shrink_to_fit();
        src.gens_entries = 0;
        src.entries = 0;
        for (const auto& s : src.spans) src.entries += s.stored_entries();
        src.done = true;
    }

   private:
    struct Layer {
        std::size_t arity;
        std::size_t coarity;
        // cols[j] lists the nonzero (row, value) pairs of column j
        std::vector<std::vector<std::pair<std::uint64_t, value_type>>> cols;
    };

    struct Source {
        bool done = false;
        std::vector<SpanBasis<Field>> spans;
        std::vector<std::vector<Vector>> gens;
        std::vector<std::vector<std::size_t>> history;
        std::size_t gens_entries = 0;
        std::size_t entries = 0;
    };

    void add_layer(std::size_t arity, std::size_t coarity, const Matrix& m) {
        Layer layer{arity, coarity, std::vector<std::vector<std::pair<std::uint64_t, value_type>>>(m.cols())};
        for (const auto& [key, x] : m.entries()) {
            auto y = field_.from(x);
            if (field_.is_zero(y)) continue;
            layer.cols[key % m.cols()].emplace_back(key / m.cols(), std::move(y));
        }
        layers_.push_back(std::move(layer));
    }

    void check_source(std::size_t m) const {
        if (m > bound_)
            throw std::invalid_argument("source object " + std::to_string(m) + " exceeds bound " +
                                        std::to_string(bound_));
    }
    void check_target(std::size_t n) const { check_source(n); }

    void record(Source& src) {
        std::vector<std::size_t> ranks;
        for (const auto& s : src.spans) ranks.push_back(s.rank());
        src.history.push_back(std::move(ranks));
    }

    // All layer images of v ∈ hom(m, k) that stay within the bound.
    void expand(std::size_t m, std::size_t k, const Vector& v, std::vector<std::pair<std::size_t, Vector>>& out) const {
        const std::uint64_t dm = powers_[m];
        for (const Layer& layer : layers_) {
            if (layer.arity > k) continue;
            const std::size_t rest = k - layer.arity;
            const std::size_t target = rest + layer.coarity;
            if (target > bound_) continue;
            for (std::size_t a = 0; a <= rest; ++a) {
                const std::size_t b = rest - a;
                const std::uint64_t db = powers_[b];
                const std::uint64_t ds = powers_[layer.arity];
                const std::uint64_t dt = powers_[layer.coarity];
                Vector w;
                w.reserve(v.size());
                for (const auto& [idx, x] : v) {
                    const std::uint64_t row = idx / dm;
                    const std::uint64_t col = idx % dm;
                    const std::uint64_t rb = row % db;
                    const std::uint64_t mid = row / db;
                    const std::uint64_t rs = mid % ds;
                    const std::uint64_t ra = mid / ds;
                    for (const auto& [rt, g] : layer.cols[rs])
                        w.emplace_back(((ra * dt + rt) * db + rb) * dm + col, field_.mul(x, g));
                }
                w = combine(std::move(w));
                if (!w.empty()) out.emplace_back(target, std::move(w));
            }
        }
    }

    Vector combine(Vector acc) const {
        std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        Vector out;
        out.reserve(acc.size());
        for (auto& e : acc) {
            if (!out.empty() && out.back().first == e.first) {
                out.back().second = field_.add(out.back().second, e.second);
            } else {
                if (!out.empty() && field_.is_zero(out.back().second)) out.pop_back();
                out.push_back(std::move(e));
            }
        }
        if (!out.empty() && field_.is_zero(out.back().second)) out.pop_back();
        return out;
    }

    void reduce_all(const Source& src, const std::vector<std::pair<std::size_t, Vector>>& cands,
                    std::vector<Vector>& rems) const {
        auto work = [&](std::size_t offset, std::size_t stride) {
            for (std::size_t i = offset; i < cands.size(); i += stride)
                rems[i] = src.spans[cands[i].first].reduce(cands[i].second);
        };
        const std::size_t n = std::min(threads_, std::max<std::size_t>(1, cands.size() / 16));
        if (n <= 1) {
            work(0, 1);
            return;
        }
        std::vector<std::thread> pool;
        for (std::size_t t = 1; t < n; ++t) pool.emplace_back(work, t, n);
        work(0, n);
        for (auto& th : pool) th.join();
    }

    void enforce_cap(const Source& src, std::size_t m) const {
        std::size_t total = src.gens_entries;
        for (const auto& s : src.spans) total += s.stored_entries();
        if (total > options_.max_entries)
            throw ResourceLimitError("saturating source object " + std::to_string(m) + " at bound " +
                                     std::to_string(bound_) + " needs more than " +
                                     std::to_string(options_.max_entries) + " stored entries");
    }

    Field field_;
    std::size_t d_;
    std::size_t bound_;
    SaturationOptions options_;
    std::size_t threads_ = 1;
    std::vector<std::uint64_t> powers_;
    std::vector<Layer> layers_;
    std::vector<Source> sources_;
};

template <class Field>
std::vector<Polynomial> kernel_polynomials(const FiniteOmegaAlgebra& alg, const Field& field,
                                           const std::vector<Term>& terms) {
    Evaluator ev(alg);
    std::vector<SparseVector<Rational>> images;
    for (const Term& t : terms) images.push_back(ev.evaluate(t).flatten());
    const std::uint64_t ambient = checked_power(alg.dim(), terms.front().dom() + terms.front().cod());

    // Augment each image with a unit marker; echelon rows whose pivot lies in
    // the marker block carry exactly the kernel.
    SpanBasis<Field> span(ambient + terms.size(), field);
    for (std::size_t i = 0; i < images.size(); ++i) {
        auto v = convert_vector(field, images[i]);
        v.emplace_back(ambient + i, field.one());
        span.insert(v);
    }
    std::vector<Polynomial> out;
    for (const auto& row : span.basis()) {
        if (row.front().first < ambient) continue;
        Polynomial p(terms.front().dom(), terms.front().cod());
        mpz_class lcm = 1;
        std::vector<std::pair<std::size_t, Rational>> coefs;
        for (const auto& [idx, x] : row) {
            Rational c = field.to_rational(x);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
            coefs.emplace_back(idx - ambient, std::move(c));
        }
        const Rational scale{mpq_class(lcm)};
        for (auto& [i, c] : coefs) p.add_term(terms[i], c * scale);
        if (!check_identity(alg, p))
            throw std::logic_error("kernel element failed verification: " + to_string(p));
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

struct Saturation::Impl {
    std::variant<Engine<RationalField>, Engine<PrimeField>> engine;
};

Saturation::Saturation(const FiniteOmegaAlgebra& alg, std::size_t bound, SaturationOptions options) {
    if (alg.field().kind == FieldSpec::Kind::Prime)
        impl_.reset(new Impl{Engine<PrimeField>(alg, bound, options, PrimeField(alg.field().prime))});
    else
        impl_.reset(new Impl{Engine<RationalField>(alg, bound, options, RationalField{})});
}
Saturation::~Saturation() = default;
Saturation::Saturation(Saturation&&) noexcept = default;
Saturation& Saturation::operator=(Saturation&&) noexcept = default;

std::size_t Saturation::bound() const noexcept {
    return std::visit([](const auto& e) { return e.bound(); }, impl_->engine);
}
std::size_t Saturation::rank(std::size_t m, std::size_t n) {
    return std::visit([&](auto& e) { return e.rank(m, n); }, impl_->engine);
}
void Saturation::saturate_source(std::size_t m) {
    std::visit([&](auto& e) { e.saturate(m); }, impl_->engine);
}
bool Saturation::saturated(std::size_t m) const {
    return std::visit([&](const auto& e) { return e.saturated(m); }, impl_->engine);
}
std::vector<std::size_t> Saturation::rank_history(std::size_t m, std::size_t n) {
    return std::visit([&](auto& e) { return e.history(m, n); }, impl_->engine);
}
std::vector<SparseVector<Rational>> Saturation::basis(std::size_t m, std::size_t n) {
    return std::visit([&](auto& e) { return e.basis(m, n); }, impl_->engine);
}
std::size_t Saturation::stored_entries() const {
    return std::visit([](const auto& e) { return e.stored_entries(); }, impl_->engine);
}

Saturation saturate(const FiniteOmegaAlgebra& alg, std::size_t bound, SaturationOptions options) {
    Saturation s(alg, bound, options);
    for (std::size_t m = 0; m <= bound; ++m) s.saturate_source(m);
    return s;
}

std::size_t default_bound(const FiniteOmegaAlgebra& alg, std::size_t m, std::size_t n) {
    return std::max(m, n) + 2 * alg.signature().max_coarity();
}

CodimResult codim(const FiniteOmegaAlgebra& alg, std::size_t m, std::size_t n, std::optional<std::size_t> bound,
                  SaturationOptions options) {
    const std::size_t k = bound ? *bound : default_bound(alg, m, n);
    if (k < std::max(m, n))
        throw std::invalid_argument("bound " + std::to_string(k) + " is below max(m, n)");
    Saturation at(alg, k, options);
    Saturation next(alg, k + 1, options);
    CodimResult r;
    r.m = m;
    r.n = n;
    r.bound = k;
    r.value = at.rank(m, n);
    r.rank_next = next.rank(m, n);
    r.stable = r.value == r.rank_next;
    return r;
}

std::vector<std::vector<CodimResult>> codim_table(const FiniteOmegaAlgebra& alg, std::size_t max_m,
                                                  std::size_t max_n, std::optional<std::size_t> bound,
                                                  SaturationOptions options) {
    const std::size_t k = bound ? *bound : default_bound(alg, max_m, max_n);
    if (k < std::max(max_m, max_n))
        throw std::invalid_argument("bound " + std::to_string(k) + " is below the table size");
    Saturation at(alg, k, options);
    Saturation next(alg, k + 1, options);
    std::vector<std::vector<CodimResult>> out(max_m + 1);
    for (std::size_t m = 0; m <= max_m; ++m) {
        for (std::size_t n = 0; n <= max_n; ++n) {
            CodimResult r;
            r.m = m;
            r.n = n;
            r.bound = k;
            r.value = at.rank(m, n);
            r.rank_next = next.rank(m, n);
            r.stable = r.value == r.rank_next;
            out[m].push_back(r);
        }
    }
    return out;
}

std::vector<Polynomial> find_identities(const FiniteOmegaAlgebra& alg, const std::vector<Term>& terms) {
    if (terms.empty()) return {};
    for (const Term& t : terms)
        if (t.dom() != terms.front().dom() || t.cod() != terms.front().cod())
            throw ArityError("terms " + to_string(terms.front()) + " and " + to_string(t) + " have different shapes");
    if (alg.field().kind == FieldSpec::Kind::Prime)
        return kernel_polynomials(alg, PrimeField(alg.field().prime), terms);
    return kernel_polynomials(alg, RationalField{}, terms);
}

FiniteOmegaAlgebra extend_with_operators(const FiniteOmegaAlgebra& alg,
                                         const std::vector<std::pair<std::string, Matrix>>& operators) {
    Signature sig = alg.signature();
    std::vector<Matrix> structure = alg.structure();
    for (const auto& [name, m] : operators) {
        sig.add({name, 1, 1});
        structure.push_back(m);
    }
    Braiding braiding = alg.braiding();
    return FiniteOmegaAlgebra(std::move(sig), alg.dim(), std::move(structure), std::move(braiding), alg.field());
}

}  // namespace omegapi
