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

#include "omegapi/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include <gmpxx.h>

namespace omegapi {

std::size_t Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), std::size_t{0}); }

namespace {

void partitions_rec(std::size_t remaining, std::size_t max_part, std::vector<std::size_t>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back({cur});
        return;
    }
    for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

std::uint64_t to_u64(const mpz_class& z) {
    if (z < 0 || mpz_sizeinbase(z.get_mpz_t(), 2) > 64) throw std::overflow_error("value exceeds 64 bits");
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof out, 0, 0, z.get_mpz_t());
    return out;
}

mpz_class mpz_factorial(std::size_t n) {
    mpz_class z;
    mpz_fac_ui(z.get_mpz_t(), n);
    return z;
}

}  // namespace

std::vector<Partition> partitions(std::size_t n) {
    std::vector<Partition> out;
    std::vector<std::size_t> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::uint64_t hook_dim(const Partition& lambda) {
    const auto& p = lambda.parts;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (p[i] < p[i + 1] || p[i + 1] == 0) throw std::invalid_argument("not a partition");
    mpz_class hooks = 1;
    for (std::size_t r = 0; r < p.size(); ++r) {
        for (std::size_t c = 0; c < p[r]; ++c) {
            std::size_t below = 0;
            for (std::size_t r2 = r + 1; r2 < p.size() && p[r2] > c; ++r2) ++below;
            hooks *= static_cast<unsigned long>(p[r] - c + below);
        }
    }
    return to_u64(mpz_factorial(lambda.weight()) / hooks);
}

std::uint64_t schur_weyl_codim(std::size_t d, std::size_t n) {
    mpz_class total = 0;
    for (const auto& lambda : partitions(n)) {
        if (lambda.height() > d) continue;
        mpz_class f = hook_dim(lambda);
        total += f * f;
    }
    return to_u64(total);
}

std::uint64_t factorial(std::size_t n) { return to_u64(mpz_factorial(n)); }

std::uint64_t binomial(std::size_t n, std::size_t k) {
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), n, k);
    return to_u64(z);
}

std::uint64_t catalan(std::size_t n) {
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), 2 * n, n);
    return to_u64(z / static_cast<unsigned long>(n + 1));
}

Permutation::Permutation(std::size_t n) : images_(n) { std::iota(images_.begin(), images_.end(), std::size_t{1}); }

Permutation Permutation::from_images(std::vector<std::size_t> images) {
    std::vector<bool> seen(images.size() + 1, false);
    for (std::size_t x : images) {
        if (x < 1 || x > images.size() || seen[x]) throw std::invalid_argument("images do not form a permutation");
        seen[x] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
    Permutation p(n);
    for (const auto& cyc : cycles) {
        Permutation c(n);
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (cyc[i] < 1 || cyc[i] > n) throw std::invalid_argument("cycle entry out of range");
            c.images_[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
        }
        p = p * from_images(c.images_);
    }
    return p;
}

Permutation Permutation::adjacent(std::size_t n, std::size_t i) {
    if (i < 1 || i >= n) throw std::invalid_argument("adjacent transposition index out of range");
    Permutation p(n);
    std::swap(p.images_[i - 1], p.images_[i]);
    return p;
}

std::vector<Permutation> Permutation::all(std::size_t n) {
    std::vector<Permutation> out;
    Permutation p(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.images_.begin(), p.images_.end()));
    return out;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i + 1) return false;
    return true;
}

std::size_t Permutation::length() const {
    std::size_t inv = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
        for (std::size_t j = i + 1; j < images_.size(); ++j)
            if (images_[i] > images_[j]) ++inv;
    return inv;
}

int Permutation::sign() const { return length() % 2 == 0 ? 1 : -1; }

Permutation Permutation::inverse() const {
    Permutation p(size());
    for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i] - 1] = i + 1;
    return p;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("multiplying permutations of different degree");
    Permutation r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) r.images_[i] = p.images_[q.images_[i] - 1];
    return r;
}

std::vector<std::size_t> Permutation::reduced_word() const {
    std::vector<std::size_t> tail;
    std::vector<std::size_t> img = images_;
    while (true) {
        std::size_t i = 0;
        while (i + 1 < img.size() && img[i] < img[i + 1]) ++i;
        if (i + 1 >= img.size()) break;
        // p = (p s_i) s_i, and p s_i swaps the images at i, i+1
        std::swap(img[i], img[i + 1]);
        tail.push_back(i + 1);
    }
    return {tail.rbegin(), tail.rend()};
}

std::string Permutation::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(images_[i]);
    }
    return out + "]";
}

void BraidWord::validate() const {
    for (int l : letters)
        if (l == 0 || static_cast<std::size_t>(std::abs(l)) >= strands)
            throw std::invalid_argument("braid generator index out of range");
}

Permutation BraidWord::permutation() const {
    validate();
    Permutation p(strands);
    for (int l : letters) p = p * Permutation::adjacent(strands, static_cast<std::size_t>(std::abs(l)));
    return p;
}

BraidWord BraidWord::inverse() const {
    BraidWord b{strands, {letters.rbegin(), letters.rend()}};
    for (int& l : b.letters) l = -l;
    return b;
}

BraidWord BraidWord::positive_lift(const Permutation& p) {
    BraidWord b{p.size(), {}};
    for (std::size_t i : p.reduced_word()) b.letters.push_back(static_cast<int>(i));
    return b;
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.strands != b.strands) throw std::invalid_argument("multiplying braids on different strand counts");
    BraidWord out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
}

Term perm_to_term(const Permutation& p) {
    std::vector<Term> factors;
    for (std::size_t i : p.reduced_word()) factors.push_back(whisker(i - 1, Term::braid(1, 1), p.size() - i - 1));
    return compose_all(factors, p.size());
}

Term braid_to_term(const BraidWord& b) {
    b.validate();
    std::vector<Term> factors;
    for (int l : b.letters) {
        std::size_t i = static_cast<std::size_t>(std::abs(l));
        factors.push_back(whisker(i - 1, l > 0 ? Term::braid(1, 1) : Term::braid_inverse(1, 1), b.strands - i - 1));
    }
    return compose_all(factors, b.strands);
}

PermutationSum::PermutationSum(const Permutation& p, const Rational& c) : n_(p.size()) { add(p, c); }

void PermutationSum::add(const Permutation& p, const Rational& c) {
    if (p.size() != n_) throw std::invalid_argument("permutation of the wrong degree");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

PermutationSum& PermutationSum::operator+=(const PermutationSum& rhs) {
    for (const auto& [p, c] : rhs.terms_) add(p, c);
    return *this;
}

PermutationSum operator*(const PermutationSum& a, const PermutationSum& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("multiplying group algebra elements of different degree");
    PermutationSum out(a.n_);
    for (const auto& [p, x] : a.terms_)
        for (const auto& [q, y] : b.terms_) out.add(p * q, x * y);
    return out;
}

PermutationSum operator*(const Rational& s, PermutationSum a) {
    if (s.is_zero()) a.terms_.clear();
    for (auto& e : a.terms_) e.second *= s;
    return a;
}

Polynomial PermutationSum::to_polynomial() const {
    Polynomial out(n_, n_);
    for (const auto& [p, c] : terms_) out.add_term(perm_to_term(p), c);
    return out;
}

YoungTableau YoungTableau::row_reading(const Partition& shape) {
    YoungTableau t{shape, {}};
    std::size_t next = 1;
    for (std::size_t len : shape.parts) {
        std::vector<std::size_t> row;
        for (std::size_t i = 0; i < len; ++i) row.push_back(next++);
        t.rows.push_back(std::move(row));
    }
    return t;
}

void YoungTableau::validate() const {
    if (rows.size() != shape.parts.size()) throw std::invalid_argument("tableau rows do not match its shape");
    std::size_t n = shape.weight();
    std::vector<bool> seen(n + 1, false);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != shape.parts[r]) throw std::invalid_argument("tableau row length does not match shape");
        if (r > 0 && shape.parts[r] > shape.parts[r - 1]) throw std::invalid_argument("shape is not a partition");
        for (std::size_t x : rows[r]) {
            if (x < 1 || x > n || seen[x]) throw std::invalid_argument("tableau filling is not a bijection");
            seen[x] = true;
        }
    }
}

bool YoungTableau::is_standard() const {
    validate();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) return false;
            if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r][c] > rows[r + 1][c]) return false;
        }
    return true;
}

std::vector<std::vector<std::size_t>> YoungTableau::columns() const {
    std::vector<std::vector<std::size_t>> cols(rows.empty() ? 0 : rows.front().size());
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
    return cols;
}

namespace {

// Σ over the permutations preserving every block, signed if requested.
PermutationSum block_group_sum(std::size_t n, const std::vector<std::vector<std::size_t>>& blocks, bool signed_sum) {
    PermutationSum acc(Permutation(n), 1);
    for (const auto& block : blocks) {
        PermutationSum part(n);
        std::vector<std::size_t> targets = block;
        std::sort(targets.begin(), targets.end());
        do {
            Permutation p(n);
            std::vector<std::size_t> img = p.images();
            for (std::size_t i = 0; i < block.size(); ++i) img[block[i] - 1] = targets[i];
            Permutation q = Permutation::from_images(img);
            part.add(q, signed_sum ? q.sign() : 1);
        } while (std::next_permutation(targets.begin(), targets.end()));
        acc = acc * part;
    }
    return acc;
}

}  // namespace

PermutationSum row_symmetrizer(const YoungTableau& t) {
    t.validate();
    return block_group_sum(t.size(), t.rows, false);
}

PermutationSum column_antisymmetrizer(const YoungTableau& t) {
    t.validate();
    return block_group_sum(t.size(), t.columns(), true);
}

Polynomial young_symmetrizer(const YoungTableau& t, bool star) {
    PermutationSum a = row_symmetrizer(t);
    PermutationSum b = column_antisymmetrizer(t);
    return (star ? b * a : a * b).to_polynomial();
}

Polynomial antisymmetrizer(std::size_t d, std::size_t n) {
    if (n < d + 1) throw std::invalid_argument("antisymmetrizer needs arity at least d+1");
    Polynomial out(n, n);
    for (const auto& p : Permutation::all(d + 1)) out.add_term(whisker(0, perm_to_term(p), n - d - 1), p.sign());
    return out;
}

std::vector<BraidWord> sample_pure_braids(std::size_t n, std::size_t count, std::uint64_t seed, std::size_t max_factors,
                                          std::size_t max_conjugator) {
    if (n < 2) return std::vector<BraidWord>(count, BraidWord{n, {}});
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    std::vector<BraidWord> out;
    for (std::size_t k = 0; k < count; ++k) {
        BraidWord b{n, {}};
        std::size_t factors = pick(1, std::max<std::size_t>(1, max_factors));
        for (std::size_t f = 0; f < factors; ++f) {
            BraidWord w{n, {}};
            std::size_t len = pick(0, max_conjugator);
            for (std::size_t j = 0; j < len; ++j) {
                int g = static_cast<int>(pick(1, n - 1));
                w.letters.push_back(pick(0, 1) ? g : -g);
            }
            int i = static_cast<int>(pick(1, n - 1));
            int s = pick(0, 1) ? 1 : -1;
            b = b * w * BraidWord{n, {s * i, s * i}} * w.inverse();
        }
        out.push_back(std::move(b));
    }
    return out;
}

}  // namespace omegapi
