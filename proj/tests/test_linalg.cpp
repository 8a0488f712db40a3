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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "omegapi/combinatorics.hpp"
#include "omegapi/errors.hpp"
#include "omegapi/field.hpp"
#include "omegapi/linear_algebra.hpp"
#include "omegapi/matrix.hpp"
#include "omegapi/rational.hpp"
#include "omegapi/span_basis.hpp"

namespace omegapi {
namespace {

using Vec = SparseVector<Rational>;

Matrix swap2() {
    // e_i ⊗ e_j -> e_j ⊗ e_i on d = 2
    return Matrix::permutation({0, 2, 1, 3});
}

// Matrix of the factor permutation (v_1 ⊗ ... ⊗ v_n) -> (v_{p(1)} ⊗ ... ⊗ v_{p(n)}).
Matrix factor_permutation(const std::vector<std::size_t>& p, std::size_t d) {
    const std::size_t n = p.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= d;
    std::vector<std::uint64_t> images(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::vector<std::size_t> digits(n);
        std::uint64_t rest = idx;
        for (std::size_t k = n; k-- > 0;) {
            digits[k] = rest % d;
            rest /= d;
        }
        std::uint64_t out = 0;
        for (std::size_t k = 0; k < n; ++k) out = out * d + digits[p[k]];
        images[idx] = out;
    }
    return Matrix::permutation(images);
}

TEST(Rational, ArithmeticAndNormalization) {
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1, -2), Rational(-1, 2));
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_EQ(Rational(3, 4).inverse(), Rational(4, 3));
    EXPECT_EQ(Rational::parse("-7/21"), Rational(-1, 3));
    EXPECT_EQ(Rational(-5, 10).to_string(), "-1/2");
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
}

TEST(Rational, NeverOverflows) {
    Rational big = Rational(INT64_MAX);
    Rational sq = big * big;
    EXPECT_FALSE(sq.is_small());
    EXPECT_EQ(sq / big, big);
    EXPECT_TRUE((sq / big).is_small());
    Rational low = Rational(INT64_MIN);
    EXPECT_EQ(-(-low), low);
    EXPECT_EQ((low - 1) + 1, low);
    Rational acc = 1;
    for (int i = 1; i <= 30; ++i) acc *= Rational(i, i + 1);
    EXPECT_EQ(acc, Rational(1, 31));
}

TEST(Field, PrimeArithmeticAndParsing) {
    PrimeField f(7);
    EXPECT_EQ(f.mul(3, 5), 1u);
    EXPECT_EQ(f.inv(3), 5u);
    EXPECT_EQ(f.from(Rational(1, 2)), 4u);
    EXPECT_EQ(f.from(Rational(-1)), 6u);
    EXPECT_THROW(f.from(Rational(1, 7)), std::domain_error);
    EXPECT_EQ(FieldSpec::parse("gfp:1000003"), FieldSpec::gf(1000003));
    EXPECT_EQ(FieldSpec::parse("q"), FieldSpec::rationals());
    EXPECT_THROW(FieldSpec::parse("gfp:12"), std::invalid_argument);
}

TEST(Matrix, KronTransposeSwap) {
    EXPECT_EQ(kron(Matrix::identity(2), Matrix::identity(2)), Matrix::identity(4));
    Matrix a = Matrix::from_dense({{1, 2, 0}, {0, Rational(1, 3), -4}});
    EXPECT_EQ(transpose(transpose(a)), a);
    EXPECT_EQ(mat_mul(swap2(), swap2()), Matrix::identity(4));
    EXPECT_THROW(mat_mul(a, a), DimensionError);
}

TEST(Matrix, KronIsRowMajor) {
    Matrix a = Matrix::from_dense({{1, 2}, {3, 4}});
    Matrix b = Matrix::from_dense({{0, 5}, {6, 7}});
    Matrix k = kron(a, b);
    for (std::uint64_t i1 = 0; i1 < 2; ++i1)
        for (std::uint64_t i2 = 0; i2 < 2; ++i2)
            for (std::uint64_t j1 = 0; j1 < 2; ++j1)
                for (std::uint64_t j2 = 0; j2 < 2; ++j2)
                    EXPECT_EQ(k.at(i1 * 2 + i2, j1 * 2 + j2), a.at(i1, j1) * b.at(i2, j2));
}

TEST(Matrix, MultiplicationMatchesDenseOracle) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::vector<Rational>> a(3, std::vector<Rational>(4)), b(4, std::vector<Rational>(2));
        for (auto& r : a)
            for (auto& x : r) x = dist(rng);
        for (auto& r : b)
            for (auto& x : r) x = dist(rng);
        Matrix p = mat_mul(Matrix::from_dense(a), Matrix::from_dense(b));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                Rational s = 0;
                for (std::size_t k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
                EXPECT_EQ(p.at(i, j), s);
            }
    }
}

TEST(Matrix, InverseAndRank) {
    Matrix a = Matrix::from_dense({{2, 1}, {1, 1}});
    auto inv = inverse(a);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(mat_mul(a, *inv), Matrix::identity(2));
    EXPECT_FALSE(inverse(Matrix::from_dense({{1, 2}, {2, 4}})).has_value());
    EXPECT_EQ(rank(Matrix::from_dense({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}})), 2u);
    EXPECT_EQ(matrix_power(swap2(), 2), Matrix::identity(4));
}

TEST(SpanBasis, InsertExamples) {
    SpanBasis<RationalField> b(3);
    Vec e1{{0, 1}};
    Vec e1e2{{0, 1}, {1, 1}};
    EXPECT_TRUE(b.insert(e1));
    EXPECT_FALSE(b.insert(e1));
    EXPECT_EQ(b.rank(), 1u);
    EXPECT_TRUE(b.insert(e1e2));
    EXPECT_EQ(b.rank(), 2u);
    EXPECT_TRUE(b.contains(Vec{{1, 5}}));
    EXPECT_FALSE(b.contains(Vec{{2, 1}}));
    EXPECT_THROW(b.insert(Vec{{3, 1}}), DimensionError);
    EXPECT_THROW(span_insert(b, Matrix::identity(2)), DimensionError);
}

TEST(SpanBasis, PermutationMatricesMatchHookOracle) {
    for (std::size_t d : {2u, 3u}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            std::uint64_t ambient = 1;
            for (std::size_t i = 0; i < 2 * n; ++i) ambient *= d;
            SpanBasis<RationalField> b(ambient);
            std::vector<std::size_t> p(n);
            std::iota(p.begin(), p.end(), 0);
            do {
                span_insert(b, factor_permutation(p, d));
            } while (std::next_permutation(p.begin(), p.end()));
            EXPECT_EQ(b.rank(), schur_weyl_codim(d, n)) << "d=" << d << " n=" << n;
        }
    }
}

TEST(SpanBasis, EchelonInvariants) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> val(-2, 2);
    SpanBasis<RationalField> b(12);
    for (int i = 0; i < 9; ++i) {
        Vec v;
        for (std::uint64_t j = 0; j < 12; ++j)
            if (int x = val(rng); x != 0 && j % 3 != 2) v.emplace_back(j, Rational(x));
        b.insert(v);
    }
    auto rows = b.basis();
    auto pivots = b.pivots();
    ASSERT_EQ(rows.size(), pivots.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i].front().first, pivots[i]);
        EXPECT_EQ(rows[i].front().second, Rational(1));
        if (i) EXPECT_LT(pivots[i - 1], pivots[i]);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == i) continue;
            for (const auto& [j, x] : rows[k]) EXPECT_NE(j, pivots[i]);
        }
    }
    // re-reducing a stored vector against the others leaves it unchanged
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SpanBasis<RationalField> others(12);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != i) others.insert(rows[k]);
        EXPECT_EQ(others.reduce(rows[i]), rows[i]);
    }
}

TEST(SpanBasis, OrderIndependentRankAndRows) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> val(-3, 3);
    std::vector<Vec> vs;
    for (int i = 0; i < 10; ++i) {
        Vec v;
        for (std::uint64_t j = 0; j < 16; ++j)
            if (int x = val(rng); x != 0 && (j + i) % 4 != 0) v.emplace_back(j, Rational(x));
        vs.push_back(v);
    }
    for (int i = 0; i < 5; ++i) vs.push_back(vs[i]);
    SpanBasis<RationalField> ref(16);
    for (const auto& v : vs) ref.insert(v);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(vs.begin(), vs.end(), rng);
        SpanBasis<RationalField> b(16);
        for (const auto& v : vs) b.insert(v);
        EXPECT_EQ(b.rank(), ref.rank());
        EXPECT_EQ(b.basis(), ref.basis());
    }
}

TEST(SpanBasis, PrimeAndRationalRanksAgree) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> val(-5, 5);
    PrimeField f(1000003);
    for (int trial = 0; trial < 10; ++trial) {
        SpanBasis<RationalField> q(20);
        SpanBasis<PrimeField> p(20, f);
        for (int i = 0; i < 14; ++i) {
            Vec v;
            for (std::uint64_t j = 0; j < 20; ++j)
                if (int x = val(rng); x != 0 && (j * 7 + i) % 3 != 0) v.emplace_back(j, Rational(x, 1 + (j % 2)));
            q.insert(v);
            p.insert(convert_vector(f, v));
        }
        EXPECT_EQ(q.rank(), p.rank());
    }
}

TEST(KernelRelations, FindsDependencies) {
    Vec a{{0, 1}, {1, 2}};
    Vec b{{1, 1}};
    Vec c{{0, 1}};
    auto ker = kernel_relations({a, b, c});
    ASSERT_EQ(ker.size(), 1u);
    // a - 2b - c = 0, up to scaling
    const auto& k = ker.front();
    EXPECT_EQ(k[1], Rational(-2) * k[0]);
    EXPECT_EQ(k[2], -k[0]);
    EXPECT_TRUE(kernel_relations({a, b}).empty());
}

}  // namespace
}  // namespace omegapi
