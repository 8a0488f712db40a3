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

#include <random>

#include "omegapi/errors.hpp"
#include "omegapi/group_word.hpp"
#include "omegapi/normal_forms.hpp"
#include "omegapi/parser.hpp"
#include "omegapi/word_eval.hpp"
#include "support.hpp"

namespace omegapi {
namespace {

using Kind = GroupWord::Kind;

GroupWord fw(const std::string& s) { return GroupWord::parse(s, Kind::Free); }
GroupWord aw(const std::string& s) { return GroupWord::parse(s, Kind::FreeAbelian); }

WordVector gens(std::size_t m, Kind kind) {
    WordTuple xs;
    for (std::size_t k = 1; k <= m; ++k) xs.push_back(GroupWord::generator(kind, k));
    return WordVector::basis(xs, kind);
}

Term hopf(const std::string& text) { return parse_term(text, hopf_signature()); }

TEST(GroupWord, FreeReduction) {
    EXPECT_EQ(fw("x1*x2*x2^-1*x1^-1"), GroupWord(Kind::Free));
    EXPECT_EQ(fw("x1^2*x1^-1").to_string(), "x1");
    EXPECT_EQ(fw("1").to_string(), "1");
    EXPECT_EQ(fw("x1*x2*x1^-1").length(), 3u);
    EXPECT_EQ(GroupWord::free_word({1, 2, -2, 3}), GroupWord::free_word({1, 3}));
    EXPECT_THROW(fw("x0"), ParseError);
    EXPECT_THROW(fw("y1"), ParseError);
}

TEST(GroupWord, ReductionIsConfluentAndInverseCancels) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> letter(-3, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> raw;
        for (int i = 0; i < 10; ++i)
            if (int l = letter(rng); l != 0) raw.push_back(l);
        GroupWord w = GroupWord::free_word(raw);
        EXPECT_EQ(GroupWord::free_word(w.letters()), w);
        for (std::size_t i = 1; i < w.letters().size(); ++i) EXPECT_NE(w.letters()[i], -w.letters()[i - 1]);
        EXPECT_TRUE((w * w.inverse()).is_identity());
        EXPECT_TRUE((w.inverse() * w).is_identity());
    }
}

TEST(GroupWord, Abelian) {
    GroupWord w = aw("x1^-2*x2^3*x1");
    EXPECT_EQ(w.exponent(1), -1);
    EXPECT_EQ(w.exponent(2), 3);
    EXPECT_EQ(w.length(), 4u);
    EXPECT_EQ((w * w.inverse()), GroupWord(Kind::FreeAbelian));
    EXPECT_EQ(aw("x2*x1"), aw("x1*x2"));
    EXPECT_EQ(GroupWord::abelian({0, 0, 0}), GroupWord(Kind::FreeAbelian));
}

TEST(Apply, CoproductOnGenerator) {
    WordVector out = apply(hopf("Delta"), gens(1, Kind::Free));
    EXPECT_EQ(out, WordVector::basis({fw("x1"), fw("x1")}, Kind::Free));
}

TEST(Apply, AntipodeAxiomGivesIdentityWord) {
    WordVector out = apply(hopf("mu . (S # id(1)) . Delta"), gens(1, Kind::Free));
    EXPECT_EQ(out, WordVector::basis({GroupWord(Kind::Free)}, Kind::Free));
}

TEST(Apply, CounitSumsCoefficients) {
    WordVector in(1, Kind::Free);
    in.add({fw("x1")}, 2);
    in.add({fw("x2^-1")}, 3);
    WordVector out = apply(hopf("eps"), in);
    EXPECT_EQ(out.arity(), 0u);
    EXPECT_EQ(out.coefficient({}), Rational(5));
}

TEST(Apply, BraidsMoveBlocks) {
    WordVector in = gens(3, Kind::Free);
    EXPECT_EQ(apply(hopf("tau(1,2)"), in), WordVector::basis({fw("x2"), fw("x3"), fw("x1")}, Kind::Free));
    EXPECT_EQ(apply(hopf("tau_inv(1,2)"), in), WordVector::basis({fw("x3"), fw("x1"), fw("x2")}, Kind::Free));
    EXPECT_EQ(apply(hopf("tau(1,2) . tau_inv(1,2)"), in), in);
}

TEST(Apply, MultiplicationByKind) {
    WordVector free_in = WordVector::basis({fw("x1*x2"), fw("x2^-1")}, Kind::Free);
    EXPECT_EQ(apply(hopf("mu"), free_in), WordVector::basis({fw("x1")}, Kind::Free));
    WordVector ab_in = WordVector::basis({aw("x2"), aw("x1")}, Kind::FreeAbelian);
    EXPECT_EQ(apply(hopf("mu . tau(1,1)"), ab_in), apply(hopf("mu"), ab_in));
    WordVector fr = WordVector::basis({fw("x2"), fw("x1")}, Kind::Free);
    EXPECT_NE(apply(hopf("mu . tau(1,1)"), fr), apply(hopf("mu"), fr));
}

TEST(Apply, ErrorsOnForeignGeneratorOrArity) {
    EXPECT_THROW(apply(Term::generator("sigma", 2, 2), gens(2, Kind::Free)), SignatureError);
    EXPECT_THROW(apply(hopf("mu"), gens(3, Kind::Free)), ArityError);
    WordVector v(2, Kind::Free);
    EXPECT_THROW(v.add({fw("x1")}, 1), ArityError);
}

TEST(Apply, LinearAndFunctorialOnRandomTerms) {
    testing::Rng rng(17);
    const Signature& sig = hopf_signature();
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t dom = testing::pick(rng, 1, 3);
        Term g = testing::random_term(rng, sig, dom, 3);
        Term f = testing::random_term(rng, sig, g.cod(), 3);
        WordTuple a, b;
        for (std::size_t k = 0; k < dom; ++k) {
            a.push_back(GroupWord::free_word({static_cast<int>(k + 1)}));
            b.push_back(GroupWord::free_word({-static_cast<int>(k + 1), 4}));
        }
        WordVector va = WordVector::basis(a, Kind::Free);
        WordVector vb = WordVector::basis(b, Kind::Free);
        WordVector sum = Rational(2) * va + Rational(-3) * vb;
        EXPECT_EQ(apply(g, sum), Rational(2) * apply(g, va) + Rational(-3) * apply(g, vb));
        EXPECT_EQ(apply(compose(f, g), va), apply(f, apply(g, va)));
    }
}

TEST(Independent, Examples) {
    WordVector e1 = WordVector::basis({fw("x1"), fw("x2")}, Kind::Free);
    WordVector e2 = WordVector::basis({fw("x2"), fw("x1")}, Kind::Free);
    EXPECT_TRUE(independent({e1, e2}));
    EXPECT_FALSE(independent({e1, Rational(2) * e1}));
    EXPECT_FALSE(independent({e1, e2, e1 + e2}));
}

TEST(Independent, NormalFormImagesOfDistinctTuples) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> letter(-3, 3);
    std::vector<WordTuple> tuples;
    while (tuples.size() < 10) {
        WordTuple t;
        for (int k = 0; k < 2; ++k) {
            std::vector<int> raw;
            for (int i = 0; i < 3; ++i)
                if (int l = letter(rng); l != 0) raw.push_back(l);
            t.push_back(GroupWord::free_word(raw));
        }
        if (std::find(tuples.begin(), tuples.end(), t) == tuples.end()) tuples.push_back(t);
    }
    std::vector<WordVector> images;
    for (const auto& t : tuples) images.push_back(apply(phi(3, t), gens(3, Kind::Free)));
    EXPECT_TRUE(independent(images));
}

}  // namespace
}  // namespace omegapi
