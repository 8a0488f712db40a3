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

#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "omegapi/builtin_algebras.hpp"
#include "omegapi/codim.hpp"
#include "omegapi/evaluate.hpp"
#include "omegapi/normal_forms.hpp"
#include "omegapi/span_basis.hpp"

namespace {

using namespace omegapi;

void BM_CodimKC2(benchmark::State& state) {
    const FiniteOmegaAlgebra alg = kc2_hopf();
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(codim(alg, n, n).value);
}
BENCHMARK(BM_CodimKC2)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CodimYDSigma(benchmark::State& state) {
    const FiniteOmegaAlgebra alg = yd_kc2_sigma();
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(codim(alg, n, n).value);
}
BENCHMARK(BM_CodimYDSigma)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_EvaluateNormalForm(benchmark::State& state) {
    const FiniteOmegaAlgebra alg = group_hopf(symmetric_group(3));
    const Term t = phi(3, {GroupWord::parse("x1*x2*x1^-1", GroupWord::Kind::Free),
                           GroupWord::parse("x3*x2^-1", GroupWord::Kind::Free)});
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(alg, t).nonzeros());
}
BENCHMARK(BM_EvaluateNormalForm)->Unit(benchmark::kMicrosecond);

template <class Field>
void span_insert(benchmark::State& state, Field field) {
    const std::uint64_t ambient = 4096;
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint64_t> index(0, ambient - 1);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::vector<SparseVector<typename Field::value_type>> vectors;
    for (int k = 0; k < 512; ++k) {
        std::map<std::uint64_t, typename Field::value_type> v;
        for (int e = 0; e < 16; ++e)
            if (int c = coef(rng); c != 0) v[index(rng)] = field.from(Rational(c));
        vectors.emplace_back(v.begin(), v.end());
    }
    for (auto _ : state) {
        SpanBasis<Field> span(ambient, field);
        for (const auto& v : vectors) span.insert(v);
        benchmark::DoNotOptimize(span.rank());
    }
}

void BM_SpanInsertRational(benchmark::State& state) { span_insert(state, RationalField{}); }
void BM_SpanInsertPrime(benchmark::State& state) { span_insert(state, PrimeField(1000003)); }
BENCHMARK(BM_SpanInsertRational)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpanInsertPrime)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
