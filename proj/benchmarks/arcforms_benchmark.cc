// Copyright 2026 The arcforms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "arcforms/field.h"
#include "arcforms/geometry.h"
#include "arcforms/linalg.h"
#include "arcforms/sbbt.h"
#include "arcforms/tangents.h"
#include "arcforms/tensor_form.h"

namespace arcforms {
namespace {

// Arguments: q, k.
Arc ArcFor(const benchmark::State& state) {
  return NormalRationalCurve(Field::OfOrder(static_cast<std::uint64_t>(state.range(0))),
                             static_cast<std::size_t>(state.range(1)));
}

void BM_FieldMul(benchmark::State& state) {
  const Field f = Field::OfOrder(static_cast<std::uint64_t>(state.range(0)));
  Element acc = Field::one();
  const Element x = f.At(f.order() - 1);
  for (auto _ : state) {
    acc = f.Mul(acc, x);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FieldMul)->Arg(7)->Arg(64)->Arg(243);

void BM_Det(benchmark::State& state) {
  const Field f = Field::OfOrder(7);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.At((i * 3 + j * j + 1) % 7);
  }
  for (auto _ : state) benchmark::DoNotOptimize(Det(f, m));
}
BENCHMARK(BM_Det)->Arg(4)->Arg(10)->Arg(35);

void BM_TangentSystem(benchmark::State& state) {
  const Arc arc = ArcFor(state);
  for (auto _ : state) benchmark::DoNotOptimize(BuildTangentSystem(arc));
}
BENCHMARK(BM_TangentSystem)->Args({7, 3})->Args({7, 4})->Args({8, 4})->Args({7, 5});

void BM_TensorForm(benchmark::State& state) {
  const TangentSystem ts = BuildTangentSystem(ArcFor(state));
  for (auto _ : state) benchmark::DoNotOptimize(BuildTensorForm(ts));
}
BENCHMARK(BM_TensorForm)->Args({7, 3})->Args({7, 4})->Args({8, 4})->Args({7, 5});

void BM_VerifyTensorForm(benchmark::State& state) {
  const TangentSystem ts = BuildTangentSystem(ArcFor(state));
  const MultiForm form = BuildTensorForm(ts);
  for (auto _ : state) benchmark::DoNotOptimize(VerifyTensorForm(ts, form));
}
BENCHMARK(BM_VerifyTensorForm)->Args({7, 3})->Args({7, 4})->Unit(benchmark::kMillisecond);

void BM_Sbbt(benchmark::State& state) {
  const TangentSystem ts = BuildTangentSystem(ArcFor(state));
  for (auto _ : state) benchmark::DoNotOptimize(BuildSbbt(ts));
}
BENCHMARK(BM_Sbbt)->Args({7, 3})->Args({8, 3})->Args({7, 4});

void BM_VerifySbbt(benchmark::State& state) {
  const TangentSystem ts = BuildTangentSystem(ArcFor(state));
  const SbbtForm sb = BuildSbbt(ts);
  for (auto _ : state) benchmark::DoNotOptimize(VerifySbbt(ts, sb));
}
BENCHMARK(BM_VerifySbbt)->Args({7, 3})->Args({7, 4})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace arcforms

BENCHMARK_MAIN();
