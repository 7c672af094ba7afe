// Copyright 2026 The eisencf Authors
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

#include "eisencf/approximation.hpp"
#include "eisencf/nearest.hpp"
#include "eisencf/rival_oracle.hpp"
#include "eisencf/sampling.hpp"

namespace {

using namespace eisencf;
constexpr auto kE = RingId::kEisenstein;

void BM_NearestCertified(benchmark::State& state) {
  const ComplexAP z = random_input<kE>(1, 0).at(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nearest<kE>(z));
}
BENCHMARK(BM_NearestCertified)->Arg(256)->Arg(1024);

void BM_NearestExact(benchmark::State& state) {
  const EisensteinRational z(EisensteinInt(123457, -98765), EisensteinInt(311, 87));
  for (auto _ : state) benchmark::DoNotOptimize(nearest<kE>(z));
}
BENCHMARK(BM_NearestExact);

void BM_ExpandCertified(benchmark::State& state) {
  const auto src = random_input<kE>(1, 1).source();
  ExpandOptions opts;
  opts.max_steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_with_retry<kE>(src, opts));
}
BENCHMARK(BM_ExpandCertified)->Arg(16)->Arg(64);

void BM_Shells(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(LatticeShells<kE>(state.range(0)));
}
BENCHMARK(BM_Shells)->Arg(2500)->Arg(22500);

void BM_OracleMinimum(benchmark::State& state) {
  const LatticeShells<kE> shells(22500);
  const ComplexAP z = random_input<kE>(1, 2).at(256);
  const RivalOracle<kE> oracle(z, shells, RivalWeight::kPlain);
  for (auto _ : state) benchmark::DoNotOptimize(oracle.minimum(state.range(0)));
}
BENCHMARK(BM_OracleMinimum)->Arg(2500)->Arg(22500);

void BM_VerifyAll(benchmark::State& state) {
  const LatticeShells<kE> shells(22500);
  const auto src = random_input<kE>(1, 3).source();
  VerifyConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(verify_all<kE>(src, cfg, &shells));
}
BENCHMARK(BM_VerifyAll)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
