// Copyright 2026 The hyparr Authors.
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

#include "hyparr/arrangements.hpp"
#include "hyparr/cycles.hpp"
#include "hyparr/fixtures.hpp"
#include "hyparr/normal_systems.hpp"
#include "support/random_objects.hpp"

namespace hyparr {
namespace {

void BM_FindIsomorphismsFixtures(benchmark::State& state) {
  const auto u1 = load_fixture("U1").normal_system;
  const auto u2 = load_fixture("U2").normal_system;
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphisms(u1, u2));
}
BENCHMARK(BM_FindIsomorphismsFixtures)->Unit(benchmark::kMillisecond);

void BM_OracleFixtures(benchmark::State& state) {
  const auto u1 = load_fixture("U1").normal_system;
  const auto u2 = load_fixture("U2").normal_system;
  for (auto _ : state) benchmark::DoNotOptimize(oracle_isomorphisms(u1, u2));
}
BENCHMARK(BM_OracleFixtures)->Unit(benchmark::kMillisecond);

// Isomorphic pair of size n in dimension 3: a system and a linear image.
void BM_FindIsomorphismsImage(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  testing::Random rnd(n);
  const auto ns = testing::random_normal_system(rnd, n, 3, 12);
  const auto image = testing::linear_image(rnd, ns, testing::random_invertible(rnd, 3),
                                           rnd.permutation(n), rnd.signs(n));
  for (auto _ : state) benchmark::DoNotOptimize(find_isomorphisms(ns, image));
}
BENCHMARK(BM_FindIsomorphismsImage)->DenseRange(5, 9)->Unit(benchmark::kMillisecond);

void BM_OracleImage(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  testing::Random rnd(n);
  const auto ns = testing::random_normal_system(rnd, n, 3, 12);
  const auto image = testing::linear_image(rnd, ns, testing::random_invertible(rnd, 3),
                                           rnd.permutation(n), rnd.signs(n));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_isomorphisms(ns, image));
}
BENCHMARK(BM_OracleImage)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_CycleInvariants(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  testing::Random rnd(n);
  const auto arr = testing::random_sphere_arrangement(rnd, n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(all_cycle_invariants(arr));
}
BENCHMARK(BM_CycleInvariants)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_EnumerateRegions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  testing::Random rnd(n * 10 + m);
  const auto ha = testing::random_arrangement(rnd, n, m);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_regions(ha));
}
BENCHMARK(BM_EnumerateRegions)
    ->ArgsProduct({{4, 6, 8}, {2, 3}})
    ->Unit(benchmark::kMillisecond);

void BM_ConeFacets(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  testing::Random rnd(n);
  const auto ha = testing::random_arrangement(rnd, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(cone_facets(ha));
}
BENCHMARK(BM_ConeFacets)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace hyparr

BENCHMARK_MAIN();
