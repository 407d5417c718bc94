// Copyright 2026 The lorflats Authors.
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

#include <random>
#include <vector>

#include "lorflats/basis_poly.hpp"
#include "lorflats/chow.hpp"
#include "lorflats/lorentzian.hpp"
#include "lorflats/matroid.hpp"

namespace {

using namespace lorflats;

Matroid complete_graph(int vertices) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < vertices; ++a) {
    for (int b = a + 1; b < vertices; ++b) edges.emplace_back(a, b);
  }
  return graphic_matroid(edges);
}

void BM_FlatsLattice(benchmark::State& state) {
  const Matroid m = complete_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    FlatLattice lat = flats_lattice(m);
    benchmark::DoNotOptimize(lat);
  }
}
BENCHMARK(BM_FlatsLattice)->Arg(4)->Arg(5);

// Fresh cache per iteration so the whole recursion is timed.
void BM_BuildPol(benchmark::State& state) {
  const Matroid m = state.range(0) == 0 ? fano_matroid() : complete_graph(static_cast<int>(state.range(0)));
  const FlatLattice lat = flats_lattice(m);
  const Subset top = Subset::full(m.ground().size());
  for (auto _ : state) {
    PolCache cache(lat.poset());
    benchmark::DoNotOptimize(cache.pol(Subset(), top));
  }
}
BENCHMARK(BM_BuildPol)->Arg(0)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Inertia(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 4);
  SymMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a.set(i, j, ratio(num(rng), den(rng)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(inertia(a));
}
BENCHMARK(BM_Inertia)->Arg(4)->Arg(8)->Arg(12);

void BM_CertifySampled(benchmark::State& state) {
  const FlatLattice lat = flats_lattice(complete_graph(4));
  PolCache cache(lat.poset());
  const Subset top = Subset::full(6);
  cache.pol(Subset(), top);
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_sampled(cache, Subset(), top, static_cast<int>(state.range(0)), 1));
  }
}
BENCHMARK(BM_CertifySampled)->Arg(5)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_ChowRing(benchmark::State& state) {
  const Matroid m = state.range(0) == 0 ? fano_matroid() : complete_graph(4);
  const FlatLattice lat = flats_lattice(m);
  const Subset top = Subset::full(m.ground().size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(ChowRing::build(lat.poset(), Subset(), top));
  }
}
BENCHMARK(BM_ChowRing)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
