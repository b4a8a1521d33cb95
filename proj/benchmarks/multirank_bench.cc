// Copyright 2026 The mlsum Authors.
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

#include "mlsum/multirank.h"

namespace {

std::vector<mlsum::DenseMatrix> random_layers(std::size_t n, std::size_t m) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  std::vector<mlsum::DenseMatrix> layers;
  for (std::size_t a = 0; a < m; ++a) {
    mlsum::DenseMatrix l = mlsum::DenseMatrix::Square(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (w(rng) < 0.3) l(i, j) = l(j, i) = w(rng);
    layers.push_back(std::move(l));
  }
  return layers;
}

void BM_MultiRank(benchmark::State& state) {
  const auto layers = random_layers(static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) {
    auto r = mlsum::multirank(layers);
    benchmark::DoNotOptimize(r.x.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MultiRank)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_PageRank(benchmark::State& state) {
  const auto layers = random_layers(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) {
    auto x = mlsum::pagerank(layers.front());
    benchmark::DoNotOptimize(x.data());
  }
}
BENCHMARK(BM_PageRank)->RangeMultiplier(2)->Range(16, 512);

}  // namespace
