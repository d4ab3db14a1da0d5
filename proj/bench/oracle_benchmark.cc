// Copyright 2026 The qstackelberg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference against OpenMP kernels for the oracle's two hot loops and
// for a full backward-induction solve. Argument is the grid size.

#include <benchmark/benchmark.h>

#include <cstddef>

#include "qstackelberg/oracle.h"
#include "qstackelberg/oracle_kernels.h"

namespace qstackelberg {
namespace {

const Market& BaseMarket() {
  static const Market market(DuopolyParams{10.0, 2.0, 4.0, 0.5});
  return market;
}

double StepFor(std::size_t count) {
  return BaseMarket().a() / static_cast<double>(count - 1);
}

void BM_ReplyTableSerial(benchmark::State& state) {
  const ClassicalGame game(BaseMarket());
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::FollowerReplyTableSerial(game, count, StepFor(count)));
  }
  state.SetItemsProcessed(state.iterations() * 2 * count * count);
}

void BM_ReplyTableParallel(benchmark::State& state) {
  const ClassicalGame game(BaseMarket());
  const auto count = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        kernels::FollowerReplyTableParallel(game, count, StepFor(count)));
  }
  state.SetItemsProcessed(state.iterations() * 2 * count * count);
}

void BM_GridArgMaxSerial(benchmark::State& state) {
  const QuantumGame game(BaseMarket(), {Entanglement::Finite(0.3),
                                        CorrelationMode::kRaw});
  const auto count = static_cast<std::size_t>(state.range(0));
  const double step = StepFor(count);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::GridArgMaxSerial(
        count, kernels::PayoffScale(game), [&](std::size_t j) {
          return game.LeaderPayoff(static_cast<double>(j) * step, 1.0);
        }));
  }
  state.SetItemsProcessed(state.iterations() * count);
}

void BM_GridArgMaxParallel(benchmark::State& state) {
  const QuantumGame game(BaseMarket(), {Entanglement::Finite(0.3),
                                        CorrelationMode::kRaw});
  const auto count = static_cast<std::size_t>(state.range(0));
  const double step = StepFor(count);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::GridArgMaxParallel(
        count, kernels::PayoffScale(game), [&](std::size_t j) {
          return game.LeaderPayoff(static_cast<double>(j) * step, 1.0);
        }));
  }
  state.SetItemsProcessed(state.iterations() * count);
}

void BM_Solve(benchmark::State& state, Execution execution) {
  const Game game = EntangledGame(BaseMarket());
  const auto count = static_cast<std::size_t>(state.range(0));
  const GridSpec grid{StepFor(count), BaseMarket().a()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(SolveBackwardInduction(game, grid, execution));
  }
}

BENCHMARK(BM_ReplyTableSerial)->Arg(501)->Arg(2001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReplyTableParallel)->Arg(501)->Arg(2001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GridArgMaxSerial)->Arg(10001)->Arg(1000001);
BENCHMARK(BM_GridArgMaxParallel)->Arg(10001)->Arg(1000001);
BENCHMARK_CAPTURE(BM_Solve, serial, Execution::kSerial)
    ->Arg(2001)
    ->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, parallel, Execution::kParallel)
    ->Arg(2001)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qstackelberg

BENCHMARK_MAIN();
