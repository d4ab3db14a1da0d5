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

#ifndef QSTACKELBERG_ORACLE_KERNELS_H_
#define QSTACKELBERG_ORACLE_KERNELS_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "qstackelberg/core.h"
#include "qstackelberg/games.h"

// Exhaustive grid kernels behind the backward-induction oracle. Every kernel
// has a serial reference and an OpenMP version; both evaluate the same
// expressions at the same points and reduce with the same exact comparison,
// so their results are bit-identical.
//
// Objectives are evaluated by grid index; grid point j is always j * step
// (never an accumulated sum).
namespace qstackelberg::kernels {

inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

// Values within this relative distance of the maximum count as ties. Exact
// ties are common (a concave quadratic whose vertex sits halfway between two
// grid points) and round-off would otherwise pick a side at random.
inline constexpr double kRelativeTieTolerance = 1e-11;

inline double TieTolerance(double max_value, double scale) {
  return kRelativeTieTolerance * std::max(std::abs(max_value), scale);
}

struct ArgMax {
  double value = -std::numeric_limits<double>::infinity();
  std::size_t index = kNoIndex;
};

// Pass 1: exact maximum. Pass 2: smallest grid index within the tie tolerance
// of it. Both are exact reductions, so the parallel versions reproduce the
// serial ones bit for bit.
template <class Objective>
double GridMaxSerial(std::size_t count, Objective&& f) {
  double best = -std::numeric_limits<double>::infinity();
  // max is exact, so lane order cannot change the result.
#pragma omp simd reduction(max : best)
  for (std::size_t j = 0; j < count; ++j) {
    const double v = f(j);
    best = v > best ? v : best;
  }
  return best;
}

template <class Objective>
double GridMaxParallel(std::size_t count, Objective&& f) {
  double best = -std::numeric_limits<double>::infinity();
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for simd schedule(static) reduction(max : best)
  for (std::int64_t j = 0; j < n; ++j) {
    const double v = f(j);
    best = v > best ? v : best;
  }
  return best;
}

template <class Objective>
ArgMax FirstAtLeastSerial(std::size_t count, double threshold, Objective&& f) {
  for (std::size_t j = 0; j < count; ++j) {
    const double v = f(j);
    if (v >= threshold) return {v, j};
  }
  return {};
}

template <class Objective>
ArgMax FirstAtLeastParallel(std::size_t count, double threshold,
                            Objective&& f) {
  std::size_t first = kNoIndex;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t j = 0; j < n; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    if (idx < first && f(idx) >= threshold) {
      first = idx;
    }
  }
  if (first == kNoIndex) return {};
  return {f(first), first};
}

// `scale` is the magnitude of the payoff terms (a^2 for this market), used to
// floor the tie tolerance when the maximum itself is near zero.
//
// The serial version caches pass-1 values in a per-thread buffer so pass 2 is
// a plain scan; it is also the row kernel inside the parallel reply table.
template <class Objective>
ArgMax GridArgMaxSerial(std::size_t count, double scale, Objective&& f) {
  thread_local std::vector<double> values;
  values.resize(count);
  double* v = values.data();
  double best = -std::numeric_limits<double>::infinity();
#pragma omp simd reduction(max : best)
  for (std::size_t j = 0; j < count; ++j) {
    v[j] = f(j);
    best = v[j] > best ? v[j] : best;
  }
  const double threshold = best - TieTolerance(best, scale);
  for (std::size_t j = 0; j < count; ++j) {
    if (v[j] >= threshold) return {v[j], j};
  }
  return {};
}

template <class Objective>
ArgMax GridArgMaxParallel(std::size_t count, double scale, Objective&& f) {
  const double best = GridMaxParallel(count, f);
  return FirstAtLeastParallel(count, best - TieTolerance(best, scale), f);
}

template <class Game>
double PayoffScale(const Game& game) {
  const double a = game.market().a();
  return a * a;
}

// Follower grid best reply (as a grid index) for every leader grid point.
struct ReplyTable {
  std::vector<std::uint32_t> high;
  std::vector<std::uint32_t> low;
};

template <class Game>
std::size_t FollowerReplyIndex(const Game& game, FollowerType type, double x_a,
                               std::size_t count, double step) {
  const Seller seller = game.follower(type);
  return GridArgMaxSerial(count, PayoffScale(game), [&](std::size_t j) {
           return game.FollowerPayoff(seller, x_a, static_cast<double>(j) * step);
         }).index;
}

template <class Game>
void FillReplies(const Game& game, std::size_t count, double step,
                 std::size_t i, ReplyTable& table) {
  const double x_a = static_cast<double>(i) * step;
  table.high[i] = static_cast<std::uint32_t>(
      FollowerReplyIndex(game, FollowerType::kHigh, x_a, count, step));
  table.low[i] = static_cast<std::uint32_t>(
      FollowerReplyIndex(game, FollowerType::kLow, x_a, count, step));
}

template <class Game>
ReplyTable FollowerReplyTableSerial(const Game& game, std::size_t count,
                                    double step) {
  ReplyTable table{std::vector<std::uint32_t>(count),
                   std::vector<std::uint32_t>(count)};
  for (std::size_t i = 0; i < count; ++i) {
    FillReplies(game, count, step, i, table);
  }
  return table;
}

template <class Game>
ReplyTable FollowerReplyTableParallel(const Game& game, std::size_t count,
                                      double step) {
  ReplyTable table{std::vector<std::uint32_t>(count),
                   std::vector<std::uint32_t>(count)};
  const auto n = static_cast<std::int64_t>(count);
  // Rows are independent; each writes only its own slot.
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    FillReplies(game, count, step, static_cast<std::size_t>(i), table);
  }
  return table;
}

// Leader's expected payoff at x_a against the tabulated replies at row i.
template <class Game>
double LeaderValue(const Game& game, const ReplyTable& table, double step,
                   std::size_t i) {
  const double theta = game.market().theta();
  const double x_a = static_cast<double>(i) * step;
  const double y_h = static_cast<double>(table.high[i]) * step;
  const double y_l = static_cast<double>(table.low[i]) * step;
  return theta * game.LeaderPayoff(x_a, y_h) +
         (1.0 - theta) * game.LeaderPayoff(x_a, y_l);
}

template <class Game>
ArgMax LeaderArgMaxSerial(const Game& game, const ReplyTable& table,
                          double step) {
  return GridArgMaxSerial(table.high.size(), PayoffScale(game),
                          [&](std::size_t i) {
                            return LeaderValue(game, table, step, i);
                          });
}

template <class Game>
ArgMax LeaderArgMaxParallel(const Game& game, const ReplyTable& table,
                            double step) {
  return GridArgMaxParallel(table.high.size(), PayoffScale(game),
                            [&](std::size_t i) {
                              return LeaderValue(game, table, step, i);
                            });
}

}  // namespace qstackelberg::kernels

#endif  // QSTACKELBERG_ORACLE_KERNELS_H_
