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

#include "qstackelberg/oracle.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "qstackelberg/oracle_kernels.h"

namespace qstackelberg {
namespace {

using kernels::ReplyTable;

template <class G>
ReplyTable BuildReplies(const G& game, std::size_t count, double step,
                        Execution execution) {
  return execution == Execution::kParallel
             ? kernels::FollowerReplyTableParallel(game, count, step)
             : kernels::FollowerReplyTableSerial(game, count, step);
}

template <class G>
kernels::ArgMax LeaderArgMax(const G& game, const ReplyTable& table,
                             double step, Execution execution) {
  return execution == Execution::kParallel
             ? kernels::LeaderArgMaxParallel(game, table, step)
             : kernels::LeaderArgMaxSerial(game, table, step);
}

// Best grid reply of one follower type to an arbitrary (possibly off-grid)
// leader quantity.
template <class G>
kernels::ArgMax FollowerArgMax(const G& game, FollowerType type, double x_a,
                               std::size_t count, double step) {
  return kernels::GridArgMaxSerial(
      count, kernels::PayoffScale(game), [&](std::size_t j) {
        return game.FollowerPayoff(type, x_a, static_cast<double>(j) * step);
      });
}

double Infeasibility(const EquilibriumProfile& p, double upper) {
  double worst = 0.0;
  for (double x : {p.x_a, p.x_bh, p.x_bl}) {
    if (!std::isfinite(x)) return std::numeric_limits<double>::infinity();
    worst = std::max({worst, -x, x - upper});
  }
  return worst;
}

// Shared by certification and by the oracle's self-certificate so the reply
// table is built once.
template <class G>
Certification CertifyWithTable(const G& game, const EquilibriumProfile& profile,
                               const GridSpec& grid, std::size_t count,
                               double epsilon, const ReplyTable& table,
                               Execution execution) {
  const double step = grid.step;
  const double theta = game.market().theta();
  Certification c;

  // Round-off in closed forms may land a hair outside the box.
  const double slack = 1e-12 * std::max(1.0, grid.upper);
  c.infeasibility = Infeasibility(profile, grid.upper);
  c.feasible = c.infeasibility <= slack;
  if (c.infeasibility <= slack) c.infeasibility = 0.0;

  const auto follower_gain = [&](FollowerType type, double x_b) {
    const double best = FollowerArgMax(game, type, profile.x_a, count, step).value;
    return std::max(0.0, best - game.FollowerPayoff(type, profile.x_a, x_b));
  };
  c.gains.follower_high = follower_gain(FollowerType::kHigh, profile.x_bh);
  c.gains.follower_low = follower_gain(FollowerType::kLow, profile.x_bl);

  const double best_leader =
      LeaderArgMax(game, table, step, execution).value;
  const double reply_h = static_cast<double>(
      FollowerArgMax(game, FollowerType::kHigh, profile.x_a, count, step).index) * step;
  const double reply_l = static_cast<double>(
      FollowerArgMax(game, FollowerType::kLow, profile.x_a, count, step).index) * step;
  const double at_profile = theta * game.LeaderPayoff(profile.x_a, reply_h) +
                            (1.0 - theta) * game.LeaderPayoff(profile.x_a, reply_l);
  c.gains.leader = std::max(0.0, best_leader - at_profile);

  c.worst_deviation = std::max(c.gains.Worst(), c.infeasibility);
  c.passed = c.feasible && c.gains.Worst() <= epsilon;
  return c;
}

}  // namespace

void Validate(const GridSpec& grid) {
  if (!(std::isfinite(grid.step) && std::isfinite(grid.upper) &&
        grid.step > 0.0 && grid.step <= grid.upper)) {
    throw ValidationError("violated constraint: 0 < grid step <= grid upper");
  }
  if (grid.upper / grid.step >
      static_cast<double>(std::numeric_limits<std::uint32_t>::max() - 1)) {
    throw ValidationError("violated constraint: grid has too many points");
  }
}

std::size_t GridSize(const GridSpec& grid) {
  Validate(grid);
  // Relative slack keeps `upper` itself on the grid when upper / step is an
  // integer up to rounding.
  return static_cast<std::size_t>(std::floor(grid.upper / grid.step * (1.0 + 1e-12))) + 1;
}

GridSpec DefaultGrid(const Market& market) {
  return GridSpec{market.a() / 10000.0, market.a()};
}

double DeviationGains::Worst() const {
  return std::max({leader, follower_high, follower_low});
}

double GridBestReply(const std::function<double(double)>& objective,
                     const GridSpec& grid) {
  const std::size_t count = GridSize(grid);
  // No market here, so the tolerance floor is relative to the maximum only.
  const auto best = kernels::GridArgMaxSerial(count, 0.0, [&](std::size_t j) {
    return objective(static_cast<double>(j) * grid.step);
  });
  return static_cast<double>(best.index) * grid.step;
}

OracleResult SolveBackwardInduction(const Game& game, const GridSpec& grid,
                                    Execution execution) {
  const std::size_t count = GridSize(grid);
  return std::visit(
      [&](const auto& g) {
        const ReplyTable table = BuildReplies(g, count, grid.step, execution);
        const kernels::ArgMax leader = LeaderArgMax(g, table, grid.step, execution);
        OracleResult r;
        r.profile.x_a = static_cast<double>(leader.index) * grid.step;
        r.profile.x_bh = static_cast<double>(table.high[leader.index]) * grid.step;
        r.profile.x_bl = static_cast<double>(table.low[leader.index]) * grid.step;
        r.leader_value = leader.value;
        r.certificate = CertifyWithTable(g, r.profile, grid, count, 0.0, table,
                                         execution)
                            .gains;
        return r;
      },
      game);
}

Certification CertifyEpsilonSpe(const Game& game,
                                const EquilibriumProfile& profile,
                                const GridSpec& grid, double epsilon,
                                Execution execution) {
  if (!(epsilon >= 0.0)) {
    throw ValidationError("violated constraint: epsilon >= 0");
  }
  const std::size_t count = GridSize(grid);
  return std::visit(
      [&](const auto& g) {
        const ReplyTable table = BuildReplies(g, count, grid.step, execution);
        return CertifyWithTable(g, profile, grid, count, epsilon, table,
                                execution);
      },
      game);
}

std::vector<GammaExploration> ExploreGamma(const Market& market,
                                           std::span<const double> gammas,
                                           const GridSpec& grid,
                                           CorrelationMode mode,
                                           Execution execution) {
  std::vector<GammaExploration> out;
  out.reserve(gammas.size());
  for (double gamma : gammas) {
    const QuantumGame game(market, {Entanglement::Finite(gamma), mode});
    out.push_back({gamma, SolveBackwardInduction(Game{game}, grid, execution)});
  }
  return out;
}

}  // namespace qstackelberg
