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

#ifndef QSTACKELBERG_ORACLE_H_
#define QSTACKELBERG_ORACLE_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qstackelberg/core.h"
#include "qstackelberg/games.h"
#include "qstackelberg/quantum.h"

// Brute-force verification by discretized backward induction over the tree
// chance -> leader -> follower. Nothing here uses derivatives or closed
// forms: every best reply is an exhaustive search over the action grid, so
// the oracle stays an independent check on the calculus-based solvers.
namespace qstackelberg {

struct GridSpec {
  double step = 0.0;   // h > 0
  double upper = 0.0;  // largest action considered
};

// Throws ValidationError unless 0 < step <= upper (both finite).
void Validate(const GridSpec& grid);

// Number of grid points {0, h, 2h, ...} not exceeding upper.
std::size_t GridSize(const GridSpec& grid);

// h = a / 10000 over [0, a].
GridSpec DefaultGrid(const Market& market);

enum class Execution { kSerial, kParallel };

// Largest single-deviation gain found per mover role; all entries >= 0.
struct DeviationGains {
  double leader = 0.0;
  double follower_high = 0.0;
  double follower_low = 0.0;

  double Worst() const;
};

struct OracleResult {
  EquilibriumProfile profile;  // grid points
  double leader_value = 0.0;
  DeviationGains certificate;
};

struct Certification {
  bool passed = false;
  // Every profile component lies in [0, upper].
  bool feasible = false;
  // Distance of the furthest component outside [0, upper]; zero if feasible.
  double infeasibility = 0.0;
  DeviationGains gains;
  // max(gains.Worst(), infeasibility).
  double worst_deviation = 0.0;
};

// Grid maximizer of a one-argument objective; ties go to the smallest point.
double GridBestReply(const std::function<double(double)>& objective,
                     const GridSpec& grid);

// For each leader grid point, both follower types best-reply on the grid;
// the leader then maximizes the theta-expectation over the grid.
OracleResult SolveBackwardInduction(const Game& game, const GridSpec& grid,
                                    Execution execution = Execution::kParallel);

// Passes iff the profile is feasible, no grid deviation of either follower
// type at the profile's x_A gains more than epsilon, and no grid x_A (against
// grid-resolved follower replies) beats the profile's x_A (against the same
// replies re-solved at x_A) by more than epsilon.
Certification CertifyEpsilonSpe(const Game& game,
                                const EquilibriumProfile& profile,
                                const GridSpec& grid, double epsilon,
                                Execution execution = Execution::kParallel);

struct GammaExploration {
  double gamma = 0.0;
  OracleResult result;
};

// Backward induction of the finite-gamma quantum game for each gamma, in the
// order given.
std::vector<GammaExploration> ExploreGamma(
    const Market& market, std::span<const double> gammas, const GridSpec& grid,
    CorrelationMode mode = CorrelationMode::kRaw,
    Execution execution = Execution::kParallel);

}  // namespace qstackelberg

#endif  // QSTACKELBERG_ORACLE_H_
