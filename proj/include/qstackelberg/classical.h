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

#ifndef QSTACKELBERG_CLASSICAL_H_
#define QSTACKELBERG_CLASSICAL_H_

#include <string_view>

#include "qstackelberg/core.h"

// Closed-form subgame perfect equilibrium of the classical game, valid for
// every k_H > k_L > 0 and theta in [0, 1].
namespace qstackelberg {

struct FollowerReply {
  double x_bh = 0.0;
  double x_bl = 0.0;
};

struct ClassicalSolution {
  EquilibriumProfile profile;
  PayoffReport payoffs;
  Regime regime = Regime::kInterior;
  double mover_advantage = 0.0;  // u_A - u_B; positive favours the leader
};

// A published solution that only holds on part of the parameter space. The
// profile is reported even when `valid` is false so callers can see where it
// breaks (negative quantities, lost optimality).
struct RestrictedSolution {
  EquilibriumProfile profile;
  PayoffReport payoffs;
  bool valid = false;
};

enum class MoverAdvantage { kFirst, kSecond, kTie };

std::string_view ToString(MoverAdvantage advantage);

// Follower best replies, x_A in [0, a]: (k_type - x_A) / 2, clamped at zero
// once x_A exceeds k_type.
FollowerReply FollowerBestReply(const Margins& margins, double x_a);

// u_A(x_A, x*_BH(x_A), x*_BL(x_A)) as a three-piece function of x_A.
double LeaderInducedPayoff(const Margins& margins, double theta, double x_a);

// Maximizer of LeaderInducedPayoff over [0, a], per regime.
double LeaderBestReply(const Margins& margins, double theta);

// Equilibrium payoffs from the per-regime closed-form tables.
PayoffReport ClassicalClosedFormPayoffs(const Margins& margins, double theta);

ClassicalSolution SolveSpe(const Market& market);

// Interior-only formulas, valid iff k_L >= k / 2.
RestrictedSolution LoKiangClassical(const Market& market);

MoverAdvantage MoverAdvantageSign(const Market& market);

}  // namespace qstackelberg

#endif  // QSTACKELBERG_CLASSICAL_H_
