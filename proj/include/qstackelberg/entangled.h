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

#ifndef QSTACKELBERG_ENTANGLED_H_
#define QSTACKELBERG_ENTANGLED_H_

#include "qstackelberg/classical.h"
#include "qstackelberg/core.h"

// The maximally correlated game: both players receive (x_A + x_B) / 2, so
// every payoff depends on the leader's and follower's quantities only through
// their sum.
namespace qstackelberg {

struct EntangledSolution {
  EquilibriumProfile profile;
  PayoffReport payoffs;
  double advantage = 0.0;  // u_B - u_A, never negative
};

// ((x_A + x_B) / 2) (margin - x_A - x_B) while x_A + x_B <= a, otherwise
// -cost (x_A + x_B) / 2.
double EntangledPayoff(const Market& market, Player player, double x_a,
                       double x_b);

// k_type / 2 - x_A, clamped at zero once x_A exceeds k_type / 2.
FollowerReply FollowerBestReplyEntangled(const Margins& margins, double x_a);

// Leader's expected payoff against the follower best replies.
double EntangledLeaderInducedPayoff(const Market& market, double x_a);

// (k / 2, (k_H - k) / 2, 0) with closed-form payoffs. At theta in {0, 1} the
// leader is indifferent on a segment and this profile is the canonical pick.
EntangledSolution SolveSpeEntangled(const Market& market);

// (k_H - k_L)^2 (1 - theta)^2 theta / 4.
double SecondMoverAdvantage(const Market& market);

}  // namespace qstackelberg

#endif  // QSTACKELBERG_ENTANGLED_H_
