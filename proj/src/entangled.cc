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

#include "qstackelberg/entangled.h"

namespace qstackelberg {

double EntangledPayoff(const Market& market, Player player, double x_a,
                       double x_b) {
  const double total = x_a + x_b;
  return LinearDemandPayoff(0.5 * total, total, market.a(),
                            market.Margin(player), market.Cost(player));
}

FollowerReply FollowerBestReplyEntangled(const Margins& margins, double x_a) {
  FollowerReply r;
  r.x_bh = x_a <= 0.5 * margins.k_h ? 0.5 * margins.k_h - x_a : 0.0;
  r.x_bl = x_a <= 0.5 * margins.k_l ? 0.5 * margins.k_l - x_a : 0.0;
  return r;
}

double EntangledLeaderInducedPayoff(const Market& market, double x_a) {
  const FollowerReply r = FollowerBestReplyEntangled(market.margins(), x_a);
  const double theta = market.theta();
  return theta * EntangledPayoff(market, Player::kLeader, x_a, r.x_bh) +
         (1.0 - theta) * EntangledPayoff(market, Player::kLeader, x_a, r.x_bl);
}

EntangledSolution SolveSpeEntangled(const Market& market) {
  const Margins& m = market.margins();
  const double theta = market.theta();
  EntangledSolution s;
  s.profile = {0.5 * m.k, 0.5 * (m.k_h - m.k), 0.0};

  const double spread = m.k - m.k_h;
  const double gap = m.k_h - m.k_l;
  const double u_a = (m.k * m.k - spread * spread * theta) / 8.0;
  const double u_bh = m.k_h * m.k_h / 8.0;
  const double u_bl = (m.k_l * m.k_l - gap * gap * theta * theta) / 8.0;
  s.payoffs = MakeReport(theta, u_a, u_bh, u_bl);
  // Same value as u_b - u_a, but the factored form is exactly zero at the
  // theta endpoints and never rounds below zero.
  s.advantage = SecondMoverAdvantage(market);
  return s;
}

double SecondMoverAdvantage(const Market& market) {
  const Margins& m = market.margins();
  const double theta = market.theta();
  const double gap = m.k_h - m.k_l;
  return 0.25 * gap * gap * (1.0 - theta) * (1.0 - theta) * theta;
}

}  // namespace qstackelberg
