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

#include "qstackelberg/classical.h"

#include <cmath>

namespace qstackelberg {
namespace {

// Vertex of the middle piece, which lies inside (k_L, k_H) in the Corner
// regime.
double CornerLeaderQuantity(const Margins& m, double theta) {
  return (2.0 * m.k_l * (1.0 - theta) + theta * m.k_h) / (2.0 * (2.0 - theta));
}

}  // namespace

std::string_view ToString(MoverAdvantage advantage) {
  switch (advantage) {
    case MoverAdvantage::kFirst:
      return "first";
    case MoverAdvantage::kSecond:
      return "second";
    case MoverAdvantage::kTie:
      return "tie";
  }
  return "unknown";
}

FollowerReply FollowerBestReply(const Margins& margins, double x_a) {
  FollowerReply r;
  r.x_bh = x_a <= margins.k_h ? 0.5 * (margins.k_h - x_a) : 0.0;
  r.x_bl = x_a <= margins.k_l ? 0.5 * (margins.k_l - x_a) : 0.0;
  return r;
}

double LeaderInducedPayoff(const Margins& m, double theta, double x_a) {
  if (x_a <= m.k_l) return 0.5 * (m.k - x_a) * x_a;
  if (x_a <= m.k_h) {
    return 0.5 * x_a * (2.0 * m.k - theta * m.k_h + (theta - 2.0) * x_a);
  }
  return x_a * (m.k - x_a);
}

double LeaderBestReply(const Margins& margins, double theta) {
  switch (ClassifyRegime(margins, theta)) {
    case Regime::kInterior:
      return 0.5 * margins.k;
    case Regime::kBoundary:
      return margins.k_l;
    case Regime::kCorner:
      return CornerLeaderQuantity(margins, theta);
  }
  return 0.0;
}

PayoffReport ClassicalClosedFormPayoffs(const Margins& m, double theta) {
  const double k = m.k, kh = m.k_h, kl = m.k_l;
  switch (ClassifyRegime(m, theta)) {
    case Regime::kInterior: {
      const double dh = k - 2.0 * kh;
      const double dl = k - 2.0 * kl;
      return MakeReport(theta, k * k / 8.0, dh * dh / 16.0, dl * dl / 16.0);
    }
    case Regime::kBoundary:
      return MakeReport(theta, 0.5 * theta * (kh - kl) * kl,
                        0.25 * (kh - kl) * (kh - kl), 0.0);
    case Regime::kCorner: {
      const double lead = -2.0 * kl * (theta - 1.0) + theta * kh;
      const double foll = k + kl + 2.0 * kh * (theta - 2.0) - theta * kl;
      return MakeReport(theta, lead * lead / (8.0 * (2.0 - theta)),
                        foll * foll / (16.0 * (theta - 2.0) * (theta - 2.0)),
                        0.0);
    }
  }
  return {};
}

ClassicalSolution SolveSpe(const Market& market) {
  const Margins& m = market.margins();
  const double theta = market.theta();
  ClassicalSolution s;
  s.regime = ClassifyRegime(m, theta);
  s.profile.x_a = LeaderBestReply(m, theta);
  const FollowerReply reply = FollowerBestReply(m, s.profile.x_a);
  s.profile.x_bh = reply.x_bh;
  s.profile.x_bl = reply.x_bl;
  s.payoffs = ClassicalClosedFormPayoffs(m, theta);
  s.mover_advantage = s.payoffs.u_a - s.payoffs.u_b;
  return s;
}

RestrictedSolution LoKiangClassical(const Market& market) {
  const Margins& m = market.margins();
  const double half_k = 0.5 * m.k;
  RestrictedSolution s;
  s.profile = {half_k, 0.5 * (m.k_h - half_k), 0.5 * (m.k_l - half_k)};
  s.payoffs = MakeReport(market.theta(), m.k * m.k / 8.0,
                         0.25 * (m.k_h - half_k) * (m.k_h - half_k),
                         0.25 * (m.k_l - half_k) * (m.k_l - half_k));
  s.valid = m.k_l >= half_k;
  return s;
}

MoverAdvantage MoverAdvantageSign(const Market& market) {
  const double diff = SolveSpe(market).mover_advantage;
  if (std::abs(diff) <= kClosedFormTolerance) return MoverAdvantage::kTie;
  return diff > 0.0 ? MoverAdvantage::kFirst : MoverAdvantage::kSecond;
}

}  // namespace qstackelberg
