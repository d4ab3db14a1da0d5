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

#include "qstackelberg/core.h"

#include <cmath>
#include <string>

namespace qstackelberg {
namespace {

void Require(bool ok, const char* constraint) {
  if (!ok) throw ValidationError(std::string("violated constraint: ") + constraint);
}

}  // namespace

void ValidateTheta(double theta) {
  // Written so that NaN fails.
  Require(theta >= 0.0 && theta <= 1.0, "0 <= theta <= 1");
}

void Validate(const DuopolyParams& params) {
  Require(std::isfinite(params.a) && params.a > 0.0, "a > 0");
  Require(std::isfinite(params.c_h) && params.c_h >= 0.0, "c_h >= 0");
  Require(std::isfinite(params.c_l) && params.c_h < params.c_l,
          "c_h < c_l (k_H > k_L)");
  Require(params.c_l < params.a, "c_l < a (k_L > 0)");
  ValidateTheta(params.theta);
}

void Validate(const Margins& margins) {
  Require(std::isfinite(margins.k_h) && margins.k_h > margins.k_l,
          "k_H > k_L");
  Require(margins.k_l > 0.0, "k_L > 0");
  // k is a convex combination; allow rounding slack of a few ulps.
  const double slack = 4e-15 * margins.k_h;
  Require(margins.k >= margins.k_l - slack && margins.k <= margins.k_h + slack,
          "k_L <= k <= k_H");
}

Margins DeriveMargins(const DuopolyParams& params) {
  Validate(params);
  Margins m;
  m.k_h = params.a - params.c_h;
  m.k_l = params.a - params.c_l;
  m.k = params.theta * m.k_h + (1.0 - params.theta) * m.k_l;
  return m;
}

std::string_view ToString(Regime regime) {
  switch (regime) {
    case Regime::kInterior:
      return "interior";
    case Regime::kBoundary:
      return "boundary";
    case Regime::kCorner:
      return "corner";
  }
  return "unknown";
}

Regime ClassifyRegime(const Margins& margins, double theta) {
  Validate(margins);
  ValidateTheta(theta);
  const double upper = theta * margins.k_h / (1.0 + theta);
  const double lower = theta * margins.k_h / 2.0;
  if (margins.k_l > upper) return Regime::kInterior;
  if (margins.k_l < lower) return Regime::kCorner;
  return Regime::kBoundary;
}

Player AsPlayer(FollowerType type) {
  return type == FollowerType::kHigh ? Player::kFollowerHigh
                                     : Player::kFollowerLow;
}

Market::Market(const DuopolyParams& params)
    : params_(params), margins_(DeriveMargins(params)) {}

double Market::Margin(Player player) const {
  switch (player) {
    case Player::kLeader:
      return margins_.k;
    case Player::kFollowerHigh:
      return margins_.k_h;
    case Player::kFollowerLow:
      return margins_.k_l;
  }
  return 0.0;
}

double Market::Cost(Player player) const {
  switch (player) {
    case Player::kLeader:
      return LeaderCost();
    case Player::kFollowerHigh:
      return params_.c_h;
    case Player::kFollowerLow:
      return params_.c_l;
  }
  return 0.0;
}

double PayoffLeader(const Market& market, double x_a, double x_b) {
  return LinearDemandPayoff(x_a, x_a + x_b, market.a(), market.margins().k,
                            market.LeaderCost());
}

double PayoffFollower(const Market& market, FollowerType type, double x_a,
                      double x_b) {
  const Player p = AsPlayer(type);
  return LinearDemandPayoff(x_b, x_a + x_b, market.a(), market.Margin(p),
                            market.Cost(p));
}

PayoffReport MakeReport(double theta, double u_a, double u_bh, double u_bl) {
  return PayoffReport{u_a, u_bh, u_bl, theta * u_bh + (1.0 - theta) * u_bl};
}

PayoffReport ExpectedPayoffs(const Market& market,
                             const EquilibriumProfile& profile) {
  const double theta = market.theta();
  const double u_a = theta * PayoffLeader(market, profile.x_a, profile.x_bh) +
                     (1.0 - theta) *
                         PayoffLeader(market, profile.x_a, profile.x_bl);
  return MakeReport(
      theta, u_a,
      PayoffFollower(market, FollowerType::kHigh, profile.x_a, profile.x_bh),
      PayoffFollower(market, FollowerType::kLow, profile.x_a, profile.x_bl));
}

}  // namespace qstackelberg
