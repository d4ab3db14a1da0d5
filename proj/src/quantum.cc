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

#include "qstackelberg/quantum.h"

#include <cmath>

namespace qstackelberg {

std::string_view ToString(CorrelationMode mode) {
  return mode == CorrelationMode::kRaw ? "raw" : "normalized";
}

Entanglement Entanglement::Finite(double gamma) {
  if (!(std::isfinite(gamma) && gamma >= 0.0)) {
    throw ValidationError("violated constraint: gamma finite and >= 0");
  }
  return Entanglement(gamma, false);
}

double Entanglement::gamma() const {
  if (infinite_) throw DomainError("gamma is infinite");
  return gamma_;
}

CorrelatedQuantities Correlate(double x_a, double x_b,
                               const EntanglementConfig& config) {
  if (config.entanglement.is_infinite()) {
    if (config.mode == CorrelationMode::kRaw) {
      throw DomainError("raw correlation diverges at infinite gamma");
    }
    const double mean = 0.5 * (x_a + x_b);
    return {mean, mean};
  }
  const double gamma = config.entanglement.gamma();
  if (config.mode == CorrelationMode::kRaw) {
    const double ch = std::cosh(gamma), sh = std::sinh(gamma);
    return {x_a * ch + x_b * sh, x_b * ch + x_a * sh};
  }
  // cosh/e^g = (1 + e^{-2g}) / 2 and sinh/e^g = (1 - e^{-2g}) / 2, which stay
  // finite for large gamma.
  const double decay = std::exp(-2.0 * gamma);
  const double self = 0.5 * (1.0 + decay), cross = 0.5 * (1.0 - decay);
  return {x_a * self + x_b * cross, x_b * self + x_a * cross};
}

double QuantumPayoff(const Market& market, const EntanglementConfig& config,
                     Player player, double x_a, double x_b) {
  if (config.entanglement.is_infinite()) {
    throw DomainError("quantum payoff needs finite gamma; use the entangled game");
  }
  const CorrelatedQuantities q = Correlate(x_a, x_b, config);
  const double own = player == Player::kLeader ? q.q_a : q.q_b;
  // q_A + q_B is the quantity that reaches the market in either mode.
  return LinearDemandPayoff(own, q.q_a + q.q_b, market.a(),
                            market.Margin(player), market.Cost(player));
}

double GammaMax() { return 0.5 * std::log(1.0 + std::sqrt(2.0)); }

double QuantumValidityRatio(double gamma) {
  return (1.0 + std::exp(2.0 * gamma)) / (3.0 + std::exp(-2.0 * gamma));
}

RestrictedSolution LoKiangQuantum(const Market& market, double gamma) {
  const EntanglementConfig config{Entanglement::Finite(gamma),
                                  CorrelationMode::kRaw};
  const Margins& m = market.margins();
  const double ch = std::cosh(gamma);
  const double e_minus = std::exp(-gamma);
  const double denom = 1.0 + ch * e_minus;
  // Common shift k_type - shift in both follower quantities.
  const double shift = ch * std::exp(gamma) / denom * m.k;

  RestrictedSolution s;
  s.profile.x_a = ch * ch * e_minus / denom * m.k;
  s.profile.x_bl = 0.5 * e_minus * (m.k_l - shift);
  s.profile.x_bh = 0.5 * e_minus * (m.k_h - shift);

  const double theta = market.theta();
  const auto pay = [&](Player p, double x_b) {
    return QuantumPayoff(market, config, p, s.profile.x_a, x_b);
  };
  const double u_a = theta * pay(Player::kLeader, s.profile.x_bh) +
                     (1.0 - theta) * pay(Player::kLeader, s.profile.x_bl);
  s.payoffs = MakeReport(theta, u_a, pay(Player::kFollowerHigh, s.profile.x_bh),
                         pay(Player::kFollowerLow, s.profile.x_bl));
  s.valid = gamma <= GammaMax() && m.k_l >= QuantumValidityRatio(gamma) * m.k;
  return s;
}

double CournotReference(double a, double c, double gamma,
                        CorrelationMode mode) {
  if (!(std::isfinite(a) && std::isfinite(c) && c >= 0.0 && a > c)) {
    throw ValidationError("violated constraint: a > c >= 0");
  }
  const Entanglement e = Entanglement::Finite(gamma);
  const double normalized = (a - c) / (3.0 + std::tanh(e.gamma()));
  if (mode == CorrelationMode::kNormalized) return normalized;
  return (a - c) * std::cosh(gamma) / (1.0 + 2.0 * std::exp(2.0 * gamma));
}

}  // namespace qstackelberg
