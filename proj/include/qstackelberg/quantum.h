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

#ifndef QSTACKELBERG_QUANTUM_H_
#define QSTACKELBERG_QUANTUM_H_

#include <string_view>

#include "qstackelberg/classical.h"
#include "qstackelberg/core.h"

// Li-Du-Massar correlated quantities and the payoffs built on them. Only the
// measured expectation values are modelled:
//
//   q_A = x_A cosh(gamma) + x_B sinh(gamma)
//   q_B = x_B cosh(gamma) + x_A sinh(gamma)
//
// Normalized mode feeds x_i / e^gamma into the same map, so q_A + q_B stays in
// units of x_A + x_B and the gamma -> infinity limit is (x_A + x_B) / 2.
namespace qstackelberg {

enum class CorrelationMode { kRaw, kNormalized };

std::string_view ToString(CorrelationMode mode);

// Entanglement strength: a finite gamma >= 0 or the maximal-correlation limit.
class Entanglement {
 public:
  // Throws ValidationError unless gamma is finite and >= 0.
  static Entanglement Finite(double gamma);
  static Entanglement Infinite() { return Entanglement(0.0, true); }

  bool is_infinite() const { return infinite_; }
  // Throws DomainError for the infinite limit.
  double gamma() const;

 private:
  Entanglement(double gamma, bool infinite)
      : gamma_(gamma), infinite_(infinite) {}

  double gamma_;
  bool infinite_;
};

struct EntanglementConfig {
  Entanglement entanglement = Entanglement::Finite(0.0);
  CorrelationMode mode = CorrelationMode::kRaw;
};

struct CorrelatedQuantities {
  double q_a = 0.0;
  double q_b = 0.0;
};

// Throws DomainError for infinite gamma in raw mode (the raw values diverge).
CorrelatedQuantities Correlate(double x_a, double x_b,
                               const EntanglementConfig& config);

// Finite-gamma quantum payoff of `player` when the leader plays x_a and the
// follower x_b. Raw: q (a - c - e^gamma (x_A + x_B)) while
// e^gamma (x_A + x_B) <= a, else -c q. Normalized is the raw payoff evaluated
// at x / e^gamma. Throws DomainError for infinite gamma (use the entangled
// game instead).
double QuantumPayoff(const Market& market, const EntanglementConfig& config,
                     Player player, double x_a, double x_b);

// 0.5 ln(1 + sqrt 2): the largest gamma for which the closed-form quantum
// solution below can be non-negative.
double GammaMax();

// (1 + e^{2 gamma}) / (3 + e^{-2 gamma}); the quantum solution needs
// k_L >= ratio * k, which is impossible once the ratio exceeds one.
double QuantumValidityRatio(double gamma);

// Closed-form raw-mode quantum solution obtained by unconstrained first-order
// conditions. valid iff k_L >= QuantumValidityRatio(gamma) * k, i.e. iff the
// low-type quantity is non-negative; false for every market once
// gamma > GammaMax(). Payoffs are the raw quantum payoffs at the profile.
RestrictedSolution LoKiangQuantum(const Market& market, double gamma);

// Symmetric Cournot equilibrium quantity with common cost c under the
// correlated quantities: (a - c) / (3 + tanh gamma) normalized, that divided
// by e^gamma raw. Throws ValidationError unless a > c >= 0, gamma >= 0.
double CournotReference(double a, double c, double gamma,
                        CorrelationMode mode);

}  // namespace qstackelberg

#endif  // QSTACKELBERG_QUANTUM_H_
