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

#ifndef QSTACKELBERG_CORE_H_
#define QSTACKELBERG_CORE_H_

#include <stdexcept>
#include <string>
#include <string_view>

// Shared vocabulary for the two-type Stackelberg duopoly: market parameters,
// derived margins, regime classification and the classical piecewise payoffs.
//
// The leader (player A) moves first without knowing the follower's (player B)
// cost. With probability theta the follower has the HIGH margin
// k_H = a - c_H, otherwise the LOW margin k_L = a - c_L, and k_H > k_L > 0.
namespace qstackelberg {

// Absolute tolerance used when comparing closed forms against each other.
inline constexpr double kClosedFormTolerance = 1e-9;

// Thrown when inputs violate a documented invariant. The message names the
// violated constraint.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a formula is requested outside the domain where it is defined
// (e.g. raw correlation at infinite entanglement).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct DuopolyParams {
  double a = 0.0;      // price ceiling: price = a - total quantity
  double c_h = 0.0;    // marginal cost of the high-margin follower type
  double c_l = 0.0;    // marginal cost of the low-margin follower type
  double theta = 0.0;  // probability that the follower is the high-margin type
};

// Throws ValidationError unless a > 0, 0 <= c_h < c_l < a, 0 <= theta <= 1.
void Validate(const DuopolyParams& params);

struct Margins {
  double k_h = 0.0;
  double k_l = 0.0;
  double k = 0.0;  // theta * k_h + (1 - theta) * k_l
};

// Throws ValidationError unless k_h > k_l > 0 and k_l <= k <= k_h.
void Validate(const Margins& margins);
void ValidateTheta(double theta);

Margins DeriveMargins(const DuopolyParams& params);

enum class Regime { kInterior, kBoundary, kCorner };

std::string_view ToString(Regime regime);

// Interior if k_L > theta k_H / (1 + theta), Corner if k_L < theta k_H / 2,
// Boundary otherwise (closed band, so threshold ties land here).
Regime ClassifyRegime(const Margins& margins, double theta);

enum class FollowerType { kHigh, kLow };

enum class Player { kLeader, kFollowerHigh, kFollowerLow };

Player AsPlayer(FollowerType type);

// Validated parameters together with everything derived from them.
//
// The leader's cost is not a free input: every equilibrium formula for this
// game needs a - c_A = k, so c_A = a - k = theta c_H + (1 - theta) c_L. This
// is a convention reconstructed from the equilibrium algebra; the model
// itself only says that c_A is common knowledge.
class Market {
 public:
  explicit Market(const DuopolyParams& params);

  const DuopolyParams& params() const { return params_; }
  const Margins& margins() const { return margins_; }
  double a() const { return params_.a; }
  double theta() const { return params_.theta; }

  // a - cost for the given player.
  double Margin(Player player) const;
  double Cost(Player player) const;
  double LeaderCost() const { return params_.a - margins_.k; }

 private:
  DuopolyParams params_;
  Margins margins_;
};

struct EquilibriumProfile {
  double x_a = 0.0;   // leader quantity
  double x_bh = 0.0;  // follower quantity when high-margin
  double x_bl = 0.0;  // follower quantity when low-margin
};

struct PayoffReport {
  double u_a = 0.0;   // leader expected payoff
  double u_bh = 0.0;
  double u_bl = 0.0;
  double u_b = 0.0;   // theta * u_bh + (1 - theta) * u_bl
};

// Payoff of a seller with the given margin and cost under linear inverse
// demand: own * (margin - total) while total <= a, -cost * own past the
// choke point. Continuous at total = a because margin = a - cost.
inline double LinearDemandPayoff(double own, double total, double a,
                                 double margin, double cost) {
  // Select the factor, not the product, so grid loops stay branch-free.
  return own * (total <= a ? margin - total : -cost);
}

double PayoffLeader(const Market& market, double x_a, double x_b);
double PayoffFollower(const Market& market, FollowerType type, double x_a,
                      double x_b);

// Builds a report from per-type payoffs; fills u_b as the theta mixture.
PayoffReport MakeReport(double theta, double u_a, double u_bh, double u_bl);

// Expected payoffs of a profile under the classical payoff functions.
PayoffReport ExpectedPayoffs(const Market& market,
                             const EquilibriumProfile& profile);

}  // namespace qstackelberg

#endif  // QSTACKELBERG_CORE_H_
