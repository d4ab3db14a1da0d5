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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Every tolerance below is fixed by the
// criterion it checks; none is tuned to the results.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qstackelberg/classical.h"
#include "qstackelberg/entangled.h"
#include "qstackelberg/oracle.h"
#include "qstackelberg/quantum.h"
#include "test_support.h"

namespace qstackelberg {
namespace {

using testing::ParamGen;

constexpr double kStep = 1e-3;      // oracle grid step (a = 10)
constexpr double kEpsilon = 5e-3;   // certification tolerance
constexpr double kClosedForm = 1e-9;
constexpr double kExact = 1e-12;

GridSpec Grid(const Market& market) { return {kStep, market.a()}; }

struct Outcome {
  bool passed = true;
  std::string first_failure;
  std::ostringstream detail;

  void Require(bool ok, const std::string& what) {
    if (!ok && passed) first_failure = what;
    passed = passed && ok;
  }
};

double MaxProfileGap(const EquilibriumProfile& x, const EquilibriumProfile& y) {
  return std::max({std::abs(x.x_a - y.x_a), std::abs(x.x_bh - y.x_bh),
                   std::abs(x.x_bl - y.x_bl)});
}

double MaxPayoffGap(const PayoffReport& x, const PayoffReport& y) {
  return std::max({std::abs(x.u_a - y.u_a), std::abs(x.u_bh - y.u_bh),
                   std::abs(x.u_bl - y.u_bl), std::abs(x.u_b - y.u_b)});
}

// Gamma bound reproduction.
void GammaBound(Outcome& o) {
  const double g0 = GammaMax();
  const double value_error = std::abs(g0 - 0.440687);
  const double sinh_error = std::abs(std::sinh(2.0 * g0) - 1.0);
  o.Require(value_error <= 1e-6, "gamma_max differs from 0.440687");
  o.Require(sinh_error <= kExact, "sinh(2 gamma_max) != 1");
  o.detail << "gamma_max=" << g0 << " |gamma_max-0.440687|=" << value_error
           << " |sinh(2g)-1|=" << sinh_error;
}

// Classical SPE against the restricted solution, and certification of the
// full solver where the restricted one is invalid.
void ClassicalAgainstRestricted(Outcome& o) {
  ParamGen gen(1001);
  int valid = 0, invalid = 0, certified = 0;
  double worst_gap = 0.0, worst_deviation = 0.0;
  while (valid < 500 || invalid < 500) {
    const Market market(gen.Any());
    const RestrictedSolution lk = LoKiangClassical(market);
    const ClassicalSolution spe = SolveSpe(market);
    if (lk.valid && valid < 500) {
      ++valid;
      const double gap = std::max(MaxProfileGap(lk.profile, spe.profile),
                                  MaxPayoffGap(lk.payoffs, spe.payoffs));
      worst_gap = std::max(worst_gap, gap);
      o.Require(gap <= kClosedForm, "restricted solution differs");
    } else if (!lk.valid && invalid < 500) {
      ++invalid;
      const Certification c = CertifyEpsilonSpe(ClassicalGame(market),
                                                spe.profile, Grid(market),
                                                kEpsilon);
      worst_deviation = std::max(worst_deviation, c.worst_deviation);
      certified += c.passed;
      o.Require(c.passed, "full solver profile failed certification");
    }
  }
  o.detail << "valid draws=" << valid << " max gap=" << worst_gap
           << "; invalid draws=" << invalid << " certified=" << certified
           << " worst deviation=" << worst_deviation;
}

// Mover-advantage sign in the boundary band.
void MoverAdvantageSigns(Outcome& o) {
  ParamGen gen(1002);
  int first = 0, second = 0;
  for (int i = 0; i < 2000; ++i) {
    const double k_h = gen.Uniform(0.5, 10.0);
    const Market m1(ParamGen::FromMargins(
        10.0, k_h, gen.Uniform(k_h / 3.0, 0.4 * k_h), 2.0 / 3.0));
    o.Require(SolveSpe(m1).regime == Regime::kBoundary, "draw left the band");
    const bool f = MoverAdvantageSign(m1) == MoverAdvantage::kFirst;
    first += f;
    o.Require(f, "theta=2/3 did not give first-mover advantage");

    const Market m2(ParamGen::FromMargins(
        10.0, k_h, gen.Uniform(0.25 * k_h, k_h / 3.0), 0.5));
    o.Require(SolveSpe(m2).regime == Regime::kBoundary, "draw left the band");
    const bool s = MoverAdvantageSign(m2) == MoverAdvantage::kSecond;
    second += s;
    o.Require(s, "theta=1/2 did not give second-mover advantage");
  }
  o.detail << "theta=2/3 first=" << first << "/2000; theta=1/2 second="
           << second << "/2000";
}

// Entangled SPE: certification, advantage formula, endpoints and peak.
void EntangledSpe(Outcome& o) {
  ParamGen gen(1003);
  int certified = 0;
  double worst_deviation = 0.0, worst_formula = 0.0, worst_endpoint = 0.0;
  for (int i = 0; i < 200; ++i) {
    DuopolyParams p = gen.Any();
    const Market market(p);
    const Margins& m = market.margins();
    const EntangledSolution s = SolveSpeEntangled(market);
    const EquilibriumProfile expected{m.k / 2.0, (m.k_h - m.k) / 2.0, 0.0};
    o.Require(MaxProfileGap(s.profile, expected) <= kClosedForm,
              "profile is not (k/2, (k_H-k)/2, 0)");
    const Certification c =
        CertifyEpsilonSpe(EntangledGame(market), s.profile, Grid(market),
                          kEpsilon);
    certified += c.passed;
    worst_deviation = std::max(worst_deviation, c.worst_deviation);
    o.Require(c.passed, "entangled profile failed certification");

    const double gap = m.k_h - m.k_l;
    const double formula =
        0.25 * gap * gap * (1 - p.theta) * (1 - p.theta) * p.theta;
    const double err = std::abs((s.payoffs.u_b - s.payoffs.u_a) - formula);
    worst_formula = std::max(worst_formula, err);
    o.Require(err <= kClosedForm, "u_B - u_A differs from the formula");

    for (double theta : {0.0, 1.0}) {
      p.theta = theta;
      const EntangledSolution e = SolveSpeEntangled(Market(p));
      const double v = std::abs(e.payoffs.u_b - e.payoffs.u_a);
      worst_endpoint = std::max(worst_endpoint, v);
      o.Require(v <= kClosedForm, "advantage not zero at an endpoint");
    }
  }

  // Sweep theta at step 1e-3 over the reference market.
  const double sweep_step = 1e-3;
  DuopolyParams p{10.0, 2.0, 4.0, 0.0};
  double best = -1.0, best_theta = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    p.theta = std::min(i * sweep_step, 1.0);
    const double v = SolveSpeEntangled(Market(p)).advantage;
    if (v > best) {
      best = v;
      best_theta = p.theta;
    }
  }
  o.Require(std::abs(best_theta - 1.0 / 3.0) <= sweep_step,
            "sweep peak is not at theta = 1/3");
  o.detail << "certified=" << certified << "/200 worst deviation="
           << worst_deviation << "; formula error=" << worst_formula
           << "; endpoint advantage=" << worst_endpoint
           << "; sweep peak theta=" << best_theta << " value=" << best;
}

// Complete-information reduction at the theta endpoints.
void CompleteInformation(Outcome& o) {
  ParamGen gen(1004);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    DuopolyParams p = gen.Any();
    for (double theta : {0.0, 1.0}) {
      p.theta = theta;
      const Market market(p);
      const double k = market.margins().k;
      const PayoffReport& u = SolveSpeEntangled(market).payoffs;
      const double err = std::max(std::abs(u.u_a - k * k / 8.0),
                                  std::abs(u.u_b - k * k / 8.0));
      worst = std::max(worst, err);
      o.Require(err <= kExact, "u_A or u_B differs from k^2/8");
    }
  }
  o.detail << "2000 endpoint markets, max |u - k^2/8|=" << worst;
}

// Past the gamma bound the published quantum profile is flagged invalid and
// fails certification under finite-gamma payoffs.
void CorrectionRegression(Outcome& o) {
  ParamGen gen(1005);
  int flagged = 0, total = 0, failed = 0, certified_total = 0,
      leader_gain = 0;
  double smallest_deviation = INFINITY;
  for (double gamma : {0.5, 0.7, 1.0}) {
    for (int i = 0; i < 2000; ++i) {
      const Market market(gen.Any());
      const RestrictedSolution lk = LoKiangQuantum(market, gamma);
      ++total;
      flagged += !lk.valid;
      o.Require(!lk.valid, "valid=true past the gamma bound");
      if (i >= 20) continue;
      const QuantumGame game(market, {Entanglement::Finite(gamma),
                                      CorrelationMode::kRaw});
      const Certification c =
          CertifyEpsilonSpe(game, lk.profile, Grid(market), kEpsilon);
      ++certified_total;
      failed += !c.passed;
      leader_gain += c.gains.leader > kEpsilon;
      smallest_deviation = std::min(smallest_deviation, c.worst_deviation);
      o.Require(!c.passed, "published profile passed certification");
    }
  }
  o.detail << "valid=false " << flagged << "/" << total
           << "; certification failed " << failed << "/" << certified_total
           << " (leader gain > eps in " << leader_gain
           << "); smallest worst deviation=" << smallest_deviation;
}

// Correlation identities and the Cournot reference endpoints.
void QuantumIdentities(Outcome& o) {
  ParamGen gen(1006);
  double worst_sum = 0.0, worst_diff = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x_a = gen.Uniform(0.0, 10.0);
    const double x_b = gen.Uniform(0.0, 10.0);
    const double gamma = gen.Uniform(0.0, 5.0);
    const CorrelatedQuantities raw =
        Correlate(x_a, x_b, {Entanglement::Finite(gamma), CorrelationMode::kRaw});
    const CorrelatedQuantities norm = Correlate(
        x_a, x_b, {Entanglement::Finite(gamma), CorrelationMode::kNormalized});
    const double raw_sum = std::exp(gamma) * (x_a + x_b);
    // Raw quantities grow like e^gamma, so that rule is checked relative to
    // its magnitude.
    const double sum_err =
        std::max(std::abs(raw.q_a + raw.q_b - raw_sum) / std::max(1.0, raw_sum),
                 std::abs(norm.q_a + norm.q_b - (x_a + x_b)));
    const double diff_err = std::abs(
        (norm.q_a - norm.q_b) - (x_a - x_b) * std::exp(-2.0 * gamma));
    worst_sum = std::max(worst_sum, sum_err);
    worst_diff = std::max(worst_diff, diff_err);
    o.Require(sum_err <= kExact, "sum rule");
    o.Require(diff_err <= kExact, "difference rule");
  }
  const double a = 10.0, c = 1.0;
  double worst_cournot = 0.0;
  for (CorrelationMode mode :
       {CorrelationMode::kRaw, CorrelationMode::kNormalized}) {
    const double at_zero = CournotReference(a, c, 0.0, mode);
    worst_cournot = std::max(worst_cournot, std::abs(at_zero - (a - c) / 3.0));
  }
  const double limit = std::abs(
      CournotReference(a, c, 20.0, CorrelationMode::kNormalized) - (a - c) / 4.0);
  worst_cournot = std::max(worst_cournot, limit);
  o.Require(worst_cournot <= 1e-6, "Cournot reference endpoints");
  o.detail << "10000 draws: sum error=" << worst_sum
           << " difference error=" << worst_diff
           << "; Cournot endpoint error=" << worst_cournot;
}

// Grid refinement over every payoff family the oracle solves.
void OracleSelfConsistency(Outcome& o) {
  ParamGen gen(1007);
  std::vector<std::pair<std::string, std::vector<Game>>> matrix;

  auto draw = [&](int count, const std::function<DuopolyParams()>& params,
                  const std::function<Game(const Market&)>& make) {
    std::vector<Game> games;
    for (int i = 0; i < count; ++i) games.push_back(make(Market(params())));
    return games;
  };
  for (Regime regime : {Regime::kInterior, Regime::kBoundary, Regime::kCorner}) {
    matrix.emplace_back(
        std::string("classical/") + std::string(ToString(regime)),
        draw(10, [&] { return gen.InRegime(regime); },
             [](const Market& m) { return Game{ClassicalGame(m)}; }));
  }
  matrix.emplace_back(
      "entangled", draw(10, [&] { return gen.Any(); },
                        [](const Market& m) { return Game{EntangledGame(m)}; }));
  matrix.emplace_back(
      "quantum-raw/gamma<=gamma_max",
      draw(10, [&] { return gen.Any(); }, [&](const Market& m) {
        return Game{QuantumGame(
            m, {Entanglement::Finite(gen.Uniform(0.0, GammaMax())),
                CorrelationMode::kRaw})};
      }));
  matrix.emplace_back(
      "quantum-normalized/gamma<=10",
      draw(10, [&] { return gen.Any(); }, [&](const Market& m) {
        return Game{QuantumGame(m, {Entanglement::Finite(gen.Uniform(0.0, 10.0)),
                                    CorrelationMode::kNormalized})};
      }));

  int cases = 0, within = 0;
  for (const auto& [name, games] : matrix) {
    double worst = 0.0;
    int ok = 0;
    for (const Game& game : games) {
      const GridSpec coarse{kStep, GetMarket(game).a()};
      const GridSpec fine{kStep / 2.0, GetMarket(game).a()};
      const OracleResult r1 = SolveBackwardInduction(game, coarse);
      const OracleResult r2 = SolveBackwardInduction(game, fine);
      const double move = MaxProfileGap(r1.profile, r2.profile);
      worst = std::max(worst, move);
      ok += move <= 2.0 * kStep * (1.0 + 1e-9);
      o.Require(move <= 2.0 * kStep * (1.0 + 1e-9), name + " moved more than 2h");
    }
    cases += static_cast<int>(games.size());
    within += ok;
    o.detail << name << " " << ok << "/" << games.size()
             << " max move=" << worst / kStep << "h; ";
  }
  o.detail << "total " << within << "/" << cases << " within 2h";
}

}  // namespace
}  // namespace qstackelberg

int main() {
  using Clock = std::chrono::steady_clock;
  const std::vector<std::pair<const char*, void (*)(qstackelberg::Outcome&)>>
      criteria = {
          {"AC1 gamma bound", qstackelberg::GammaBound},
          {"AC2 classical vs restricted", qstackelberg::ClassicalAgainstRestricted},
          {"AC3 mover-advantage sign", qstackelberg::MoverAdvantageSigns},
          {"AC4 entangled SPE", qstackelberg::EntangledSpe},
          {"AC5 complete-information reduction", qstackelberg::CompleteInformation},
          {"AC6 correction regression", qstackelberg::CorrectionRegression},
          {"AC7 quantum-mapping identities", qstackelberg::QuantumIdentities},
          {"AC8 oracle self-consistency", qstackelberg::OracleSelfConsistency},
      };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    qstackelberg::Outcome outcome;
    const auto start = Clock::now();
    run(outcome);
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("%s %s (%.1f s): %s\n", outcome.passed ? "PASS" : "FAIL", name,
                seconds, outcome.detail.str().c_str());
    if (!outcome.passed) {
      std::printf("    first failure: %s\n", outcome.first_failure.c_str());
    }
    std::fflush(stdout);
    failures += !outcome.passed;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
