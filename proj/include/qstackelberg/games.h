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

#ifndef QSTACKELBERG_GAMES_H_
#define QSTACKELBERG_GAMES_H_

#include <string_view>
#include <variant>

#include "qstackelberg/core.h"
#include "qstackelberg/quantum.h"

// Payoff families the brute-force oracle can solve. Each type caches the
// per-player margins and costs so the payoff can be evaluated in tight loops;
// the values agree exactly with PayoffLeader/PayoffFollower, QuantumPayoff and
// EntangledPayoff respectively.
namespace qstackelberg {

struct Seller {
  double margin = 0.0;
  double cost = 0.0;
};

class GameBase {
 public:
  explicit GameBase(const Market& market);

  const Market& market() const { return market_; }
  const Seller& leader() const { return leader_; }
  const Seller& follower(FollowerType type) const {
    return type == FollowerType::kHigh ? high_ : low_;
  }

 protected:
  Market market_;
  Seller leader_, high_, low_;
};

class ClassicalGame : public GameBase {
 public:
  using GameBase::GameBase;

  double LeaderPayoff(double x_a, double x_b) const {
    return LinearDemandPayoff(x_a, x_a + x_b, market_.a(), leader_.margin,
                              leader_.cost);
  }
  double FollowerPayoff(FollowerType type, double x_a, double x_b) const {
    return FollowerPayoff(follower(type), x_a, x_b);
  }
  double FollowerPayoff(const Seller& s, double x_a, double x_b) const {
    return LinearDemandPayoff(x_b, x_a + x_b, market_.a(), s.margin, s.cost);
  }
};

// Finite-gamma quantum game in either correlation mode.
class QuantumGame : public GameBase {
 public:
  // Throws DomainError if the configuration is the infinite limit.
  QuantumGame(const Market& market, const EntanglementConfig& config);

  const EntanglementConfig& config() const { return config_; }

  double LeaderPayoff(double x_a, double x_b) const {
    const double q_a = x_a * self_ + x_b * cross_;
    const double q_b = x_b * self_ + x_a * cross_;
    return LinearDemandPayoff(q_a, q_a + q_b, market_.a(), leader_.margin,
                              leader_.cost);
  }
  double FollowerPayoff(FollowerType type, double x_a, double x_b) const {
    return FollowerPayoff(follower(type), x_a, x_b);
  }
  double FollowerPayoff(const Seller& s, double x_a, double x_b) const {
    const double q_a = x_a * self_ + x_b * cross_;
    const double q_b = x_b * self_ + x_a * cross_;
    return LinearDemandPayoff(q_b, q_a + q_b, market_.a(), s.margin, s.cost);
  }

 private:
  EntanglementConfig config_;
  double self_ = 1.0;   // weight of a player's own quantity
  double cross_ = 0.0;  // weight of the opponent's quantity
};

class EntangledGame : public GameBase {
 public:
  using GameBase::GameBase;

  double LeaderPayoff(double x_a, double x_b) const {
    const double total = x_a + x_b;
    return LinearDemandPayoff(0.5 * total, total, market_.a(), leader_.margin,
                              leader_.cost);
  }
  double FollowerPayoff(FollowerType type, double x_a, double x_b) const {
    return FollowerPayoff(follower(type), x_a, x_b);
  }
  double FollowerPayoff(const Seller& s, double x_a, double x_b) const {
    const double total = x_a + x_b;
    return LinearDemandPayoff(0.5 * total, total, market_.a(), s.margin,
                              s.cost);
  }
};

using Game = std::variant<ClassicalGame, QuantumGame, EntangledGame>;

const Market& GetMarket(const Game& game);
std::string_view GameName(const Game& game);

}  // namespace qstackelberg

#endif  // QSTACKELBERG_GAMES_H_
