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

#include "qstackelberg/games.h"

#include <cmath>

namespace qstackelberg {

GameBase::GameBase(const Market& market)
    : market_(market),
      leader_{market.Margin(Player::kLeader), market.Cost(Player::kLeader)},
      high_{market.Margin(Player::kFollowerHigh),
            market.Cost(Player::kFollowerHigh)},
      low_{market.Margin(Player::kFollowerLow),
           market.Cost(Player::kFollowerLow)} {}

QuantumGame::QuantumGame(const Market& market, const EntanglementConfig& config)
    : GameBase(market), config_(config) {
  const double gamma = config.entanglement.gamma();  // throws if infinite
  // Same coefficients Correlate() uses, so payoffs match QuantumPayoff.
  if (config.mode == CorrelationMode::kRaw) {
    self_ = std::cosh(gamma);
    cross_ = std::sinh(gamma);
  } else {
    const double decay = std::exp(-2.0 * gamma);
    self_ = 0.5 * (1.0 + decay);
    cross_ = 0.5 * (1.0 - decay);
  }
}

const Market& GetMarket(const Game& game) {
  return std::visit([](const auto& g) -> const Market& { return g.market(); },
                    game);
}

std::string_view GameName(const Game& game) {
  struct Namer {
    std::string_view operator()(const ClassicalGame&) const { return "classical"; }
    std::string_view operator()(const QuantumGame&) const { return "quantum"; }
    std::string_view operator()(const EntangledGame&) const { return "entangled"; }
  };
  return std::visit(Namer{}, game);
}

}  // namespace qstackelberg
