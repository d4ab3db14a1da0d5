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

#include "qstackelberg/cli.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <map>
#include <sstream>
#include <string_view>

#include "CLI11.hpp"
#include "json.hpp"
#include "qstackelberg/classical.h"
#include "qstackelberg/entangled.h"
#include "qstackelberg/games.h"

namespace qstackelberg::cli {
namespace {

constexpr std::string_view kVersion = "0.1.0";

void Require(bool ok, const std::string& constraint) {
  if (!ok) throw ValidationError("violated constraint: " + constraint);
}

const std::map<std::string, Command>& CommandNames() {
  static const std::map<std::string, Command> names = {
      {"solve", Command::kSolve},
      {"sweep", Command::kSweep},
      {"verify", Command::kVerify},
      {"explore", Command::kExplore}};
  return names;
}

const std::map<std::string, Model>& ModelNames() {
  static const std::map<std::string, Model> names = {
      {"classical", Model::kClassical},
      {"lokiang-classical", Model::kLoKiangClassical},
      {"lokiang-quantum", Model::kLoKiangQuantum},
      {"entangled", Model::kEntangled},
      {"cournot", Model::kCournot}};
  return names;
}

template <class Enum>
std::string NameOf(const std::map<std::string, Enum>& names, Enum value) {
  for (const auto& [name, v] : names) {
    if (v == value) return name;
  }
  return "unknown";
}

std::string ToString(Command c) { return NameOf(CommandNames(), c); }
std::string ToString(Model m) { return NameOf(ModelNames(), m); }

bool UsesGamma(Model m) {
  return m == Model::kLoKiangQuantum || m == Model::kCournot;
}

GridSpec GridFor(const RunConfig& config, const Market& market) {
  GridSpec grid = DefaultGrid(market);
  if (config.grid_step) grid.step = *config.grid_step;
  Validate(grid);
  return grid;
}

void AddMarket(Record& r, const Market& market) {
  const DuopolyParams& p = market.params();
  const Margins& m = market.margins();
  r.Add("a", p.a);
  r.Add("c_h", p.c_h);
  r.Add("c_l", p.c_l);
  r.Add("theta", p.theta);
  r.Add("k_h", m.k_h);
  r.Add("k_l", m.k_l);
  r.Add("k", m.k);
}

void AddProfile(Record& r, const EquilibriumProfile& p) {
  r.Add("x_a", p.x_a);
  r.Add("x_bh", p.x_bh);
  r.Add("x_bl", p.x_bl);
}

void AddPayoffs(Record& r, const PayoffReport& u) {
  r.Add("u_a", u.u_a);
  r.Add("u_bh", u.u_bh);
  r.Add("u_bl", u.u_bl);
  r.Add("u_b", u.u_b);
}

// Closed-form profile and the game it should be an equilibrium of.
struct ModelSolution {
  EquilibriumProfile profile;
  Game game;
};

ModelSolution SolveForVerification(const RunConfig& config,
                                   const Market& market) {
  switch (config.model) {
    case Model::kClassical:
      return {SolveSpe(market).profile, ClassicalGame(market)};
    case Model::kLoKiangClassical:
      return {LoKiangClassical(market).profile, ClassicalGame(market)};
    case Model::kLoKiangQuantum:
      return {LoKiangQuantum(market, config.gamma).profile,
              QuantumGame(market, {Entanglement::Finite(config.gamma),
                                   CorrelationMode::kRaw})};
    case Model::kEntangled:
      return {SolveSpeEntangled(market).profile, EntangledGame(market)};
    case Model::kCournot:
      break;
  }
  throw ValidationError(
      "violated constraint: verify supports classical, lokiang-classical, "
      "lokiang-quantum and entangled");
}

Record SolveRecord(const RunConfig& config) {
  Record r;
  r.Add("model", ToString(config.model));
  if (config.model == Model::kCournot) {
    r.Add("a", config.params.a);
    r.Add("cost", config.cost);
    r.Add("gamma", config.gamma);
    r.Add("mode", std::string(ToString(config.mode)));
    r.Add("x_star",
          CournotReference(config.params.a, config.cost, config.gamma,
                           config.mode));
    return r;
  }

  const Market market(config.params);
  AddMarket(r, market);
  switch (config.model) {
    case Model::kClassical: {
      const ClassicalSolution s = SolveSpe(market);
      r.Add("regime", std::string(ToString(s.regime)));
      AddProfile(r, s.profile);
      AddPayoffs(r, s.payoffs);
      r.Add("mover_advantage", s.mover_advantage);
      r.Add("advantage_sign",
            std::string(ToString(MoverAdvantageSign(market))));
      break;
    }
    case Model::kLoKiangClassical:
    case Model::kLoKiangQuantum: {
      const bool quantum = config.model == Model::kLoKiangQuantum;
      if (quantum) r.Add("gamma", config.gamma);
      const RestrictedSolution s = quantum
                                       ? LoKiangQuantum(market, config.gamma)
                                       : LoKiangClassical(market);
      r.Add("valid", s.valid);
      AddProfile(r, s.profile);
      AddPayoffs(r, s.payoffs);
      r.Add("mover_advantage", s.payoffs.u_a - s.payoffs.u_b);
      break;
    }
    case Model::kEntangled: {
      const EntangledSolution s = SolveSpeEntangled(market);
      AddProfile(r, s.profile);
      AddPayoffs(r, s.payoffs);
      r.Add("advantage", s.advantage);
      break;
    }
    case Model::kCournot:
      break;
  }
  return r;
}

std::string SweepKey(SweepVariable v) {
  return v == SweepVariable::kTheta ? "theta" : "gamma";
}

void MoveToFront(Record& r, const std::string& key) {
  auto it = std::find_if(r.fields.begin(), r.fields.end(),
                         [&](const auto& f) { return f.first == key; });
  if (it != r.fields.end()) std::rotate(r.fields.begin(), it, it + 1);
}

nlohmann::ordered_json ToJsonValue(const Value& v) {
  return std::visit([](const auto& x) { return nlohmann::ordered_json(x); }, v);
}

std::string ToCsvCell(const Value& v) {
  if (const double* d = std::get_if<double>(&v)) return FormatNumber(*d);
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<std::string>(v);
}

nlohmann::ordered_json ConfigJson(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["command"] = ToString(c.command);
  j["model"] = ToString(c.model);
  j["a"] = c.params.a;
  j["c_h"] = c.params.c_h;
  j["c_l"] = c.params.c_l;
  j["theta"] = c.params.theta;
  if (UsesGamma(c.model)) j["gamma"] = c.gamma;
  j["mode"] = std::string(ToString(c.mode));
  if (c.model == Model::kCournot) j["cost"] = c.cost;
  if (c.command == Command::kSweep) {
    j["var"] = SweepKey(c.sweep_variable);
    j["from"] = c.sweep_from;
    j["to"] = c.sweep_to;
    j["step"] = c.sweep_step;
  }
  if (c.command == Command::kExplore) j["gammas"] = c.gammas;
  if (c.command == Command::kVerify) j["epsilon"] = c.epsilon;
  j["format"] = c.format == OutputFormat::kCsv ? "csv" : "json";
  return j;
}

}  // namespace

const Value* Record::Find(const std::string& key) const {
  for (const auto& [k, v] : fields) {
    if (k == key) return &v;
  }
  return nullptr;
}

void Validate(const RunConfig& c) {
  if (c.model == Model::kCournot) {
    Require(std::isfinite(c.params.a) && c.params.a > 0.0, "a > 0");
    Require(std::isfinite(c.cost) && c.cost >= 0.0 && c.cost < c.params.a,
            "0 <= cost < a");
  } else {
    qstackelberg::Validate(c.params);
  }
  if (UsesGamma(c.model)) {
    Require(std::isfinite(c.gamma) && c.gamma >= 0.0, "gamma finite and >= 0");
  }
  switch (c.command) {
    case Command::kSolve:
      break;
    case Command::kSweep: {
      Require(std::isfinite(c.sweep_from) && std::isfinite(c.sweep_to) &&
                  c.sweep_from <= c.sweep_to,
              "sweep from <= to");
      Require(std::isfinite(c.sweep_step) && c.sweep_step > 0.0,
              "sweep step > 0");
      if (c.sweep_variable == SweepVariable::kTheta) {
        Require(c.model != Model::kCournot, "theta sweep needs a duopoly model");
        Require(c.sweep_from >= 0.0 && c.sweep_to <= 1.0,
                "theta sweep within [0, 1]");
      } else {
        Require(UsesGamma(c.model),
                "gamma sweep needs model lokiang-quantum or cournot");
        Require(c.sweep_from >= 0.0, "gamma sweep from >= 0");
      }
      Require((c.sweep_to - c.sweep_from) / c.sweep_step <= 1e7,
              "sweep has at most 1e7 points");
      break;
    }
    case Command::kVerify:
      Require(c.model != Model::kCournot, "verify needs a duopoly model");
      Require(c.epsilon >= 0.0, "epsilon >= 0");
      break;
    case Command::kExplore:
      Require(!c.gammas.empty(), "explore requires a gamma list (--gammas)");
      for (double g : c.gammas) {
        Require(std::isfinite(g) && g >= 0.0, "explore gammas finite and >= 0");
      }
      break;
  }
  if (c.grid_step) {
    Require(std::isfinite(*c.grid_step) && *c.grid_step > 0.0 &&
                *c.grid_step <= c.params.a,
            "0 < grid step <= a");
  }
}

RunConfig ParseArgs(int argc, const char* const* argv) {
  RunConfig c;
  CLI::App app{"Subgame perfect equilibria of the classical and quantum "
               "Stackelberg duopoly with incomplete information"};
  app.set_config("--config", "", "Read flags from a file (key = flag name)");
  app.require_subcommand(1);

  std::string model = "classical";
  std::string mode = "raw";
  std::string format = "json";
  std::string var = "theta";
  double grid_step = 0.0;

  app.add_option("--model", model, "classical|lokiang-classical|"
                                    "lokiang-quantum|entangled|cournot");
  app.add_option("--a", c.params.a, "Price ceiling");
  app.add_option("--c-high-margin,--c-high", c.params.c_h,
                 "Cost of the HIGH-margin follower type (the cheaper one)");
  app.add_option("--c-low-margin,--c-low", c.params.c_l,
                 "Cost of the LOW-margin follower type (the dearer one)");
  app.add_option("--theta", c.params.theta,
                 "Probability of the high-margin type");
  app.add_option("--gamma", c.gamma, "Entanglement parameter");
  app.add_option("--mode", mode, "raw|normalized");
  app.add_option("--cost", c.cost, "Common marginal cost (cournot model)");
  app.add_option("--var", var, "Sweep variable: theta|gamma");
  app.add_option("--from", c.sweep_from, "Sweep start");
  app.add_option("--to", c.sweep_to, "Sweep end");
  app.add_option("--step", c.sweep_step, "Sweep step");
  app.add_option("--gammas", c.gammas, "Gamma values for explore")
      ->delimiter(',');
  auto* grid_opt =
      app.add_option("--grid-step", grid_step, "Oracle grid step (default a/10000)");
  app.add_option("--epsilon", c.epsilon, "Certification tolerance");
  app.add_option("--format", format, "csv|json");
  app.add_option("--output", c.output_path, "Output file (default stdout)");

  for (const auto& [name, command] : CommandNames()) {
    app.add_subcommand(name)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw ValidationError(std::string("invalid arguments: ") + e.what());
  }

  c.command = CommandNames().at(app.get_subcommands().front()->get_name());
  const auto model_it = ModelNames().find(model);
  Require(model_it != ModelNames().end(),
          "--model classical|lokiang-classical|lokiang-quantum|entangled|"
          "cournot, got '" + model + "'");
  c.model = model_it->second;
  Require(mode == "raw" || mode == "normalized", "--mode raw|normalized");
  c.mode = mode == "raw" ? CorrelationMode::kRaw : CorrelationMode::kNormalized;
  Require(format == "csv" || format == "json", "--format csv|json");
  c.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
  Require(var == "theta" || var == "gamma", "--var theta|gamma");
  c.sweep_variable = var == "theta" ? SweepVariable::kTheta : SweepVariable::kGamma;
  if (grid_opt->count() > 0) c.grid_step = grid_step;
  return c;
}

std::vector<double> SweepPoints(double from, double to, double step) {
  const auto n = static_cast<std::size_t>(
      std::floor((to - from) / step * (1.0 + 1e-12))) + 1;
  std::vector<double> points(n);
  for (std::size_t i = 0; i < n; ++i) {
    points[i] = std::min(from + static_cast<double>(i) * step, to);
  }
  return points;
}

std::vector<Record> RunSolve(const RunConfig& config) {
  Validate(config);
  return {SolveRecord(config)};
}

std::vector<Record> RunSweep(const RunConfig& config) {
  Validate(config);
  const std::vector<double> points =
      SweepPoints(config.sweep_from, config.sweep_to, config.sweep_step);
  const std::string key = SweepKey(config.sweep_variable);
  std::vector<Record> rows(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  const auto n = static_cast<std::int64_t>(points.size());
  // Each point writes its own slot, so row order follows the sweep.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      RunConfig point = config;
      if (config.sweep_variable == SweepVariable::kTheta) {
        point.params.theta = points[i];
      } else {
        point.gamma = points[i];
      }
      rows[i] = SolveRecord(point);
      MoveToFront(rows[i], key);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

std::vector<Record> RunVerify(const RunConfig& config, bool& passed) {
  Validate(config);
  const Market market(config.params);
  const GridSpec grid = GridFor(config, market);
  const ModelSolution solution = SolveForVerification(config, market);
  const Certification cert =
      CertifyEpsilonSpe(solution.game, solution.profile, grid, config.epsilon);
  passed = cert.passed;

  Record r;
  r.Add("model", ToString(config.model));
  AddMarket(r, market);
  if (config.model == Model::kLoKiangQuantum) r.Add("gamma", config.gamma);
  AddProfile(r, solution.profile);
  r.Add("passed", cert.passed);
  r.Add("feasible", cert.feasible);
  r.Add("infeasibility", cert.infeasibility);
  r.Add("leader_gain", cert.gains.leader);
  r.Add("follower_high_gain", cert.gains.follower_high);
  r.Add("follower_low_gain", cert.gains.follower_low);
  r.Add("worst_deviation", cert.worst_deviation);
  r.Add("epsilon", config.epsilon);
  r.Add("grid_step", grid.step);
  return {r};
}

std::vector<Record> RunExplore(const RunConfig& config) {
  Validate(config);
  const Market market(config.params);
  const GridSpec grid = GridFor(config, market);
  const std::vector<GammaExploration> table =
      ExploreGamma(market, config.gammas, grid, config.mode);
  std::vector<Record> rows;
  rows.reserve(table.size());
  for (const GammaExploration& e : table) {
    Record r;
    r.Add("gamma", e.gamma);
    r.Add("mode", std::string(ToString(config.mode)));
    AddProfile(r, e.result.profile);
    r.Add("leader_value", e.result.leader_value);
    r.Add("certificate_worst", e.result.certificate.Worst());
    if (config.mode == CorrelationMode::kRaw) {
      const RestrictedSolution lk = LoKiangQuantum(market, e.gamma);
      r.Add("closed_form_valid", lk.valid);
      r.Add("closed_form_x_a", lk.profile.x_a);
    }
    r.Add("grid_step", grid.step);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string FormatNumber(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string ToCsv(const std::vector<Record>& rows) {
  std::ostringstream out;
  if (rows.empty()) return {};
  for (std::size_t i = 0; i < rows.front().fields.size(); ++i) {
    out << (i ? "," : "") << rows.front().fields[i].first;
  }
  out << '\n';
  for (const Record& r : rows) {
    for (std::size_t i = 0; i < r.fields.size(); ++i) {
      out << (i ? "," : "") << ToCsvCell(r.fields[i].second);
    }
    out << '\n';
  }
  return out.str();
}

std::string ToJson(const RunConfig& config, const std::vector<Record>& rows,
                   const std::optional<GridSpec>& grid) {
  nlohmann::ordered_json doc;
  doc["config"] = ConfigJson(config);
  doc["results"] = nlohmann::ordered_json::array();
  for (const Record& r : rows) {
    nlohmann::ordered_json row;
    for (const auto& [k, v] : r.fields) row[k] = ToJsonValue(v);
    doc["results"].push_back(std::move(row));
  }
  nlohmann::ordered_json meta;
  meta["version"] = std::string(kVersion);
  if (grid) meta["grid"] = {{"step", grid->step}, {"upper", grid->upper}};
  doc["meta"] = std::move(meta);
  return doc.dump(2) + "\n";
}

RunOutput Run(const RunConfig& config) {
  RunOutput out;
  try {
    std::vector<Record> rows;
    std::optional<GridSpec> grid;
    switch (config.command) {
      case Command::kSolve:
        rows = RunSolve(config);
        break;
      case Command::kSweep:
        rows = RunSweep(config);
        break;
      case Command::kVerify: {
        bool passed = false;
        rows = RunVerify(config, passed);
        grid = GridFor(config, Market(config.params));
        if (!passed) {
          out.exit_code = kExitCertificationFailed;
          out.diagnostics = "certification failed\n";
        }
        break;
      }
      case Command::kExplore:
        rows = RunExplore(config);
        grid = GridFor(config, Market(config.params));
        break;
    }
    out.text = config.format == OutputFormat::kCsv ? ToCsv(rows)
                                                   : ToJson(config, rows, grid);
  } catch (const ValidationError& e) {
    out.exit_code = kExitInvalidInput;
    out.diagnostics = std::string(e.what()) + "\n";
  } catch (const DomainError& e) {
    out.exit_code = kExitInvalidInput;
    out.diagnostics = std::string(e.what()) + "\n";
  }
  return out;
}

}  // namespace qstackelberg::cli
