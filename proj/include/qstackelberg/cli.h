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

#ifndef QSTACKELBERG_CLI_H_
#define QSTACKELBERG_CLI_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qstackelberg/core.h"
#include "qstackelberg/oracle.h"
#include "qstackelberg/quantum.h"

// Command-line front end. Parsing and running are separate so tests can drive
// both without a process boundary.
namespace qstackelberg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCertificationFailed = 1;
inline constexpr int kExitInvalidInput = 2;

enum class Command { kSolve, kSweep, kVerify, kExplore };
enum class Model {
  kClassical,
  kLoKiangClassical,
  kLoKiangQuantum,
  kEntangled,
  kCournot,
};
enum class OutputFormat { kCsv, kJson };
enum class SweepVariable { kTheta, kGamma };

struct RunConfig {
  Command command = Command::kSolve;
  Model model = Model::kClassical;
  DuopolyParams params{10.0, 2.0, 4.0, 0.5};
  double gamma = 0.0;
  CorrelationMode mode = CorrelationMode::kRaw;
  double cost = 2.0;  // common cost, cournot model only

  SweepVariable sweep_variable = SweepVariable::kTheta;
  double sweep_from = 0.0;
  double sweep_to = 1.0;
  double sweep_step = 0.01;

  std::vector<double> gammas;          // explore
  std::optional<double> grid_step;     // default a / 10000
  double epsilon = 5e-3;

  OutputFormat format = OutputFormat::kJson;
  std::string output_path;  // empty writes to standard output
};

// Throws ValidationError naming the first violated constraint.
void Validate(const RunConfig& config);

// Thrown by ParseArgs for --help; what() is the generated usage text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ValidationError on unknown flags or malformed values. argv[0] is the
// program name. Handles --config (key = flag name; flags override the file).
RunConfig ParseArgs(int argc, const char* const* argv);

using Value = std::variant<double, bool, std::string>;

// One output row: ordered (column, value) pairs.
struct Record {
  std::vector<std::pair<std::string, Value>> fields;

  void Add(std::string key, Value value) {
    fields.emplace_back(std::move(key), std::move(value));
  }
  const Value* Find(const std::string& key) const;
};

struct RunOutput {
  int exit_code = kExitOk;
  std::string text;         // serialized results
  std::string diagnostics;  // human-readable errors
};

// Individual commands; each returns the result rows and throws
// ValidationError on bad input.
std::vector<Record> RunSolve(const RunConfig& config);
std::vector<Record> RunSweep(const RunConfig& config);
// Sets `passed` to the conjunction of all certifications.
std::vector<Record> RunVerify(const RunConfig& config, bool& passed);
std::vector<Record> RunExplore(const RunConfig& config);

// Dispatches on config.command, serializes in the requested format and maps
// failures to exit codes. Never throws for invalid input.
RunOutput Run(const RunConfig& config);

// Shortest text that parses back to exactly the same double.
std::string FormatNumber(double value);

std::string ToCsv(const std::vector<Record>& rows);
std::string ToJson(const RunConfig& config, const std::vector<Record>& rows,
                   const std::optional<GridSpec>& grid);

// Values of a sweep [from, to] with the given step; the last point is
// clamped to `to`.
std::vector<double> SweepPoints(double from, double to, double step);

}  // namespace qstackelberg::cli

#endif  // QSTACKELBERG_CLI_H_
