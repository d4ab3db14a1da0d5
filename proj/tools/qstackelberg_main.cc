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

#include <fstream>
#include <iostream>

#include "qstackelberg/cli.h"

int main(int argc, char** argv) {
  namespace cli = qstackelberg::cli;
  cli::RunConfig config;
  try {
    config = cli::ParseArgs(argc, argv);
  } catch (const cli::HelpRequested& help) {
    std::cout << help.what();
    return cli::kExitOk;
  } catch (const qstackelberg::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return cli::kExitInvalidInput;
  }

  const cli::RunOutput out = cli::Run(config);
  std::cerr << out.diagnostics;
  if (out.exit_code == cli::kExitInvalidInput) return out.exit_code;
  if (config.output_path.empty()) {
    std::cout << out.text;
  } else {
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
      std::cerr << "cannot open " << config.output_path << "\n";
      return cli::kExitInvalidInput;
    }
    file << out.text;
  }
  return out.exit_code;
}
