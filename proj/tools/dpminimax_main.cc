// Copyright 2026 The dpminimax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dpminimax <subcommand> --config <path> [--out <dir>] [--workers <k>]
//           [--seed <u64>]
//
// Exit codes: 0 success, 2 config error, 3 numerical non-convergence,
// 4 privacy-verification failure, 1 anything else.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "dpminimax/commands.h"
#include "dpminimax/config.h"

namespace {

int ExitCode(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk:
      return 0;
    case absl::StatusCode::kInvalidArgument:
    case absl::StatusCode::kOutOfRange:
      return 2;
    case absl::StatusCode::kResourceExhausted:
      return 3;
    case absl::StatusCode::kFailedPrecondition:
      return 4;
    default:
      return 1;
  }
}

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::InvalidArgumentError("cannot open config file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private GDA for strongly-convex-strongly-"
               "concave minimax problems"};
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<int> workers;
  std::optional<uint64_t> seed;
  bool echo = false;

  const std::pair<const char*, const char*> subcommands[] = {
      {"calibrate", "Calibrate and verify the noise scale for each n"},
      {"run", "Run DP-GDA replicates and report strong PD risk"},
      {"stability", "Measure coupled-run argument stability"},
      {"generalization", "Estimate the four generalization measures"},
      {"noise-check", "Test Gaussian norm concentration"},
      {"bounds", "Evaluate a theoretical bound"},
  };
  for (const auto& [name, description] : subcommands) {
    CLI::App* sub = app.add_subcommand(name, description);
    sub->add_option("--config", config_path, "JSON experiment config")
        ->required();
    sub->add_option("--out", out_dir, "Output directory (overrides config)");
    sub->add_option("--workers", workers,
                    "Worker threads; falls back to DPMINIMAX_WORKERS")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "Root seed (overrides config)");
    sub->add_flag("--echo-config", echo,
                  "Print the resolved config as JSON to stderr");
  }
  CLI11_PARSE(app, argc, argv);
  const std::string subcommand = app.get_subcommands().front()->get_name();

  absl::StatusOr<std::string> text = ReadFile(config_path);
  if (!text.ok()) {
    std::cerr << "error: " << text.status().message() << "\n";
    return ExitCode(text.status());
  }
  absl::StatusOr<dpminimax::ExperimentConfig> config =
      dpminimax::ParseConfig(*text);
  if (!config.ok()) {
    std::cerr << "config error: " << config.status().message() << "\n";
    return ExitCode(config.status());
  }
  if (out_dir.has_value()) config->output = *out_dir;
  if (seed.has_value()) config->seed = *seed;
  if (workers.has_value()) {
    config->workers = *workers;
  } else if (const char* env = std::getenv("DPMINIMAX_WORKERS")) {
    try {
      config->workers = std::stoi(env);
    } catch (const std::exception&) {
      std::cerr << "config error: DPMINIMAX_WORKERS must be an integer, got \""
                << env << "\"\n";
      return 2;
    }
  }
  if (absl::Status s = dpminimax::ValidateConfig(*config); !s.ok()) {
    std::cerr << "config error: " << s.message() << "\n";
    return ExitCode(s);
  }
  if (echo) std::cerr << dpminimax::ConfigToJson(*config);

  const absl::Status status =
      dpminimax::RunSubcommand(subcommand, *config, std::cout, &std::cerr);
  if (!status.ok()) {
    std::cerr << "error: " << status.ToString() << "\n";
  }
  return ExitCode(status);
}
