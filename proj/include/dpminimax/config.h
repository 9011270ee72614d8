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

#ifndef DPMINIMAX_CONFIG_H_
#define DPMINIMAX_CONFIG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "dpminimax/bounds.h"
#include "dpminimax/privacy.h"
#include "dpminimax/problem.h"
#include "dpminimax/risk.h"

namespace dpminimax {

struct InstanceConfig {
  // "quadratic" or "auc".
  std::string kind = "quadratic";
  RandomQuadraticOptions quadratic;
  AucSpec auc;
  uint64_t seed = 0;
};

// Iteration count as a function of n.
struct TRule {
  bool two_thirds = false;
  int64_t fixed = 1000;

  int64_t Resolve(int64_t n) const;
  std::string ToString() const;
};

// Largest T with T^3 <= n^2, computed in integers.
int64_t FloorTwoThirdsPower(int64_t n);

struct StabilityConfig {
  int num_indices = 10;
  int num_replacements = 5;
  bool fresh_noise = true;
};

struct NoiseCheckConfig {
  double sigma = 1.0;
  int p = 16;
  double zeta = 0.05;
  int64_t draws = 100000;
};

struct BoundsConfig {
  std::string name = "theorem2_gamma";
  BoundInputs inputs;
};

struct ExperimentConfig {
  InstanceConfig instance;
  std::vector<int> n_values{1000};
  TRule t_rule;
  // false runs plain GDA with sigma = 0.
  bool private_run = true;
  PrivacyBudget budget;
  double c = kDefaultNoiseMultiplier;
  int lambda_max = kDefaultLambdaMax;
  double phi = 0.0;
  int replicates = 1;
  uint64_t seed = 0;
  double zeta = 0.1;
  double iota = 0.5;
  InnerSolverOptions inner;
  int n_eval = 100000;
  // Stability parameter fed to the generalization bounds: "theory" uses the
  // stability bound with measured g_w, g_v; "empirical" uses the max coupled
  // distance from stability.num_indices x stability.num_replacements samples.
  std::string gamma_source = "theory";
  StabilityConfig stability;
  NoiseCheckConfig noise_check;
  BoundsConfig bounds;
  // Write a trajectory CSV per run cell.
  bool write_trajectories = false;
  std::string output = "out";
  int workers = 1;
};

// Parses and validates a JSON document. Missing keys take defaults, unknown
// keys are rejected, and errors name the offending key and its constraint.
absl::StatusOr<ExperimentConfig> ParseConfig(std::string_view json_text);

// Checks every field. ParseConfig calls this; callers that edit a parsed
// config (for example from command-line overrides) should call it again.
absl::Status ValidateConfig(const ExperimentConfig& config);

// JSON echo of the full config with defaults filled in. Parsing the echo
// yields the same config.
std::string ConfigToJson(const ExperimentConfig& config);

absl::StatusOr<ProblemInstance> BuildInstance(const InstanceConfig& config);

}  // namespace dpminimax

#endif  // DPMINIMAX_CONFIG_H_
