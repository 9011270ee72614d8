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

#ifndef DPMINIMAX_OPTIMIZER_H_
#define DPMINIMAX_OPTIMIZER_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpminimax/numerics.h"
#include "dpminimax/privacy.h"
#include "dpminimax/problem.h"

namespace dpminimax {

// eta_t = 1 / (rho (t + phi)), t = 1, 2, ...
struct Schedule {
  double rho = 1.0;
  double phi = 0.0;

  double Eta(int64_t t) const {
    return 1.0 / (rho * (static_cast<double>(t) + phi));
  }
  absl::Status Validate() const;
};

struct Trajectory {
  // (w_t, v_t) for t = 1..T+1, only when retention is requested.
  std::vector<std::pair<Vector, Vector>> iterates;
  // (1/T) sum_{t=1}^T of w_t and v_t. w_1 = v_1 = 0 is part of the sum and
  // the final iterate w_{T+1} is not.
  Vector avg_w;
  Vector avg_v;
  // w_{T+1}, v_{T+1}.
  Vector last_w;
  Vector last_v;
  int64_t T = 0;
  double sigma = 0.0;
  uint64_t noise_seed = 0;
};

struct RunOptions {
  bool retain_iterates = false;
};

// One simultaneous projected step: both gradients are taken at (w, v) before
// either block moves.
absl::StatusOr<std::pair<Vector, Vector>> GdaStep(
    const ProblemInstance& inst, const DatasetObjective& objective,
    const Vector& w, const Vector& v, double eta, const Vector& noise_w,
    const Vector& noise_v);

// Algorithm: w_1 = v_1 = 0; for t = 1..T draw b_w then b_v from N(0, sigma^2 I)
// on the stream seeded by noise_seed and take a GdaStep with eta_t. With no
// plan, or sigma = 0, no noise is drawn.
absl::StatusOr<Trajectory> RunGda(const ProblemInstance& inst,
                                  const DatasetObjective& objective, int64_t T,
                                  const Schedule& schedule,
                                  const std::optional<NoisePlan>& noise,
                                  uint64_t noise_seed,
                                  const RunOptions& options = {});

// Binds the dataset and runs.
absl::StatusOr<Trajectory> RunGda(const ProblemInstance& inst,
                                  const Dataset& data, int64_t T,
                                  const Schedule& schedule,
                                  const std::optional<NoisePlan>& noise,
                                  uint64_t noise_seed,
                                  const RunOptions& options = {});

// Runs on S and S_adj with the identical noise sequence. The datasets must
// have equal size and differ in at most one position.
absl::StatusOr<std::pair<Trajectory, Trajectory>> CoupledRuns(
    const ProblemInstance& inst, const Dataset& S, const Dataset& S_adj,
    int64_t T, const Schedule& schedule, const std::optional<NoisePlan>& noise,
    uint64_t noise_seed);

// Columns t, w_0..w_{dw-1}, v_0..v_{dv-1}. Requires retained iterates.
absl::Status WriteTrajectoryCsv(const Trajectory& traj, std::ostream& out);

}  // namespace dpminimax

#endif  // DPMINIMAX_OPTIMIZER_H_
