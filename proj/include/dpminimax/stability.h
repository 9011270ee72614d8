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

#ifndef DPMINIMAX_STABILITY_H_
#define DPMINIMAX_STABILITY_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "dpminimax/optimizer.h"
#include "dpminimax/privacy.h"
#include "dpminimax/problem.h"
#include "dpminimax/risk.h"

namespace dpminimax {

// Copy of S with position i replaced by z_new.
absl::StatusOr<Dataset> MakeAdjacent(const ProblemInstance& inst,
                                     const Dataset& S, int i,
                                     const Vector& z_new);

// ||w_bar - w_bar'|| + ||v_bar - v_bar'||.
double ArgumentDistance(const Trajectory& a, const Trajectory& b);

struct StabilityOptions {
  // Distinct indices sampled from [0, n), each replaced num_replacements
  // times by fresh draws from the data distribution.
  int num_indices = 10;
  int num_replacements = 5;
  double zeta = 0.1;
  int workers = 1;
  // Every sample gets its own noise stream, shared by its two coupled runs.
  // When false all samples reuse one stream.
  bool fresh_noise_per_sample = true;
  // Measure g_w, g_v on the S-run and evaluate the stability bound per sample.
  bool compute_theory = true;
  InnerSolverOptions inner;
};

struct StabilitySample {
  int index = 0;
  int replacement = 0;
  uint64_t replacement_seed = 0;
  uint64_t noise_seed = 0;
  double distance = 0.0;
  double g_w = 0.0;
  double g_v = 0.0;
  // NaN when zeta is outside (exp(-p/8), 1) or theory is off.
  double gamma_theory = 0.0;
};

struct StabilityReport {
  std::vector<StabilitySample> samples;
  double max = 0.0;
  double mean = 0.0;
  double q50 = 0.0;
  double q90 = 0.0;
  // Median of the per-sample bounds.
  double theoretical_gamma = 0.0;
  bool theory_admissible = false;
  // Fraction of samples with distance <= their own bound.
  double containment_rate = 0.0;
  int n = 0;
  int64_t T = 0;
  double sigma = 0.0;
  double zeta = 0.0;
  uint64_t seed = 0;
};

// Samples adjacent pairs (S, S^(i)) and measures the argument distance of
// coupled runs. The reported max understates the supremum over all adjacent
// pairs.
absl::StatusOr<StabilityReport> EmpiricalGamma(
    const ProblemInstance& inst, const Dataset& S, int64_t T,
    const Schedule& schedule, const std::optional<NoisePlan>& noise,
    const StabilityOptions& options, uint64_t seed);

// Schema line and header, then for each report one "sample" row per sample
// and a "summary" row holding the max distance, the median bound and the
// containment rate.
absl::Status WriteStabilityCsv(absl::Span<const StabilityReport> reports,
                               std::ostream& out);

}  // namespace dpminimax

#endif  // DPMINIMAX_STABILITY_H_
