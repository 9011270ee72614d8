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

#ifndef DPMINIMAX_RISK_H_
#define DPMINIMAX_RISK_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "dpminimax/numerics.h"
#include "dpminimax/optimizer.h"
#include "dpminimax/problem.h"

namespace dpminimax {

struct InnerSolverOptions {
  // Bound on the gradient-mapping norm at the returned point.
  double tol = 1e-8;
  int64_t max_iterations = 1000000;
};

struct BestResponse {
  Vector argument;
  double value = 0.0;
  double residual = 0.0;
  int64_t iterations = 0;
};

// Maximizes a concave (or minimizes a convex) smooth function over a ball by
// projected gradient with constant step 1/smooth. Stops once the gradient
// mapping ||x - Proj(x +/- grad/smooth)|| * smooth is at most tol. Hitting the
// iteration cap yields ResourceExhausted with the last residual.
struct BlockProblem {
  int dim = 0;
  double radius = 0.0;
  double smooth = 0.0;
  bool maximize = true;
  std::function<double(const Vector&)> value;
  std::function<void(const Vector&, Vector&)> gradient;
};

absl::StatusOr<BestResponse> SolveBlock(const BlockProblem& problem,
                                        const InnerSolverOptions& options,
                                        const Vector* init = nullptr);

// argmax_v L(w, v) over the V ball; `init` defaults to the origin.
absl::StatusOr<BestResponse> InnerMax(const ProblemInstance& inst,
                                      const DatasetObjective& objective,
                                      const Vector& w,
                                      const InnerSolverOptions& options = {},
                                      const Vector* init = nullptr);
// argmin_w L(w, v) over the W ball.
absl::StatusOr<BestResponse> InnerMin(const ProblemInstance& inst,
                                      const DatasetObjective& objective,
                                      const Vector& v,
                                      const InnerSolverOptions& options = {},
                                      const Vector* init = nullptr);

// sup_v' L(w, v') - inf_w' L(w', v). On the training objective this is the
// empirical strong PD risk; on an eval objective it estimates the population
// one.
absl::StatusOr<double> StrongPd(const ProblemInstance& inst,
                                const DatasetObjective& objective,
                                const Vector& w, const Vector& v,
                                const InnerSolverOptions& options = {});

struct ParameterPair {
  Vector w;
  Vector v;
};

// Replicate estimate of the weak PD risk:
//   sup_v' (1/R) sum_r L_r(w_r, v') - inf_w' (1/R) sum_r L_r(w', v_r).
// `objectives` holds either one function shared by all replicates (population
// estimate) or one per replicate (each replicate's own training set). Needs
// R >= 2.
absl::StatusOr<double> WeakPd(
    const ProblemInstance& inst, absl::Span<const ParameterPair> replicates,
    absl::Span<const DatasetObjective* const> objectives,
    const InnerSolverOptions& options = {});

// L_eval(w, v) - L_train(w, v).
double PlainGap(const DatasetObjective& train, const DatasetObjective& eval,
                const Vector& w, const Vector& v);

// R_eval(w) - R_train(w) with R(w) = sup_v L(w, v).
absl::StatusOr<double> PrimalGap(const ProblemInstance& inst,
                                 const DatasetObjective& train,
                                 const DatasetObjective& eval, const Vector& w,
                                 const InnerSolverOptions& options = {});

struct GDistances {
  double g_w = 0.0;
  double g_v = 0.0;
};

// g_w = ||argmin_w L_S(w, v_bar) - w_bar||, g_v = ||argmax_v L_S(w_bar, v) -
// v_bar|| for the averaged output of the trajectory.
absl::StatusOr<GDistances> ComputeGDistances(
    const ProblemInstance& inst, const DatasetObjective& train,
    const Trajectory& traj, const InnerSolverOptions& options = {});

struct RiskReport {
  double plain_emp = 0.0;
  double plain_pop = 0.0;
  double primal_emp = 0.0;
  double primal_pop = 0.0;
  double strong_pd_emp = 0.0;
  double strong_pd_pop = 0.0;
  // NaN unless replicate pairs were supplied.
  double weak_pd_emp = 0.0;
  double weak_pd_pop = 0.0;
  double tol = 0.0;
  int64_t max_inner_iterations = 0;
  int64_t n_eval = 0;
  int replicates = 0;

  double plain_gap() const { return plain_pop - plain_emp; }
  double primal_gap() const { return primal_pop - primal_emp; }
};

// Strong, primal and plain measures for one trained pair.
absl::StatusOr<RiskReport> EvaluateRisks(const ProblemInstance& inst,
                                         const DatasetObjective& train,
                                         const DatasetObjective& eval,
                                         int64_t n_eval, const Vector& w,
                                         const Vector& v,
                                         const InnerSolverOptions& options = {});

std::string RiskReportCsvHeader();
std::string RiskReportCsvRow(const RiskReport& report);

}  // namespace dpminimax

#endif  // DPMINIMAX_RISK_H_
