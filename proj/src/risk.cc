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

#include "dpminimax/risk.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "dpminimax/csv.h"

namespace dpminimax {

absl::StatusOr<BestResponse> SolveBlock(const BlockProblem& problem,
                                        const InnerSolverOptions& options,
                                        const Vector* init) {
  if (problem.dim <= 0 || !(problem.radius >= 0.0) ||
      !(problem.smooth > 0.0)) {
    return absl::InvalidArgumentError(
        "block problem needs dim > 0, radius >= 0 and smooth > 0");
  }
  if (!(options.tol > 0.0) || options.max_iterations < 1) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "inner solver needs tol > 0 and max_iterations >= 1, got %g and %d",
        options.tol, options.max_iterations));
  }
  Vector x = Vector::Zero(problem.dim);
  if (init != nullptr) {
    if (init->size() != problem.dim || !AllFinite(*init)) {
      return absl::InvalidArgumentError("bad inner solver initialization");
    }
    x = *init;
    ProjectBallInPlace(x, problem.radius);
  }
  const double eta = 1.0 / problem.smooth;
  const double direction = problem.maximize ? 1.0 : -1.0;
  Vector grad(problem.dim), next(problem.dim);
  double residual = std::numeric_limits<double>::infinity();
  for (int64_t k = 0; k < options.max_iterations; ++k) {
    problem.gradient(x, grad);
    next = x + (direction * eta) * grad;
    ProjectBallInPlace(next, problem.radius);
    residual = (next - x).norm() / eta;
    if (residual <= options.tol) {
      return BestResponse{x, problem.value(x), residual, k};
    }
    x.swap(next);
  }
  return absl::ResourceExhaustedError(absl::StrFormat(
      "inner solver hit %d iterations with residual %g > tol %g",
      options.max_iterations, residual, options.tol));
}

absl::StatusOr<BestResponse> InnerMax(const ProblemInstance& inst,
                                      const DatasetObjective& objective,
                                      const Vector& w,
                                      const InnerSolverOptions& options,
                                      const Vector* init) {
  if (w.size() != inst.dim_w || !AllFinite(w)) {
    return absl::InvalidArgumentError("inner max: bad w");
  }
  BlockProblem problem;
  problem.dim = inst.dim_v;
  problem.radius = inst.radius_v;
  problem.smooth = inst.smooth;
  problem.maximize = true;
  problem.value = [&](const Vector& v) { return objective.Value(w, v); };
  Vector scratch(inst.dim_w);
  problem.gradient = [&](const Vector& v, Vector& grad) {
    objective.Gradients(w, v, scratch, grad);
  };
  return SolveBlock(problem, options, init);
}

absl::StatusOr<BestResponse> InnerMin(const ProblemInstance& inst,
                                      const DatasetObjective& objective,
                                      const Vector& v,
                                      const InnerSolverOptions& options,
                                      const Vector* init) {
  if (v.size() != inst.dim_v || !AllFinite(v)) {
    return absl::InvalidArgumentError("inner min: bad v");
  }
  BlockProblem problem;
  problem.dim = inst.dim_w;
  problem.radius = inst.radius_w;
  problem.smooth = inst.smooth;
  problem.maximize = false;
  problem.value = [&](const Vector& w) { return objective.Value(w, v); };
  Vector scratch(inst.dim_v);
  problem.gradient = [&](const Vector& w, Vector& grad) {
    objective.Gradients(w, v, grad, scratch);
  };
  return SolveBlock(problem, options, init);
}

absl::StatusOr<double> StrongPd(const ProblemInstance& inst,
                                const DatasetObjective& objective,
                                const Vector& w, const Vector& v,
                                const InnerSolverOptions& options) {
  absl::StatusOr<BestResponse> sup = InnerMax(inst, objective, w, options);
  if (!sup.ok()) return sup.status();
  absl::StatusOr<BestResponse> inf = InnerMin(inst, objective, v, options);
  if (!inf.ok()) return inf.status();
  return sup->value - inf->value;
}

absl::StatusOr<double> WeakPd(
    const ProblemInstance& inst, absl::Span<const ParameterPair> replicates,
    absl::Span<const DatasetObjective* const> objectives,
    const InnerSolverOptions& options) {
  const size_t R = replicates.size();
  if (R < 2) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "weak PD risk needs at least 2 replicates, got %d", R));
  }
  if (objectives.size() != 1 && objectives.size() != R) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "expected 1 or %d objectives, got %d", R, objectives.size()));
  }
  for (const ParameterPair& pair : replicates) {
    if (absl::Status s = inst.CheckArguments(pair.w, pair.v); !s.ok()) {
      return s;
    }
  }
  auto objective_for = [&](size_t r) -> const DatasetObjective& {
    return *objectives[objectives.size() == 1 ? 0 : r];
  };
  const double inv_r = 1.0 / static_cast<double>(R);

  BlockProblem sup;
  sup.dim = inst.dim_v;
  sup.radius = inst.radius_v;
  sup.smooth = inst.smooth;
  sup.maximize = true;
  sup.value = [&](const Vector& v) {
    double sum = 0.0;
    for (size_t r = 0; r < R; ++r) {
      sum += objective_for(r).Value(replicates[r].w, v);
    }
    return sum * inv_r;
  };
  Vector gw(inst.dim_w), gv(inst.dim_v);
  sup.gradient = [&](const Vector& v, Vector& grad) {
    grad.setZero();
    for (size_t r = 0; r < R; ++r) {
      objective_for(r).Gradients(replicates[r].w, v, gw, gv);
      grad += gv;
    }
    grad *= inv_r;
  };

  BlockProblem inf;
  inf.dim = inst.dim_w;
  inf.radius = inst.radius_w;
  inf.smooth = inst.smooth;
  inf.maximize = false;
  inf.value = [&](const Vector& w) {
    double sum = 0.0;
    for (size_t r = 0; r < R; ++r) {
      sum += objective_for(r).Value(w, replicates[r].v);
    }
    return sum * inv_r;
  };
  inf.gradient = [&](const Vector& w, Vector& grad) {
    grad.setZero();
    for (size_t r = 0; r < R; ++r) {
      objective_for(r).Gradients(w, replicates[r].v, gw, gv);
      grad += gw;
    }
    grad *= inv_r;
  };

  absl::StatusOr<BestResponse> hi = SolveBlock(sup, options);
  if (!hi.ok()) return hi.status();
  absl::StatusOr<BestResponse> lo = SolveBlock(inf, options);
  if (!lo.ok()) return lo.status();
  return hi->value - lo->value;
}

double PlainGap(const DatasetObjective& train, const DatasetObjective& eval,
                const Vector& w, const Vector& v) {
  return eval.Value(w, v) - train.Value(w, v);
}

absl::StatusOr<double> PrimalGap(const ProblemInstance& inst,
                                 const DatasetObjective& train,
                                 const DatasetObjective& eval, const Vector& w,
                                 const InnerSolverOptions& options) {
  absl::StatusOr<BestResponse> pop = InnerMax(inst, eval, w, options);
  if (!pop.ok()) return pop.status();
  absl::StatusOr<BestResponse> emp = InnerMax(inst, train, w, options);
  if (!emp.ok()) return emp.status();
  return pop->value - emp->value;
}

absl::StatusOr<GDistances> ComputeGDistances(
    const ProblemInstance& inst, const DatasetObjective& train,
    const Trajectory& traj, const InnerSolverOptions& options) {
  absl::StatusOr<BestResponse> w_star =
      InnerMin(inst, train, traj.avg_v, options);
  if (!w_star.ok()) return w_star.status();
  absl::StatusOr<BestResponse> v_star =
      InnerMax(inst, train, traj.avg_w, options);
  if (!v_star.ok()) return v_star.status();
  return GDistances{(w_star->argument - traj.avg_w).norm(),
                    (v_star->argument - traj.avg_v).norm()};
}

absl::StatusOr<RiskReport> EvaluateRisks(const ProblemInstance& inst,
                                         const DatasetObjective& train,
                                         const DatasetObjective& eval,
                                         int64_t n_eval, const Vector& w,
                                         const Vector& v,
                                         const InnerSolverOptions& options) {
  if (absl::Status s = inst.CheckArguments(w, v); !s.ok()) return s;
  RiskReport report;
  report.tol = options.tol;
  report.n_eval = n_eval;
  report.weak_pd_emp = std::numeric_limits<double>::quiet_NaN();
  report.weak_pd_pop = std::numeric_limits<double>::quiet_NaN();
  report.plain_emp = train.Value(w, v);
  report.plain_pop = eval.Value(w, v);

  struct Side {
    const DatasetObjective* objective;
    double* primal;
    double* strong;
  };
  for (const Side& side : {Side{&train, &report.primal_emp,
                                &report.strong_pd_emp},
                           Side{&eval, &report.primal_pop,
                                &report.strong_pd_pop}}) {
    absl::StatusOr<BestResponse> sup =
        InnerMax(inst, *side.objective, w, options);
    if (!sup.ok()) return sup.status();
    absl::StatusOr<BestResponse> inf =
        InnerMin(inst, *side.objective, v, options);
    if (!inf.ok()) return inf.status();
    *side.primal = sup->value;
    *side.strong = sup->value - inf->value;
    report.max_inner_iterations = std::max(
        {report.max_inner_iterations, sup->iterations, inf->iterations});
  }
  return report;
}

std::string RiskReportCsvHeader() {
  return "plain_emp,plain_pop,primal_emp,primal_pop,strong_pd_emp,"
         "strong_pd_pop,weak_pd_emp,weak_pd_pop,tol,max_inner_iterations,"
         "n_eval,replicates";
}

std::string RiskReportCsvRow(const RiskReport& r) {
  return absl::StrJoin(
      {Num(r.plain_emp), Num(r.plain_pop), Num(r.primal_emp),
       Num(r.primal_pop), Num(r.strong_pd_emp), Num(r.strong_pd_pop),
       Num(r.weak_pd_emp), Num(r.weak_pd_pop), Num(r.tol),
       Num(r.max_inner_iterations), Num(r.n_eval), Num(r.replicates)},
      ",");
}

}  // namespace dpminimax
