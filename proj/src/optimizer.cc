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

#include "dpminimax/optimizer.h"

#include <cmath>

#include "absl/strings/str_format.h"
#include "dpminimax/csv.h"

namespace dpminimax {

absl::Status Schedule::Validate() const {
  if (!(rho > 0.0) || !std::isfinite(rho)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("schedule rho must be positive, got %g", rho));
  }
  if (!(phi >= 0.0) || !std::isfinite(phi)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("schedule phi must be >= 0, got %g", phi));
  }
  return absl::OkStatus();
}

absl::StatusOr<std::pair<Vector, Vector>> GdaStep(
    const ProblemInstance& inst, const DatasetObjective& objective,
    const Vector& w, const Vector& v, double eta, const Vector& noise_w,
    const Vector& noise_v) {
  if (absl::Status s = inst.CheckArguments(w, v); !s.ok()) return s;
  if (noise_w.size() != inst.dim_w || noise_v.size() != inst.dim_v) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "noise dims (%d, %d) do not match (%d, %d)", noise_w.size(),
        noise_v.size(), inst.dim_w, inst.dim_v));
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("step size must be positive, got %g", eta));
  }
  Vector gw(inst.dim_w), gv(inst.dim_v);
  objective.Gradients(w, v, gw, gv);
  Vector w_next = w - eta * (gw + noise_w);
  Vector v_next = v + eta * (gv + noise_v);
  ProjectBallInPlace(w_next, inst.radius_w);
  ProjectBallInPlace(v_next, inst.radius_v);
  return std::make_pair(std::move(w_next), std::move(v_next));
}

absl::StatusOr<Trajectory> RunGda(const ProblemInstance& inst,
                                  const DatasetObjective& objective, int64_t T,
                                  const Schedule& schedule,
                                  const std::optional<NoisePlan>& noise,
                                  uint64_t noise_seed,
                                  const RunOptions& options) {
  if (T < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("T must be >= 1, got %d", T));
  }
  if (absl::Status s = schedule.Validate(); !s.ok()) return s;
  double sigma = 0.0;
  if (noise.has_value()) {
    if (noise->T != T) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "noise plan was calibrated for T=%d but the run uses T=%d", noise->T,
          T));
    }
    if (!noise->verified) {
      return absl::FailedPreconditionError(absl::StrFormat(
          "noise plan sigma=%g does not verify: achieved delta %g > %g",
          noise->sigma, noise->achieved_delta, noise->budget.delta));
    }
    sigma = noise->sigma;
  }

  Trajectory traj;
  traj.T = T;
  traj.sigma = sigma;
  traj.noise_seed = noise_seed;
  Vector w = Vector::Zero(inst.dim_w), v = Vector::Zero(inst.dim_v);
  Vector sum_w = Vector::Zero(inst.dim_w), sum_v = Vector::Zero(inst.dim_v);
  Vector gw(inst.dim_w), gv(inst.dim_v);
  Vector bw(inst.dim_w), bv(inst.dim_v);
  Rng rng(noise_seed);
  if (options.retain_iterates) traj.iterates.reserve(T + 1);

  for (int64_t t = 1; t <= T; ++t) {
    if (options.retain_iterates) traj.iterates.emplace_back(w, v);
    sum_w += w;
    sum_v += v;
    const double eta = schedule.Eta(t);
    objective.Gradients(w, v, gw, gv);
    if (sigma > 0.0) {
      FillGaussian(sigma, rng, bw);
      FillGaussian(sigma, rng, bv);
      gw += bw;
      gv += bv;
    }
    w -= eta * gw;
    v += eta * gv;
    ProjectBallInPlace(w, inst.radius_w);
    ProjectBallInPlace(v, inst.radius_v);
    if (!AllFinite(w) || !AllFinite(v)) {
      return absl::InternalError(
          absl::StrFormat("non-finite iterate at t=%d", t));
    }
  }
  if (options.retain_iterates) traj.iterates.emplace_back(w, v);
  const double inv_t = 1.0 / static_cast<double>(T);
  traj.avg_w = sum_w * inv_t;
  traj.avg_v = sum_v * inv_t;
  traj.last_w = std::move(w);
  traj.last_v = std::move(v);
  return traj;
}

absl::StatusOr<Trajectory> RunGda(const ProblemInstance& inst,
                                  const Dataset& data, int64_t T,
                                  const Schedule& schedule,
                                  const std::optional<NoisePlan>& noise,
                                  uint64_t noise_seed,
                                  const RunOptions& options) {
  absl::StatusOr<std::unique_ptr<DatasetObjective>> objective =
      inst.Bind(data);
  if (!objective.ok()) return objective.status();
  return RunGda(inst, **objective, T, schedule, noise, noise_seed, options);
}

absl::StatusOr<std::pair<Trajectory, Trajectory>> CoupledRuns(
    const ProblemInstance& inst, const Dataset& S, const Dataset& S_adj,
    int64_t T, const Schedule& schedule, const std::optional<NoisePlan>& noise,
    uint64_t noise_seed) {
  if (S.n() != S_adj.n()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "adjacent datasets must have equal size, got %d and %d", S.n(),
        S_adj.n()));
  }
  int differing = 0;
  for (int i = 0; i < S.n(); ++i) {
    if (S.points[i].size() != S_adj.points[i].size() ||
        S.points[i] != S_adj.points[i]) {
      ++differing;
    }
  }
  if (differing > 1) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "datasets are not adjacent: they differ in %d positions", differing));
  }
  absl::StatusOr<Trajectory> a = RunGda(inst, S, T, schedule, noise, noise_seed);
  if (!a.ok()) return a.status();
  absl::StatusOr<Trajectory> b =
      RunGda(inst, S_adj, T, schedule, noise, noise_seed);
  if (!b.ok()) return b.status();
  return std::make_pair(*std::move(a), *std::move(b));
}

absl::Status WriteTrajectoryCsv(const Trajectory& traj, std::ostream& out) {
  if (traj.iterates.empty()) {
    return absl::FailedPreconditionError(
        "trajectory export needs retained iterates");
  }
  const Eigen::Index dw = traj.iterates.front().first.size();
  const Eigen::Index dv = traj.iterates.front().second.size();
  WriteSchemaLine(out, "trajectory", 1);
  out << "t";
  for (Eigen::Index j = 0; j < dw; ++j) out << ",w_" << j;
  for (Eigen::Index j = 0; j < dv; ++j) out << ",v_" << j;
  out << "\n";
  for (size_t t = 0; t < traj.iterates.size(); ++t) {
    out << t + 1;
    for (Eigen::Index j = 0; j < dw; ++j) {
      out << "," << Num(traj.iterates[t].first[j]);
    }
    for (Eigen::Index j = 0; j < dv; ++j) {
      out << "," << Num(traj.iterates[t].second[j]);
    }
    out << "\n";
  }
  if (!out) return absl::DataLossError("failed writing trajectory CSV");
  return absl::OkStatus();
}

}  // namespace dpminimax
