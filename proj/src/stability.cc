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

#include "dpminimax/stability.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "dpminimax/bounds.h"
#include "dpminimax/csv.h"
#include "dpminimax/parallel.h"

namespace dpminimax {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Nearest-rank quantile of a sorted sample.
double Quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return kNaN;
  const size_t rank = static_cast<size_t>(
      std::ceil(q * static_cast<double>(sorted.size())));
  return sorted[std::clamp<size_t>(rank, 1, sorted.size()) - 1];
}

}  // namespace

absl::StatusOr<Dataset> MakeAdjacent(const ProblemInstance& inst,
                                     const Dataset& S, int i,
                                     const Vector& z_new) {
  if (i < 0 || i >= S.n()) {
    return absl::OutOfRangeError(
        absl::StrFormat("index %d outside [0, %d)", i, S.n()));
  }
  if (!inst.model->InDataDomain(z_new)) {
    return absl::InvalidArgumentError(
        "replacement point lies outside the data domain");
  }
  Dataset adjacent = S;
  adjacent.points[i] = z_new;
  return adjacent;
}

double ArgumentDistance(const Trajectory& a, const Trajectory& b) {
  return (a.avg_w - b.avg_w).norm() + (a.avg_v - b.avg_v).norm();
}

absl::StatusOr<StabilityReport> EmpiricalGamma(
    const ProblemInstance& inst, const Dataset& S, int64_t T,
    const Schedule& schedule, const std::optional<NoisePlan>& noise,
    const StabilityOptions& options, uint64_t seed) {
  if (options.num_indices < 1 || options.num_indices > S.n()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "num_indices must lie in [1, n=%d], got %d", S.n(),
        options.num_indices));
  }
  if (options.num_replacements < 1) {
    return absl::InvalidArgumentError("num_replacements must be >= 1");
  }
  absl::StatusOr<std::unique_ptr<DatasetObjective>> train = inst.Bind(S);
  if (!train.ok()) return train.status();

  // Distinct indices by a partial Fisher-Yates shuffle.
  std::vector<int> order(S.n());
  std::iota(order.begin(), order.end(), 0);
  Rng index_rng(DeriveSeed(seed, "indices"));
  for (int j = 0; j < options.num_indices; ++j) {
    const int k = j + static_cast<int>(index_rng.NextBelow(S.n() - j));
    std::swap(order[j], order[k]);
  }

  const int count = options.num_indices * options.num_replacements;
  const uint64_t replace_root = DeriveSeed(seed, "replacements");
  const uint64_t noise_root = DeriveSeed(seed, "noise");
  const bool admissible = ZetaAdmissible(inst.p(), options.zeta);
  const double sigma = noise.has_value() ? noise->sigma : 0.0;

  StabilityReport report;
  report.samples.resize(count);
  absl::Status status = ParallelFor(count, options.workers, [&](size_t k) {
    StabilitySample& sample = report.samples[k];
    sample.index = order[k / options.num_replacements];
    sample.replacement = static_cast<int>(k % options.num_replacements);
    sample.replacement_seed = DeriveSeed(replace_root, uint64_t{k});
    sample.noise_seed = options.fresh_noise_per_sample
                            ? DeriveSeed(noise_root, uint64_t{k})
                            : noise_root;
    Rng replace_rng(sample.replacement_seed);
    absl::StatusOr<Dataset> adjacent = MakeAdjacent(
        inst, S, sample.index, inst.model->SamplePoint(replace_rng));
    if (!adjacent.ok()) return adjacent.status();
    absl::StatusOr<std::pair<Trajectory, Trajectory>> runs = CoupledRuns(
        inst, S, *adjacent, T, schedule, noise, sample.noise_seed);
    if (!runs.ok()) return runs.status();
    sample.distance = ArgumentDistance(runs->first, runs->second);
    sample.gamma_theory = kNaN;
    if (!options.compute_theory) return absl::OkStatus();
    absl::StatusOr<GDistances> g =
        ComputeGDistances(inst, **train, runs->first, options.inner);
    if (!g.ok()) return g.status();
    sample.g_w = g->g_w;
    sample.g_v = g->g_v;
    if (!admissible) return absl::OkStatus();
    BoundInputs in;
    in.G = inst.lipschitz;
    in.rho = inst.rho;
    in.L = inst.smooth;
    in.M_ell = inst.loss_bound;
    in.M_W = inst.radius_w;
    in.M_V = inst.radius_v;
    in.sigma = sigma;
    in.T = static_cast<double>(T);
    in.n = S.n();
    in.p = inst.p();
    in.zeta = options.zeta;
    in.g_w = g->g_w;
    in.g_v = g->g_v;
    absl::StatusOr<double> gamma = Theorem2Gamma(in);
    if (!gamma.ok()) return gamma.status();
    sample.gamma_theory = *gamma;
    return absl::OkStatus();
  });
  if (!status.ok()) return status;

  std::vector<double> distances, bounds;
  int contained = 0;
  for (const StabilitySample& s : report.samples) {
    distances.push_back(s.distance);
    if (std::isfinite(s.gamma_theory)) {
      bounds.push_back(s.gamma_theory);
      if (s.distance <= s.gamma_theory) ++contained;
    }
  }
  std::sort(distances.begin(), distances.end());
  std::sort(bounds.begin(), bounds.end());
  report.max = distances.back();
  report.mean = std::accumulate(distances.begin(), distances.end(), 0.0) /
                static_cast<double>(distances.size());
  report.q50 = Quantile(distances, 0.5);
  report.q90 = Quantile(distances, 0.9);
  report.theory_admissible = admissible && options.compute_theory;
  report.theoretical_gamma = Quantile(bounds, 0.5);
  report.containment_rate =
      bounds.empty() ? kNaN
                     : static_cast<double>(contained) /
                           static_cast<double>(bounds.size());
  report.n = S.n();
  report.T = T;
  report.sigma = sigma;
  report.zeta = options.zeta;
  report.seed = seed;
  return report;
}

absl::Status WriteStabilityCsv(absl::Span<const StabilityReport> reports,
                               std::ostream& out) {
  WriteSchemaLine(out, "stability", 1);
  out << "kind,n,T,sigma,zeta,index,replacement,replacement_seed,noise_seed,"
         "distance,g_w,g_v,gamma_theoretical,containment_rate\n";
  for (const StabilityReport& report : reports) {
    const std::string prefix = absl::StrJoin(
        {Num(report.n), Num(report.T), Num(report.sigma), Num(report.zeta)},
        ",");
    for (const StabilitySample& s : report.samples) {
      out << "sample," << prefix << ","
          << absl::StrJoin({Num(s.index), Num(s.replacement),
                            Num(s.replacement_seed), Num(s.noise_seed),
                            Num(s.distance), Num(s.g_w), Num(s.g_v),
                            Num(s.gamma_theory)},
                           ",")
          << ",\n";
    }
    out << "summary," << prefix << ",,,,," << Num(report.max) << ",,,"
        << Num(report.theoretical_gamma) << ","
        << Num(report.containment_rate) << "\n";
  }
  if (!out) return absl::DataLossError("failed writing stability CSV");
  return absl::OkStatus();
}

}  // namespace dpminimax
