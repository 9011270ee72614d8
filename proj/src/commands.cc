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

#include "dpminimax/commands.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "dpminimax/bounds.h"
#include "dpminimax/csv.h"
#include "dpminimax/numerics.h"
#include "dpminimax/optimizer.h"
#include "dpminimax/parallel.h"
#include "dpminimax/privacy.h"
#include "dpminimax/risk.h"
#include "dpminimax/stability.h"

namespace dpminimax {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

class Progress {
 public:
  explicit Progress(std::ostream* out) : out_(out) {}
  void Line(const std::string& line) {
    if (out_ == nullptr) return;
    std::lock_guard<std::mutex> lock(mu_);
    *out_ << line << "\n" << std::flush;
  }

 private:
  std::ostream* out_;
  std::mutex mu_;
};

// Seeds of one (n, replicate) cell. Every stream hangs off the config seed
// by label, so cells are independent of scheduling and of each other.
struct CellSeeds {
  uint64_t data;
  uint64_t noise;
  uint64_t stability;
};

CellSeeds SeedsFor(uint64_t seed, int n, int replicate) {
  const uint64_t cell = DeriveSeed(
      DeriveSeed(DeriveSeed(seed, "cell"), static_cast<uint64_t>(n)),
      static_cast<uint64_t>(replicate));
  return {DeriveSeed(cell, "data"), DeriveSeed(cell, "noise"),
          DeriveSeed(cell, "stability")};
}

uint64_t EvalSeed(uint64_t seed) { return DeriveSeed(seed, "eval"); }

int64_t Mechanisms(int64_t T) { return kStreamsPerIteration * T; }

// Calibrated and verified plan, or std::nullopt for a non-private config.
absl::StatusOr<NoisePlan> Calibrate(const ExperimentConfig& config,
                                    const ProblemInstance& inst, int n,
                                    int64_t T) {
  absl::StatusOr<NoisePlan> plan =
      CalibrateSigma(inst.lipschitz, T, n, config.budget, config.c);
  if (!plan.ok()) return plan.status();
  if (plan->lambda_max != config.lambda_max) {
    plan->lambda_max = config.lambda_max;
    VerifyBudget(*plan, config.budget);
  }
  return plan;
}

absl::StatusOr<std::optional<NoisePlan>> PlanFor(const ExperimentConfig& config,
                                                 const ProblemInstance& inst,
                                                 int n, int64_t T) {
  if (!config.private_run) return std::optional<NoisePlan>();
  absl::StatusOr<NoisePlan> plan = Calibrate(config, inst, n, T);
  if (!plan.ok()) return plan.status();
  if (!plan->verified) {
    return absl::FailedPreconditionError(absl::StrFormat(
        "noise plan for n=%d T=%d fails the privacy check: achieved delta "
        "%.17g > %.17g",
        n, T, plan->achieved_delta, config.budget.delta));
  }
  return std::optional<NoisePlan>(*plan);
}

Schedule ScheduleFor(const ExperimentConfig& config,
                     const ProblemInstance& inst) {
  Schedule schedule;
  schedule.rho = inst.rho;
  schedule.phi = config.phi;
  return schedule;
}

BoundInputs InputsFor(const ExperimentConfig& config,
                      const ProblemInstance& inst, int n, int64_t T,
                      double sigma) {
  BoundInputs in;
  in.G = inst.lipschitz;
  in.rho = inst.rho;
  in.L = inst.smooth;
  in.M_ell = inst.loss_bound;
  in.M_W = inst.radius_w;
  in.M_V = inst.radius_v;
  in.sigma = sigma;
  in.T = static_cast<double>(T);
  in.n = n;
  in.p = inst.p();
  in.epsilon = config.budget.epsilon;
  in.delta = config.budget.delta;
  in.zeta = config.zeta;
  in.iota = config.iota;
  return in;
}

StabilityOptions StabilityOptionsFor(const ExperimentConfig& config,
                                     int workers) {
  StabilityOptions options;
  options.num_indices = config.stability.num_indices;
  options.num_replacements = config.stability.num_replacements;
  options.fresh_noise_per_sample = config.stability.fresh_noise;
  options.zeta = config.zeta;
  options.workers = workers;
  options.inner = config.inner;
  return options;
}

// Value of a bound, or NaN when its inputs are unavailable.
double BoundValue(absl::StatusOr<BoundEvaluation> (*bound)(const BoundInputs&),
                  const BoundInputs& in) {
  if (!std::isfinite(in.gamma)) return kNaN;
  absl::StatusOr<BoundEvaluation> value = bound(in);
  return value.ok() ? value->value : kNaN;
}

// Shared per-n state: the instance and the population proxy.
struct Setup {
  ProblemInstance inst;
  std::unique_ptr<DatasetObjective> eval;
};

absl::StatusOr<Setup> MakeSetup(const ExperimentConfig& config,
                                bool need_eval) {
  Setup setup;
  absl::StatusOr<ProblemInstance> inst = BuildInstance(config.instance);
  if (!inst.ok()) return inst.status();
  setup.inst = *std::move(inst);
  if (need_eval) {
    absl::StatusOr<Dataset> eval =
        EvalSet(setup.inst, config.n_eval, EvalSeed(config.seed));
    if (!eval.ok()) return eval.status();
    absl::StatusOr<std::unique_ptr<DatasetObjective>> bound =
        setup.inst.Bind(*eval);
    if (!bound.ok()) return bound.status();
    setup.eval = *std::move(bound);
  }
  return setup;
}

int CellCount(const ExperimentConfig& config) {
  return static_cast<int>(config.n_values.size()) * config.replicates;
}

// Lowest-index failure among per-cell statuses.
size_t FirstFailure(const std::vector<absl::Status>& status) {
  for (size_t i = 0; i < status.size(); ++i) {
    if (!status[i].ok()) return i;
  }
  return status.size();
}

CommandOutput Fail(absl::Status status) {
  CommandOutput out;
  out.status = std::move(status);
  return out;
}

}  // namespace

CommandOutput CalibrateCommand(const ExperimentConfig& config,
                               std::ostream* progress) {
  absl::StatusOr<Setup> setup = MakeSetup(config, /*need_eval=*/false);
  if (!setup.ok()) return Fail(setup.status());
  const ProblemInstance& inst = setup->inst;
  Progress log(progress);

  std::ostringstream csv, text;
  WriteSchemaLine(csv, "calibrate", 1);
  csv << "n,T,G,epsilon,delta,c,lambda_max,mechanisms,sigma,achieved_delta,"
         "log_achieved_delta,lambda_star,verified\n";
  CommandOutput out;
  for (int n : config.n_values) {
    const int64_t T = config.t_rule.Resolve(n);
    absl::StatusOr<NoisePlan> plan = Calibrate(config, inst, n, T);
    if (!plan.ok()) {
      out.status = plan.status();
      break;
    }
    log.Line(absl::StrFormat("calibrate n=%d T=%d sigma=%.6g verified=%d", n,
                             T, plan->sigma, plan->verified));
    csv << absl::StrJoin(
               {Num(n), Num(T), Num(plan->G), Num(config.budget.epsilon),
                Num(config.budget.delta), Num(plan->c), Num(plan->lambda_max),
                Num(Mechanisms(T)), Num(plan->sigma),
                Num(plan->achieved_delta), Num(plan->log_achieved_delta),
                Num(plan->lambda_star), Num(plan->verified ? 1 : 0)},
               ",")
        << "\n";
    text << "n=" << n << "\nT=" << T << "\nG=" << Num(plan->G)
         << "\nepsilon=" << Num(config.budget.epsilon)
         << "\ndelta=" << Num(config.budget.delta) << "\nc=" << Num(plan->c)
         << "\nlambda_max=" << plan->lambda_max
         << "\nmechanisms=" << Mechanisms(T) << "\nsigma=" << Num(plan->sigma)
         << "\nachieved_delta=" << Num(plan->achieved_delta)
         << "\nlog_achieved_delta=" << Num(plan->log_achieved_delta)
         << "\nlambda_star=" << plan->lambda_star
         << "\nverified=" << (plan->verified ? "true" : "false") << "\n\n";
    if (!plan->verified && out.status.ok()) {
      out.status = absl::FailedPreconditionError(absl::StrFormat(
          "noise plan for n=%d T=%d fails the privacy check", n, T));
    }
  }
  out.csv = csv.str();
  out.text = text.str();
  return out;
}

CommandOutput RunCommand(const ExperimentConfig& config,
                         std::ostream* progress) {
  absl::StatusOr<Setup> setup = MakeSetup(config, /*need_eval=*/true);
  if (!setup.ok()) return Fail(setup.status());
  const ProblemInstance& inst = setup->inst;
  const Schedule schedule = ScheduleFor(config, inst);
  Progress log(progress);

  const int cells = CellCount(config);
  std::vector<std::string> rows(cells), trajectories(cells);
  std::vector<absl::Status> status(cells);
  ParallelFor(cells, config.workers, [&](size_t k) {
    status[k] = [&]() -> absl::Status {
      const int n = config.n_values[k / config.replicates];
      const int r = static_cast<int>(k % config.replicates);
      const int64_t T = config.t_rule.Resolve(n);
      const CellSeeds seeds = SeedsFor(config.seed, n, r);
      absl::StatusOr<std::optional<NoisePlan>> plan =
          PlanFor(config, inst, n, T);
      if (!plan.ok()) return plan.status();
      absl::StatusOr<Dataset> data = GenDataset(inst, n, seeds.data);
      if (!data.ok()) return data.status();
      absl::StatusOr<std::unique_ptr<DatasetObjective>> train = inst.Bind(*data);
      if (!train.ok()) return train.status();
      RunOptions run_options;
      run_options.retain_iterates = config.write_trajectories;
      absl::StatusOr<Trajectory> traj = RunGda(
          inst, **train, T, schedule, *plan, seeds.noise, run_options);
      if (!traj.ok()) return traj.status();
      absl::StatusOr<RiskReport> risks =
          EvaluateRisks(inst, **train, *setup->eval, config.n_eval,
                        traj->avg_w, traj->avg_v, config.inner);
      if (!risks.ok()) return risks.status();
      absl::StatusOr<GDistances> g =
          ComputeGDistances(inst, **train, *traj, config.inner);
      if (!g.ok()) return g.status();
      rows[k] = absl::StrCat(
          absl::StrJoin({Num(n), Num(T), Num(traj->sigma), Num(r),
                         Num(seeds.data), Num(seeds.noise)},
                        ","),
          ",", RiskReportCsvRow(*risks), ",", Num(g->g_w), ",", Num(g->g_v),
          "\n");
      if (config.write_trajectories) {
        std::ostringstream t;
        if (absl::Status s = WriteTrajectoryCsv(*traj, t); !s.ok()) return s;
        trajectories[k] = t.str();
      }
      log.Line(absl::StrFormat("run n=%d replicate=%d done", n, r));
      return absl::OkStatus();
    }();
    return absl::OkStatus();
  }).IgnoreError();

  CommandOutput out;
  std::ostringstream csv;
  WriteSchemaLine(csv, "run", 1);
  csv << "n,T,sigma,replicate,data_seed,noise_seed," << RiskReportCsvHeader()
      << ",g_w,g_v\n";
  const size_t first = FirstFailure(status);
  for (size_t k = 0; k < first; ++k) {
    csv << rows[k];
    if (config.write_trajectories) {
      const int n = config.n_values[k / config.replicates];
      const int r = static_cast<int>(k % config.replicates);
      out.extra_files.emplace_back(
          absl::StrFormat("trajectory_n%d_r%d.csv", n, r), trajectories[k]);
    }
  }
  if (first < status.size()) out.status = status[first];
  out.csv = csv.str();
  return out;
}

CommandOutput StabilityCommand(const ExperimentConfig& config,
                               std::ostream* progress) {
  absl::StatusOr<Setup> setup = MakeSetup(config, /*need_eval=*/false);
  if (!setup.ok()) return Fail(setup.status());
  const ProblemInstance& inst = setup->inst;
  const Schedule schedule = ScheduleFor(config, inst);
  Progress log(progress);

  CommandOutput out;
  std::vector<StabilityReport> reports;
  std::ostringstream text;
  for (int n : config.n_values) {
    const int64_t T = config.t_rule.Resolve(n);
    const CellSeeds seeds = SeedsFor(config.seed, n, 0);
    absl::StatusOr<std::optional<NoisePlan>> plan = PlanFor(config, inst, n, T);
    if (!plan.ok()) {
      out.status = plan.status();
      break;
    }
    absl::StatusOr<Dataset> data = GenDataset(inst, n, seeds.data);
    if (!data.ok()) {
      out.status = data.status();
      break;
    }
    absl::StatusOr<StabilityReport> report =
        EmpiricalGamma(inst, *data, T, schedule, *plan,
                       StabilityOptionsFor(config, config.workers),
                       seeds.stability);
    if (!report.ok()) {
      out.status = report.status();
      break;
    }
    log.Line(absl::StrFormat("stability n=%d T=%d max=%.6g", n, T,
                             report->max));
    text << absl::StrFormat(
        "n=%d T=%d sigma=%s max=%s q90=%s theoretical_gamma=%s "
        "containment_rate=%s\n",
        n, T, Num(report->sigma), Num(report->max), Num(report->q90),
        Num(report->theoretical_gamma), Num(report->containment_rate));
    reports.push_back(*std::move(report));
  }
  std::ostringstream csv;
  if (absl::Status s = WriteStabilityCsv(reports, csv); !s.ok() &&
                                                        out.status.ok()) {
    out.status = s;
  }
  out.csv = csv.str();
  out.text = text.str();
  return out;
}

CommandOutput GeneralizationCommand(const ExperimentConfig& config,
                                    std::ostream* progress) {
  absl::StatusOr<Setup> setup = MakeSetup(config, /*need_eval=*/true);
  if (!setup.ok()) return Fail(setup.status());
  const ProblemInstance& inst = setup->inst;
  const Schedule schedule = ScheduleFor(config, inst);
  const bool empirical_gamma = config.gamma_source == "empirical";
  const bool admissible = ZetaAdmissible(inst.p(), config.zeta);
  Progress log(progress);

  struct Cell {
    int n = 0;
    int64_t T = 0;
    double sigma = 0.0;
    std::unique_ptr<DatasetObjective> train;
    Vector w, v;
    RiskReport risks;
    GDistances g;
    double gamma_theory = kNaN;
    double gamma_empirical = kNaN;
  };
  const int cells = CellCount(config);
  std::vector<Cell> results(cells);
  std::vector<absl::Status> status(cells);
  ParallelFor(cells, config.workers, [&](size_t k) {
    status[k] = [&]() -> absl::Status {
      Cell& cell = results[k];
      cell.n = config.n_values[k / config.replicates];
      const int r = static_cast<int>(k % config.replicates);
      cell.T = config.t_rule.Resolve(cell.n);
      const CellSeeds seeds = SeedsFor(config.seed, cell.n, r);
      absl::StatusOr<std::optional<NoisePlan>> plan =
          PlanFor(config, inst, cell.n, cell.T);
      if (!plan.ok()) return plan.status();
      absl::StatusOr<Dataset> data = GenDataset(inst, cell.n, seeds.data);
      if (!data.ok()) return data.status();
      absl::StatusOr<std::unique_ptr<DatasetObjective>> train = inst.Bind(*data);
      if (!train.ok()) return train.status();
      cell.train = *std::move(train);
      absl::StatusOr<Trajectory> traj =
          RunGda(inst, *cell.train, cell.T, schedule, *plan, seeds.noise);
      if (!traj.ok()) return traj.status();
      cell.sigma = traj->sigma;
      cell.w = traj->avg_w;
      cell.v = traj->avg_v;
      absl::StatusOr<RiskReport> risks =
          EvaluateRisks(inst, *cell.train, *setup->eval, config.n_eval,
                        cell.w, cell.v, config.inner);
      if (!risks.ok()) return risks.status();
      cell.risks = *risks;
      absl::StatusOr<GDistances> g =
          ComputeGDistances(inst, *cell.train, *traj, config.inner);
      if (!g.ok()) return g.status();
      cell.g = *g;
      if (admissible) {
        BoundInputs in = InputsFor(config, inst, cell.n, cell.T, cell.sigma);
        in.g_w = g->g_w;
        in.g_v = g->g_v;
        absl::StatusOr<double> gamma = Theorem2Gamma(in);
        if (!gamma.ok()) return gamma.status();
        cell.gamma_theory = *gamma;
      }
      if (empirical_gamma) {
        StabilityOptions options = StabilityOptionsFor(config, 1);
        options.compute_theory = false;
        absl::StatusOr<StabilityReport> report = EmpiricalGamma(
            inst, *data, cell.T, schedule, *plan, options, seeds.stability);
        if (!report.ok()) return report.status();
        cell.gamma_empirical = report->max;
      }
      log.Line(absl::StrFormat("generalization n=%d replicate=%d done",
                               cell.n, r));
      return absl::OkStatus();
    }();
    return absl::OkStatus();
  }).IgnoreError();

  CommandOutput out;
  std::ostringstream csv;
  WriteSchemaLine(csv, "generalization", 1);
  csv << "n,T,sigma,replicate,plain_gap,primal_gap,strong_pd_pop,weak_pd_pop,"
         "bound_3a,bound_3b,bound_3d,bound_c1b,gamma_theoretical,plain_emp,"
         "primal_emp,strong_pd_emp,weak_pd_emp,g_w,g_v,gamma_empirical\n";
  const size_t first = FirstFailure(status);
  // Rows are emitted per n once all of its replicates are available, since
  // the weak PD risk and E[strong PD] are replicate-set quantities.
  const int R = config.replicates;
  for (size_t block = 0; (block + 1) * R <= first; ++block) {
    const size_t begin = block * R;
    double weak_emp = kNaN, weak_pop = kNaN;
    if (R >= 2) {
      std::vector<ParameterPair> pairs;
      std::vector<const DatasetObjective*> trains;
      for (int r = 0; r < R; ++r) {
        pairs.push_back({results[begin + r].w, results[begin + r].v});
        trains.push_back(results[begin + r].train.get());
      }
      const DatasetObjective* eval = setup->eval.get();
      absl::StatusOr<double> pop =
          WeakPd(inst, pairs, absl::MakeConstSpan(&eval, 1), config.inner);
      if (!pop.ok()) {
        out.status = pop.status();
        break;
      }
      absl::StatusOr<double> emp = WeakPd(inst, pairs, trains, config.inner);
      if (!emp.ok()) {
        out.status = emp.status();
        break;
      }
      weak_pop = *pop;
      weak_emp = *emp;
    } else {
      // A singleton expectation reduces the weak measures to the strong ones.
      weak_pop = results[begin].risks.strong_pd_pop;
      weak_emp = results[begin].risks.strong_pd_emp;
    }
    double expect = 0.0;
    for (int r = 0; r < R; ++r) expect += results[begin + r].risks.strong_pd_emp;
    expect /= R;
    for (int r = 0; r < R; ++r) {
      const Cell& cell = results[begin + r];
      BoundInputs in = InputsFor(config, inst, cell.n, cell.T, cell.sigma);
      in.g_w = cell.g.g_w;
      in.g_v = cell.g.g_v;
      in.gamma = empirical_gamma ? cell.gamma_empirical : cell.gamma_theory;
      in.delta_s_emp = cell.risks.strong_pd_emp;
      in.delta_s_emp_expect = expect;
      csv << absl::StrJoin(
                 {Num(cell.n), Num(cell.T), Num(cell.sigma), Num(r),
                  Num(cell.risks.plain_gap()), Num(cell.risks.primal_gap()),
                  Num(cell.risks.strong_pd_pop), Num(weak_pop),
                  Num(BoundValue(&Thm3aPlain, in)),
                  Num(BoundValue(&Thm3bPrimal, in)),
                  Num(BoundValue(&Thm3dStrongPd, in)),
                  Num(BoundValue(&Cor1bWeakPop, in)), Num(cell.gamma_theory),
                  Num(cell.risks.plain_emp), Num(cell.risks.primal_emp),
                  Num(cell.risks.strong_pd_emp), Num(weak_emp),
                  Num(cell.g.g_w), Num(cell.g.g_v),
                  Num(cell.gamma_empirical)},
                 ",")
          << "\n";
    }
  }
  if (out.status.ok() && first < status.size()) out.status = status[first];
  out.csv = csv.str();
  return out;
}

CommandOutput NoiseCheckCommand(const ExperimentConfig& config,
                                std::ostream* progress) {
  const NoiseCheckConfig& nc = config.noise_check;
  Progress log(progress);
  const bool admissible = ZetaAdmissible(nc.p, nc.zeta);
  // Outside the guaranteed range the same formula is still checked; the
  // admissible column records which case applies.
  absl::StatusOr<double> threshold = NoiseNormThreshold(
      nc.sigma, nc.p, nc.zeta,
      admissible ? ZetaDomain::kGuaranteed : ZetaDomain::kExtended);
  if (!threshold.ok()) return Fail(threshold.status());
  Rng rng(DeriveSeed(config.seed, "noise-check"));
  Vector b(nc.p);
  int64_t exceed = 0;
  for (int64_t k = 0; k < nc.draws; ++k) {
    FillGaussian(nc.sigma, rng, b);
    if (b.norm() > *threshold) ++exceed;
  }
  const double draws = static_cast<double>(nc.draws);
  const double rate = static_cast<double>(exceed) / draws;
  const double allowed =
      nc.zeta + 3.0 * std::sqrt(nc.zeta * (1.0 - nc.zeta) / draws);
  log.Line(absl::StrFormat("noise-check exceed_rate=%.6g allowed=%.6g", rate,
                           allowed));
  std::ostringstream csv;
  WriteSchemaLine(csv, "noise_check", 1);
  csv << "sigma,p,zeta,draws,admissible,threshold,exceed_count,exceed_rate,"
         "allowed_rate,pass\n";
  csv << absl::StrJoin({Num(nc.sigma), Num(nc.p), Num(nc.zeta), Num(nc.draws),
                        Num(admissible ? 1 : 0), Num(*threshold), Num(exceed),
                        Num(rate), Num(allowed), Num(rate <= allowed ? 1 : 0)},
                       ",")
      << "\n";
  CommandOutput out;
  out.csv = csv.str();
  out.text = absl::StrFormat(
      "threshold=%s\nexceed_rate=%s\nallowed_rate=%s\npass=%s\n",
      Num(*threshold), Num(rate), Num(allowed),
      rate <= allowed ? "true" : "false");
  return out;
}

CommandOutput BoundsCommand(const ExperimentConfig& config,
                            std::ostream* progress) {
  (void)progress;
  const BoundInputs& in = config.bounds.inputs;
  const std::vector<std::string> names =
      config.bounds.name == "all" ? BoundNames()
                                  : std::vector<std::string>{config.bounds.name};
  CommandOutput out;
  std::ostringstream csv, text;
  WriteSchemaLine(csv, "bounds", 1);
  csv << "name,value,lhs_coefficient,status\n";
  for (const std::string& name : names) {
    absl::StatusOr<BoundEvaluation> value = EvaluateBound(name, in);
    if (!value.ok() && names.size() == 1) {
      out.status = value.status();
      return out;
    }
    const double v = value.ok() ? value->value : kNaN;
    const double coef = value.ok() ? value->lhs_coefficient : kNaN;
    // Messages can contain commas, so only the code goes into the CSV.
    csv << name << "," << Num(v) << "," << Num(coef) << ","
        << (value.ok() ? "OK" : absl::StatusCodeToString(value.status().code()))
        << "\n";
    text << "bound=" << name << "\nvalue=" << Num(v)
         << "\nlhs_coefficient=" << Num(coef) << "\n";
    if (!value.ok()) text << "error=" << value.status().message() << "\n";
  }
  text << "input.G=" << Num(in.G) << "\ninput.rho=" << Num(in.rho)
       << "\ninput.L=" << Num(in.L) << "\ninput.M_ell=" << Num(in.M_ell)
       << "\ninput.M_W=" << Num(in.M_W) << "\ninput.M_V=" << Num(in.M_V)
       << "\ninput.sigma=" << Num(in.sigma) << "\ninput.T=" << Num(in.T)
       << "\ninput.n=" << Num(in.n) << "\ninput.p=" << Num(in.p)
       << "\ninput.epsilon=" << Num(in.epsilon)
       << "\ninput.delta=" << Num(in.delta) << "\ninput.zeta=" << Num(in.zeta)
       << "\ninput.iota=" << Num(in.iota) << "\ninput.g_w=" << Num(in.g_w)
       << "\ninput.g_v=" << Num(in.g_v) << "\ninput.gamma=" << Num(in.gamma)
       << "\ninput.delta_s_emp=" << Num(in.delta_s_emp)
       << "\ninput.delta_s_emp_expect=" << Num(in.delta_s_emp_expect) << "\n";
  out.csv = csv.str();
  out.text = text.str();
  return out;
}

absl::Status RunSubcommand(const std::string& name,
                           const ExperimentConfig& config, std::ostream& text,
                           std::ostream* progress) {
  CommandOutput out;
  if (name == "calibrate") {
    out = CalibrateCommand(config, progress);
  } else if (name == "run") {
    out = RunCommand(config, progress);
  } else if (name == "stability") {
    out = StabilityCommand(config, progress);
  } else if (name == "generalization") {
    out = GeneralizationCommand(config, progress);
  } else if (name == "noise-check") {
    out = NoiseCheckCommand(config, progress);
  } else if (name == "bounds") {
    out = BoundsCommand(config, progress);
  } else {
    return absl::InvalidArgumentError(
        absl::StrFormat("unknown subcommand \"%s\"", name));
  }
  text << out.text;
  if (out.csv.empty()) return out.status;

  namespace fs = std::filesystem;
  const fs::path dir(config.output);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    return absl::PermissionDeniedError(absl::StrFormat(
        "cannot create output directory %s: %s", dir.string(), ec.message()));
  }
  std::string file = name;
  std::replace(file.begin(), file.end(), '-', '_');
  std::vector<std::pair<std::string, std::string>> files = out.extra_files;
  files.emplace_back(file + ".csv", out.csv);
  for (const auto& [relative, content] : files) {
    const fs::path path = dir / relative;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << content;
    if (!f) {
      return absl::DataLossError(
          absl::StrFormat("failed writing %s", path.string()));
    }
    if (progress != nullptr) *progress << "wrote " << path.string() << "\n";
  }
  return out.status;
}

}  // namespace dpminimax
