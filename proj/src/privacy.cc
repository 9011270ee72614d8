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

#include "dpminimax/privacy.h"

#include <cmath>

#include "absl/strings/str_format.h"

namespace dpminimax {
namespace {

absl::Status CheckMomentArgs(int lambda, double G, int64_t n, double sigma) {
  if (lambda < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("lambda must be >= 1, got %d", lambda));
  }
  if (!(G > 0.0) || !std::isfinite(G)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("G must be positive, got %g", G));
  }
  if (n < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("n must be >= 1, got %d", n));
  }
  if (sigma == 0.0) {
    return absl::InvalidArgumentError(
        "sigma = 0 gives an infinite privacy moment");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("sigma must be positive, got %g", sigma));
  }
  return absl::OkStatus();
}

double UncheckedPerStep(int lambda, double G, double n, double sigma) {
  const double l = static_cast<double>(lambda);
  return (2.0 * G * G * l * (l + 1.0)) / (n * n * sigma * sigma);
}

}  // namespace

absl::Status ValidateBudget(const PrivacyBudget& budget) {
  if (!(budget.epsilon > 0.0) || !std::isfinite(budget.epsilon)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "epsilon must be positive, got %g", budget.epsilon));
  }
  if (!(budget.delta > 0.0 && budget.delta < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("delta must lie in (0,1), got %g", budget.delta));
  }
  return absl::OkStatus();
}

absl::StatusOr<double> PerStepMoment(int lambda, double G, int64_t n,
                                     double sigma) {
  if (absl::Status s = CheckMomentArgs(lambda, G, n, sigma); !s.ok()) return s;
  return UncheckedPerStep(lambda, G, static_cast<double>(n), sigma);
}

absl::StatusOr<double> ComposedMoment(int lambda, double G, int64_t n,
                                      double sigma, int64_t mechanisms) {
  if (absl::Status s = CheckMomentArgs(lambda, G, n, sigma); !s.ok()) return s;
  if (mechanisms < 1) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "number of composed mechanisms must be >= 1, got %d", mechanisms));
  }
  return static_cast<double>(mechanisms) *
         UncheckedPerStep(lambda, G, static_cast<double>(n), sigma);
}

absl::StatusOr<TailBound> TailDelta(double epsilon, double G, int64_t n,
                                    double sigma, int64_t mechanisms,
                                    int lambda_max) {
  if (lambda_max < 1) {
    return absl::InvalidArgumentError(
        absl::StrFormat("lambda_max must be >= 1, got %d", lambda_max));
  }
  if (!(epsilon > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("epsilon must be positive, got %g", epsilon));
  }
  TailBound best;
  best.log_delta = INFINITY;
  for (int lambda = 1; lambda <= lambda_max; ++lambda) {
    absl::StatusOr<double> moment =
        ComposedMoment(lambda, G, n, sigma, mechanisms);
    if (!moment.ok()) return moment.status();
    const double log_delta = *moment - static_cast<double>(lambda) * epsilon;
    if (log_delta < best.log_delta) {
      best.log_delta = log_delta;
      best.lambda_star = lambda;
    }
  }
  best.delta = std::exp(best.log_delta);
  return best;
}

absl::StatusOr<NoisePlan> CalibrateSigma(double G, int64_t T, int64_t n,
                                         const PrivacyBudget& budget,
                                         double c) {
  if (absl::Status s = ValidateBudget(budget); !s.ok()) return s;
  if (!(G > 0.0) || T < 1 || n < 1 || !(c > 0.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "calibration needs G > 0, T >= 1, n >= 1, c > 0; got G=%g T=%d n=%d "
        "c=%g",
        G, T, n, c));
  }
  NoisePlan plan;
  plan.c = c;
  plan.T = T;
  plan.G = G;
  plan.n = n;
  plan.budget = budget;
  plan.sigma = c * G * std::sqrt(static_cast<double>(T) *
                                 std::log(1.0 / budget.delta)) /
               (static_cast<double>(n) * budget.epsilon);
  VerifyBudget(plan, budget);
  return plan;
}

bool VerifyBudget(NoisePlan& plan, const PrivacyBudget& budget) {
  plan.verified = false;
  if (!ValidateBudget(budget).ok()) return false;
  absl::StatusOr<TailBound> tail =
      TailDelta(budget.epsilon, plan.G, plan.n, plan.sigma,
                kStreamsPerIteration * plan.T, plan.lambda_max);
  if (!tail.ok()) {
    plan.achieved_delta = 1.0;
    plan.log_achieved_delta = 0.0;
    return false;
  }
  plan.achieved_delta = tail->delta;
  plan.log_achieved_delta = tail->log_delta;
  plan.lambda_star = tail->lambda_star;
  plan.verified = tail->delta <= budget.delta;
  return plan.verified;
}

}  // namespace dpminimax
