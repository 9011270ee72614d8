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

#ifndef DPMINIMAX_PRIVACY_H_
#define DPMINIMAX_PRIVACY_H_

#include <cstdint>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace dpminimax {

struct PrivacyBudget {
  double epsilon = 1.0;
  double delta = 1e-5;
};

absl::Status ValidateBudget(const PrivacyBudget& budget);

// Noise multiplier used when a config does not set one. The smallest c for
// which the calibrated sigma verifies on the whole test grid is about 4.3241;
// the default rounds it up.
inline constexpr double kDefaultNoiseMultiplier = 4.325;
inline constexpr int kDefaultLambdaMax = 256;
// Each iteration releases one noisy gradient per parameter block.
inline constexpr int kStreamsPerIteration = 2;

// Log-moment bound of one Gaussian gradient release with sensitivity 2G/n:
//   2 G^2 lambda (lambda + 1) / (n^2 sigma^2).
absl::StatusOr<double> PerStepMoment(int lambda, double G, int64_t n,
                                     double sigma);

// Moment bound after composing `mechanisms` releases:
//   mechanisms * PerStepMoment(lambda, G, n, sigma).
absl::StatusOr<double> ComposedMoment(int lambda, double G, int64_t n,
                                      double sigma, int64_t mechanisms);

struct TailBound {
  double delta = 1.0;
  // Natural log of delta, finite even when delta underflows.
  double log_delta = 0.0;
  int lambda_star = 1;
};

// min over integer lambda in [1, lambda_max] of
// exp(ComposedMoment(lambda) - lambda * epsilon). Ties go to the smallest
// lambda.
absl::StatusOr<TailBound> TailDelta(double epsilon, double G, int64_t n,
                                    double sigma, int64_t mechanisms,
                                    int lambda_max = kDefaultLambdaMax);

struct NoisePlan {
  double sigma = 0.0;
  double c = kDefaultNoiseMultiplier;
  int64_t T = 0;
  double G = 0.0;
  int64_t n = 0;
  PrivacyBudget budget;
  int lambda_max = kDefaultLambdaMax;
  // Filled in by VerifyBudget.
  double achieved_delta = 1.0;
  double log_achieved_delta = 0.0;
  int lambda_star = 1;
  bool verified = false;
};

// sigma = c G sqrt(T log(1/delta)) / (n epsilon), followed by VerifyBudget.
// The returned plan may be unverified; callers decide whether that is fatal.
absl::StatusOr<NoisePlan> CalibrateSigma(double G, int64_t T, int64_t n,
                                         const PrivacyBudget& budget,
                                         double c = kDefaultNoiseMultiplier);

// Composes kStreamsPerIteration * T releases, records achieved_delta and
// lambda_star in the plan and returns whether achieved_delta <= delta.
bool VerifyBudget(NoisePlan& plan, const PrivacyBudget& budget);

}  // namespace dpminimax

#endif  // DPMINIMAX_PRIVACY_H_
