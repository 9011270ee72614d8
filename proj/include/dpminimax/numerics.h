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

#ifndef DPMINIMAX_NUMERICS_H_
#define DPMINIMAX_NUMERICS_H_

#include <cstdint>
#include <string_view>
#include <utility>

#include <Eigen/Dense>

#include "absl/status/statusor.h"

namespace dpminimax {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// True iff every entry is neither NaN nor infinite.
bool AllFinite(const Vector& x);

// Euclidean projection onto the closed ball {y : ||y||_2 <= radius}.
// Points already inside are returned unchanged (bit-for-bit).
absl::StatusOr<Vector> ProjectBall(const Vector& x, double radius);

// Unchecked in-place variant for inner loops. Caller guarantees finite input
// and radius >= 0.
void ProjectBallInPlace(Vector& x, double radius);

// Mixes (seed, label) into a child seed. Used to fan out independent streams
// for replicates, indices and evaluation sets without overlap.
uint64_t DeriveSeed(uint64_t seed, std::string_view label);
uint64_t DeriveSeed(uint64_t seed, uint64_t index);

// Counter-based generator. Output k of a stream with key K is
//
//   SplitMix64Finalize(K + (k + 1) * 0x9E3779B97F4A7C15),
//   K = SplitMix64Finalize(seed),
//
// so the full state is the pair (seed, counter) and any position in a stream
// can be replayed exactly. Uniforms take the top 53 bits. Normals use the
// Box-Muller transform on two consecutive uniforms u1 in (0, 1], u2 in [0, 1):
//
//   r = sqrt(-2 log u1),  z0 = r cos(2 pi u2),  z1 = r sin(2 pi u2).
//
// Integer outputs are identical on every platform; normals are identical
// wherever std::log, std::cos and std::sin are correctly rounded.
class Rng {
 public:
  explicit Rng(uint64_t seed, uint64_t counter = 0)
      : seed_(seed), key_(Mix(seed)), counter_(counter) {}

  uint64_t seed() const { return seed_; }
  uint64_t counter() const { return counter_; }

  uint64_t NextU64();
  // Uniform on [0, 1).
  double NextUniform();
  // Uniform on (0, 1].
  double NextUniformPositive();
  // Uniform integer on [0, bound). bound must be positive.
  uint64_t NextBelow(uint64_t bound);
  // Two independent standard normals; advances the counter by 2.
  std::pair<double, double> NextGaussianPair();

  // Independent child stream starting at counter 0.
  Rng Fork(std::string_view label) const { return Rng(DeriveSeed(seed_, label)); }
  Rng Fork(uint64_t index) const { return Rng(DeriveSeed(seed_, index)); }

  static uint64_t Mix(uint64_t x);

 private:
  uint64_t seed_;
  uint64_t key_;
  uint64_t counter_;
};

// dim i.i.d. draws from N(0, sigma^2). Normals are produced in Box-Muller
// pairs; an odd trailing partner is discarded, so the counter always advances
// by 2 * ceil(dim / 2).
absl::StatusOr<Vector> SampleGaussian(int dim, double sigma, Rng& rng);

// Fills `out` (already sized) with N(0, sigma^2) draws; same stream
// consumption as SampleGaussian.
void FillGaussian(double sigma, Rng& rng, Vector& out);

// Uniform draw from the ball of the given radius in R^dim.
Vector SampleUniformBall(int dim, double radius, Rng& rng);

enum class ZetaDomain {
  // zeta in (exp(-p/8), 1): the range on which the concentration bound is
  // guaranteed.
  kGuaranteed,
  // zeta in (0, 1): the same formula evaluated outside the guaranteed range,
  // for empirical checks.
  kExtended,
};

// High-probability norm bound for b ~ N(0, sigma^2 I_p):
//   sigma * sqrt(p) * (1 + (8 log(1/zeta) / p)^(1/4)).
absl::StatusOr<double> NoiseNormThreshold(
    double sigma, int p, double zeta,
    ZetaDomain domain = ZetaDomain::kGuaranteed);

// True iff zeta lies in (exp(-p/8), 1).
bool ZetaAdmissible(int p, double zeta);

}  // namespace dpminimax

#endif  // DPMINIMAX_NUMERICS_H_
