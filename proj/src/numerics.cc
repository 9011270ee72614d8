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

#include "dpminimax/numerics.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace dpminimax {
namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;

}  // namespace

bool AllFinite(const Vector& x) { return x.allFinite(); }

void ProjectBallInPlace(Vector& x, double radius) {
  const double norm = x.norm();
  if (norm <= radius) return;
  x *= radius / norm;
  // Rounding can leave the scaled norm a few ulps above the radius; shrink
  // until the result is feasible so that projection stays idempotent.
  while (x.norm() > radius) x *= 1.0 - std::numeric_limits<double>::epsilon();
}

absl::StatusOr<Vector> ProjectBall(const Vector& x, double radius) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("projection radius must be finite and >= 0, got %g",
                        radius));
  }
  if (!AllFinite(x)) {
    return absl::InvalidArgumentError("projection input has non-finite entries");
  }
  Vector y = x;
  ProjectBallInPlace(y, radius);
  return y;
}

uint64_t Rng::Mix(uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

uint64_t DeriveSeed(uint64_t seed, std::string_view label) {
  // FNV-1a over the label, then mixed with the parent seed.
  uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return Rng::Mix(Rng::Mix(seed) ^ Rng::Mix(h + kGolden));
}

uint64_t DeriveSeed(uint64_t seed, uint64_t index) {
  return Rng::Mix(Rng::Mix(seed + kGolden) ^ Rng::Mix(~index));
}

uint64_t Rng::NextU64() {
  ++counter_;
  return Mix(key_ + counter_ * kGolden);
}

double Rng::NextUniform() {
  return static_cast<double>(NextU64() >> 11) * kTwoPow53Inv;
}

double Rng::NextUniformPositive() {
  return static_cast<double>((NextU64() >> 11) + 1) * kTwoPow53Inv;
}

uint64_t Rng::NextBelow(uint64_t bound) {
  // Rejection sampling keeps the result exactly uniform.
  const uint64_t limit = bound * (UINT64_MAX / bound);
  uint64_t x;
  do {
    x = NextU64();
  } while (x >= limit);
  return x % bound;
}

std::pair<double, double> Rng::NextGaussianPair() {
  const double u1 = NextUniformPositive();
  const double u2 = NextUniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

void FillGaussian(double sigma, Rng& rng, Vector& out) {
  const Eigen::Index dim = out.size();
  for (Eigen::Index i = 0; i < dim; i += 2) {
    auto [z0, z1] = rng.NextGaussianPair();
    out[i] = sigma * z0;
    if (i + 1 < dim) out[i + 1] = sigma * z1;
  }
}

absl::StatusOr<Vector> SampleGaussian(int dim, double sigma, Rng& rng) {
  if (dim <= 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("dimension must be positive, got %d", dim));
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("sigma must be finite and >= 0, got %g", sigma));
  }
  Vector out(dim);
  FillGaussian(sigma, rng, out);
  return out;
}

Vector SampleUniformBall(int dim, double radius, Rng& rng) {
  Vector x(dim);
  FillGaussian(1.0, rng, x);
  const double norm = x.norm();
  const double r = radius * std::pow(rng.NextUniform(), 1.0 / dim);
  if (norm > 0.0) x *= r / norm;
  return x;
}

bool ZetaAdmissible(int p, double zeta) {
  return zeta > std::exp(-static_cast<double>(p) / 8.0) && zeta < 1.0;
}

absl::StatusOr<double> NoiseNormThreshold(double sigma, int p, double zeta,
                                          ZetaDomain domain) {
  if (p <= 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("dimension must be positive, got %d", p));
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("sigma must be finite and >= 0, got %g", sigma));
  }
  if (domain == ZetaDomain::kGuaranteed && !ZetaAdmissible(p, zeta)) {
    return absl::OutOfRangeError(absl::StrFormat(
        "zeta=%g outside (exp(-p/8), 1) = (%g, 1) for p=%d", zeta,
        std::exp(-p / 8.0), p));
  }
  if (!(zeta > 0.0 && zeta < 1.0)) {
    return absl::OutOfRangeError(
        absl::StrFormat("zeta=%g outside (0, 1)", zeta));
  }
  const double correction = std::pow(8.0 * std::log(1.0 / zeta) / p, 0.25);
  return sigma * std::sqrt(static_cast<double>(p)) * (1.0 + correction);
}

}  // namespace dpminimax
