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

#ifndef DPMINIMAX_PROBLEM_H_
#define DPMINIMAX_PROBLEM_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "dpminimax/numerics.h"

namespace dpminimax {

// Ordered sample z_1..z_n. Adjacent datasets differ in one position.
struct Dataset {
  std::vector<Vector> points;
  uint64_t seed = 0;

  int n() const { return static_cast<int>(points.size()); }
};

// L_S(w, v) for a fixed dataset. Implementations may precompute sufficient
// statistics, so evaluating it costs far less than a pass over the points.
class DatasetObjective {
 public:
  virtual ~DatasetObjective() = default;

  virtual double Value(const Vector& w, const Vector& v) const = 0;
  // Writes grad_w L_S and grad_v L_S. Outputs must be pre-sized.
  virtual void Gradients(const Vector& w, const Vector& v, Vector& grad_w,
                         Vector& grad_v) const = 0;
};

// Per-point loss l(w, v; z) with gradient oracles and a data distribution.
class LossModel {
 public:
  virtual ~LossModel() = default;

  virtual double Loss(const Vector& w, const Vector& v,
                      const Vector& z) const = 0;
  virtual void Gradients(const Vector& w, const Vector& v, const Vector& z,
                         Vector& grad_w, Vector& grad_v) const = 0;
  // One draw from the data distribution.
  virtual Vector SamplePoint(Rng& rng) const = 0;
  virtual bool InDataDomain(const Vector& z) const = 0;

  // Defaults to averaging Loss and Gradients over the points.
  virtual std::unique_ptr<DatasetObjective> Bind(
      const std::vector<Vector>& points) const;
};

enum class InstanceKind { kQuadratic, kAuc };

// A rho-SC-SC loss with certified constants:
//   rho        strong convexity / concavity modulus
//   lipschitz  G, bound on ||grad_w l|| and ||grad_v l|| on the domain
//   smooth     L, block smoothness
//   loss_bound M_l, with 0 <= l <= M_l on the domain
// The feasible sets are the balls of radius radius_w (M_W) and radius_v (M_V).
struct ProblemInstance {
  std::string name;
  InstanceKind kind = InstanceKind::kQuadratic;
  int dim_w = 0;
  int dim_v = 0;
  int dim_z = 0;
  double radius_w = 0.0;
  double radius_v = 0.0;
  double rho = 0.0;
  double lipschitz = 0.0;
  double smooth = 0.0;
  double loss_bound = 0.0;
  std::shared_ptr<const LossModel> model;

  // Single dimension used by the bound formulas.
  int p() const { return dim_w > dim_v ? dim_w : dim_v; }

  double Loss(const Vector& w, const Vector& v, const Vector& z) const {
    return model->Loss(w, v, z);
  }
  void Gradients(const Vector& w, const Vector& v, const Vector& z,
                 Vector& grad_w, Vector& grad_v) const {
    model->Gradients(w, v, z, grad_w, grad_v);
  }

  // Checks point dimensions and domain membership, then binds.
  absl::StatusOr<std::unique_ptr<DatasetObjective>> Bind(
      const Dataset& data) const;
  // Same as Bind on the point-by-point average, bypassing any sufficient
  // statistics. Used as a reference in tests.
  absl::StatusOr<std::unique_ptr<DatasetObjective>> BindPointwise(
      const Dataset& data) const;

  absl::Status CheckArguments(const Vector& w, const Vector& v) const;
};

// (1/n) sum_i l(w, v; z_i), evaluated point by point.
absl::StatusOr<double> EmpiricalLoss(const ProblemInstance& inst,
                                     const Vector& w, const Vector& v,
                                     const Dataset& data);

// l(w, v; z) = (rho/2)||w - A z||^2 + w'B v - (rho/2)||v - C z||^2 + offset,
// with z uniform in the ball of radius data_radius. Radii of 0 are replaced by
// twice the largest unconstrained saddle norm over the data ball.
struct QuadraticSaddleSpec {
  Matrix A;  // dim_w x dim_z
  Matrix C;  // dim_v x dim_z
  Matrix B;  // dim_w x dim_v
  double rho = 1.0;
  double data_radius = 1.0;
  double radius_w = 0.0;
  double radius_v = 0.0;
};

struct RandomQuadraticOptions {
  int dim_w = 8;
  int dim_v = 8;
  int dim_z = 8;
  double rho = 1.0;
  // Spectral norm of B.
  double coupling_norm = 0.5;
  double data_radius = 1.0;
};

// A and C are Gaussian matrices scaled to unit spectral norm; B is Gaussian
// scaled to coupling_norm.
absl::StatusOr<QuadraticSaddleSpec> RandomQuadraticSpec(
    const RandomQuadraticOptions& options, uint64_t seed);

absl::StatusOr<ProblemInstance> MakeQuadraticSaddle(
    const QuadraticSaddleSpec& spec);

// Solves rho(w - a) + B v = 0, B'w - rho(v - c) = 0 with a = mean(A z_i),
// c = mean(C z_i).
absl::StatusOr<std::pair<Vector, Vector>> ClosedFormSaddle(
    const QuadraticSaddleSpec& spec, const Dataset& data);

// Square-loss AUC surrogate. Points are z = (x, y) with y in {+1, -1},
// P(y = +1) = q, and x = y * separation * e_1 + u, u uniform in the ball of
// radius feature_radius. The minimization block is (u, a, b) and the
// maximization block is the scalar alpha:
//
//   l = (1-q)(u'x - a)^2 [y=1] + q(u'x - b)^2 [y=-1]
//       + 2(1 + alpha)(q u'x [y=-1] - (1-q) u'x [y=1]) - q(1-q) alpha^2
//       + (rho/2)||(u, a, b)||^2 - (rho/2) alpha^2 + offset.
struct AucSpec {
  int feature_dim = 4;
  double q = 0.5;
  double rho = 1.0;
  double separation = 0.5;
  double feature_radius = 1.0;
  double radius_w = 2.0;
  double radius_v = 2.0;
  // Draws used to estimate G, L and M_l, each inflated by 1.25.
  int constant_samples = 1000000;
};

absl::StatusOr<ProblemInstance> MakeAucInstance(const AucSpec& spec,
                                                uint64_t seed);

// n i.i.d. draws from the instance's data distribution.
absl::StatusOr<Dataset> GenDataset(const ProblemInstance& inst, int n,
                                   uint64_t seed);
// Like GenDataset with a seed domain-separated from training draws.
absl::StatusOr<Dataset> EvalSet(const ProblemInstance& inst, int n,
                                uint64_t seed);

// A schema comment line, the header "z0,z1,...", then one point per row with
// 17 significant digits. The reader skips lines starting with '#'.
absl::Status WriteDatasetCsv(const Dataset& data, std::ostream& out);
absl::StatusOr<Dataset> ReadDatasetCsv(std::istream& in);

}  // namespace dpminimax

#endif  // DPMINIMAX_PROBLEM_H_
