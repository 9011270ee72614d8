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

#include "dpminimax/problem.h"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "absl/status/status.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"
#include "absl/strings/strip.h"
#include "dpminimax/csv.h"

namespace dpminimax {
namespace {

// Relative slack for data-ball membership, to absorb rounding in samplers.
constexpr double kDomainSlack = 1e-12;

double SpectralNorm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

class PointwiseObjective : public DatasetObjective {
 public:
  PointwiseObjective(const LossModel* model, std::vector<Vector> points)
      : model_(model), points_(std::move(points)) {}

  double Value(const Vector& w, const Vector& v) const override {
    double sum = 0.0;
    for (const Vector& z : points_) sum += model_->Loss(w, v, z);
    return sum / static_cast<double>(points_.size());
  }

  void Gradients(const Vector& w, const Vector& v, Vector& grad_w,
                 Vector& grad_v) const override {
    grad_w.setZero();
    grad_v.setZero();
    Vector gw(w.size()), gv(v.size());
    for (const Vector& z : points_) {
      model_->Gradients(w, v, z, gw, gv);
      grad_w += gw;
      grad_v += gv;
    }
    const double inv_n = 1.0 / static_cast<double>(points_.size());
    grad_w *= inv_n;
    grad_v *= inv_n;
  }

 private:
  const LossModel* model_;
  std::vector<Vector> points_;
};

Vector Mean(const std::vector<Vector>& points) {
  Vector mean = Vector::Zero(points.front().size());
  for (const Vector& z : points) mean += z;
  return mean / static_cast<double>(points.size());
}

// ---------------------------------------------------------------------------
// Quadratic saddle.

// L_S via sufficient statistics: with a_i = A z_i,
//   mean_i ||w - a_i||^2 = ||w - a_bar||^2 + mean_i ||a_i - a_bar||^2.
class QuadraticObjective : public DatasetObjective {
 public:
  QuadraticObjective(const Matrix& B, double rho, double offset, Vector a_bar,
                     Vector c_bar, double var_a, double var_c)
      : B_(B),
        rho_(rho),
        offset_(offset),
        a_bar_(std::move(a_bar)),
        c_bar_(std::move(c_bar)),
        var_a_(var_a),
        var_c_(var_c) {}

  double Value(const Vector& w, const Vector& v) const override {
    return 0.5 * rho_ * ((w - a_bar_).squaredNorm() + var_a_) +
           w.dot(B_ * v) -
           0.5 * rho_ * ((v - c_bar_).squaredNorm() + var_c_) + offset_;
  }

  void Gradients(const Vector& w, const Vector& v, Vector& grad_w,
                 Vector& grad_v) const override {
    grad_w.noalias() = B_ * v;
    grad_w += rho_ * (w - a_bar_);
    grad_v.noalias() = B_.transpose() * w;
    grad_v -= rho_ * (v - c_bar_);
  }

 private:
  Matrix B_;
  double rho_;
  double offset_;
  Vector a_bar_;
  Vector c_bar_;
  double var_a_;
  double var_c_;
};

class QuadraticModel : public LossModel {
 public:
  QuadraticModel(Matrix A, Matrix B, Matrix C, double rho, double data_radius,
                 double offset)
      : A_(std::move(A)),
        B_(std::move(B)),
        C_(std::move(C)),
        rho_(rho),
        data_radius_(data_radius),
        offset_(offset) {}

  double Loss(const Vector& w, const Vector& v,
              const Vector& z) const override {
    return 0.5 * rho_ * (w - A_ * z).squaredNorm() + w.dot(B_ * v) -
           0.5 * rho_ * (v - C_ * z).squaredNorm() + offset_;
  }

  void Gradients(const Vector& w, const Vector& v, const Vector& z,
                 Vector& grad_w, Vector& grad_v) const override {
    grad_w = rho_ * (w - A_ * z) + B_ * v;
    grad_v = B_.transpose() * w - rho_ * (v - C_ * z);
  }

  Vector SamplePoint(Rng& rng) const override {
    return SampleUniformBall(static_cast<int>(A_.cols()), data_radius_, rng);
  }

  bool InDataDomain(const Vector& z) const override {
    return z.size() == A_.cols() && AllFinite(z) &&
           z.norm() <= data_radius_ * (1.0 + kDomainSlack);
  }

  std::unique_ptr<DatasetObjective> Bind(
      const std::vector<Vector>& points) const override {
    const Vector z_bar = Mean(points);
    double var_a = 0.0, var_c = 0.0;
    for (const Vector& z : points) {
      const Vector dz = z - z_bar;
      var_a += (A_ * dz).squaredNorm();
      var_c += (C_ * dz).squaredNorm();
    }
    const double n = static_cast<double>(points.size());
    return std::make_unique<QuadraticObjective>(
        B_, rho_, offset_, A_ * z_bar, C_ * z_bar, var_a / n, var_c / n);
  }

 private:
  Matrix A_;
  Matrix B_;
  Matrix C_;
  double rho_;
  double data_radius_;
  double offset_;
};

// KKT matrix [rho I, B; B', -rho I] of the unconstrained saddle.
Matrix SaddleSystem(const Matrix& B, double rho) {
  const Eigen::Index dw = B.rows(), dv = B.cols();
  Matrix M(dw + dv, dw + dv);
  M.topLeftCorner(dw, dw) = rho * Matrix::Identity(dw, dw);
  M.topRightCorner(dw, dv) = B;
  M.bottomLeftCorner(dv, dw) = B.transpose();
  M.bottomRightCorner(dv, dv) = -rho * Matrix::Identity(dv, dv);
  return M;
}

absl::Status ValidateQuadraticSpec(const QuadraticSaddleSpec& spec) {
  if (!(spec.rho > 0.0) || !std::isfinite(spec.rho)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("rho must be positive, got %g", spec.rho));
  }
  if (!(spec.data_radius > 0.0) || !std::isfinite(spec.data_radius)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "data_radius must be positive, got %g", spec.data_radius));
  }
  if (spec.A.rows() <= 0 || spec.A.cols() <= 0 || spec.C.rows() <= 0) {
    return absl::InvalidArgumentError("A and C must be non-empty");
  }
  if (spec.C.cols() != spec.A.cols()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "A has %d columns but C has %d", spec.A.cols(), spec.C.cols()));
  }
  if (spec.B.rows() != spec.A.rows() || spec.B.cols() != spec.C.rows()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "B must be %d x %d, got %d x %d", spec.A.rows(), spec.C.rows(),
        spec.B.rows(), spec.B.cols()));
  }
  if (!spec.A.allFinite() || !spec.B.allFinite() || !spec.C.allFinite()) {
    return absl::InvalidArgumentError("A, B and C must be finite");
  }
  if (spec.radius_w < 0.0 || spec.radius_v < 0.0) {
    return absl::InvalidArgumentError("radii must be >= 0");
  }
  return absl::OkStatus();
}

absl::StatusOr<double> ResolveRadius(const char* name, double requested,
                                     double saddle_bound) {
  if (requested == 0.0) {
    return saddle_bound > 0.0 ? 2.0 * saddle_bound : 1.0;
  }
  if (saddle_bound > 0.0 && requested <= saddle_bound) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "%s=%g does not strictly contain the saddle set; need > %.17g", name,
        requested, saddle_bound));
  }
  return requested;
}

// ---------------------------------------------------------------------------
// AUC surrogate.

struct AucParams {
  int d;
  double q;
  double rho;
  double separation;
  double feature_radius;
  double offset;
};

// Class-conditional moments: pi = P(class), mu = E[x 1{class}],
// sigma = E[x x' 1{class}].
struct ClassMoments {
  double pi = 0.0;
  Vector mu;
  Matrix sigma;
};

class AucObjective : public DatasetObjective {
 public:
  AucObjective(const AucParams& params, ClassMoments pos, ClassMoments neg)
      : p_(params), pos_(std::move(pos)), neg_(std::move(neg)) {}

  double Value(const Vector& w, const Vector& v) const override {
    const int d = p_.d;
    const auto u = w.head(d);
    const double a = w[d], b = w[d + 1], alpha = v[0];
    const double q = p_.q;
    const double u_mu_pos = u.dot(pos_.mu), u_mu_neg = u.dot(neg_.mu);
    double value = (1.0 - q) * (u.dot(pos_.sigma * u) - 2.0 * a * u_mu_pos +
                                a * a * pos_.pi);
    value += q * (u.dot(neg_.sigma * u) - 2.0 * b * u_mu_neg + b * b * neg_.pi);
    value += 2.0 * (1.0 + alpha) * (q * u_mu_neg - (1.0 - q) * u_mu_pos);
    value -= q * (1.0 - q) * alpha * alpha;
    value += 0.5 * p_.rho * w.squaredNorm() - 0.5 * p_.rho * alpha * alpha;
    return value + p_.offset;
  }

  void Gradients(const Vector& w, const Vector& v, Vector& grad_w,
                 Vector& grad_v) const override {
    const int d = p_.d;
    const auto u = w.head(d);
    const double a = w[d], b = w[d + 1], alpha = v[0];
    const double q = p_.q;
    const double u_mu_pos = u.dot(pos_.mu), u_mu_neg = u.dot(neg_.mu);
    grad_w.head(d) = 2.0 * (1.0 - q) * (pos_.sigma * u - a * pos_.mu) +
                     2.0 * q * (neg_.sigma * u - b * neg_.mu) +
                     2.0 * (1.0 + alpha) * (q * neg_.mu - (1.0 - q) * pos_.mu);
    grad_w[d] = 2.0 * (1.0 - q) * (a * pos_.pi - u_mu_pos);
    grad_w[d + 1] = 2.0 * q * (b * neg_.pi - u_mu_neg);
    grad_w += p_.rho * w;
    grad_v[0] = 2.0 * (q * u_mu_neg - (1.0 - q) * u_mu_pos) -
                (2.0 * q * (1.0 - q) + p_.rho) * alpha;
  }

 private:
  AucParams p_;
  ClassMoments pos_;
  ClassMoments neg_;
};

class AucModel : public LossModel {
 public:
  explicit AucModel(const AucParams& params) : p_(params) {}

  double Loss(const Vector& w, const Vector& v,
              const Vector& z) const override {
    const int d = p_.d;
    const double q = p_.q;
    const double s = w.head(d).dot(z.head(d));
    const double alpha = v[0];
    double value;
    if (z[d] > 0.0) {
      const double r = s - w[d];
      value = (1.0 - q) * r * r - 2.0 * (1.0 + alpha) * (1.0 - q) * s;
    } else {
      const double r = s - w[d + 1];
      value = q * r * r + 2.0 * (1.0 + alpha) * q * s;
    }
    value -= q * (1.0 - q) * alpha * alpha;
    value += 0.5 * p_.rho * w.squaredNorm() - 0.5 * p_.rho * alpha * alpha;
    return value + p_.offset;
  }

  void Gradients(const Vector& w, const Vector& v, const Vector& z,
                 Vector& grad_w, Vector& grad_v) const override {
    const int d = p_.d;
    const double q = p_.q;
    const auto x = z.head(d);
    const double s = w.head(d).dot(x);
    const double alpha = v[0];
    grad_w = p_.rho * w;
    if (z[d] > 0.0) {
      const double r = s - w[d];
      grad_w.head(d) += 2.0 * (1.0 - q) * (r - (1.0 + alpha)) * x;
      grad_w[d] -= 2.0 * (1.0 - q) * r;
      grad_v.resize(1);
      grad_v[0] = -2.0 * (1.0 - q) * s;
    } else {
      const double r = s - w[d + 1];
      grad_w.head(d) += 2.0 * q * (r + (1.0 + alpha)) * x;
      grad_w[d + 1] -= 2.0 * q * r;
      grad_v.resize(1);
      grad_v[0] = 2.0 * q * s;
    }
    grad_v[0] -= (2.0 * q * (1.0 - q) + p_.rho) * alpha;
  }

  Vector SamplePoint(Rng& rng) const override {
    const int d = p_.d;
    Vector z(d + 1);
    const double y = rng.NextUniform() < p_.q ? 1.0 : -1.0;
    z.head(d) = SampleUniformBall(d, p_.feature_radius, rng);
    z[0] += y * p_.separation;
    z[d] = y;
    return z;
  }

  bool InDataDomain(const Vector& z) const override {
    const int d = p_.d;
    if (z.size() != d + 1 || !AllFinite(z)) return false;
    const double y = z[d];
    if (y != 1.0 && y != -1.0) return false;
    Vector u = z.head(d);
    u[0] -= y * p_.separation;
    return u.norm() <= p_.feature_radius * (1.0 + kDomainSlack);
  }

  std::unique_ptr<DatasetObjective> Bind(
      const std::vector<Vector>& points) const override {
    const int d = p_.d;
    ClassMoments pos{0.0, Vector::Zero(d), Matrix::Zero(d, d)};
    ClassMoments neg = pos;
    for (const Vector& z : points) {
      ClassMoments& m = z[d] > 0.0 ? pos : neg;
      const auto x = z.head(d);
      m.pi += 1.0;
      m.mu += x;
      m.sigma.noalias() += x * x.transpose();
    }
    const double inv_n = 1.0 / static_cast<double>(points.size());
    for (ClassMoments* m : {&pos, &neg}) {
      m->pi *= inv_n;
      m->mu *= inv_n;
      m->sigma *= inv_n;
    }
    return std::make_unique<AucObjective>(p_, std::move(pos), std::move(neg));
  }

  // Largest block Hessian norm of l(., .; z); the loss is quadratic in
  // (w, v), so this does not depend on the parameters.
  double BlockSmoothness(const Vector& z) const {
    const int d = p_.d;
    const double x2 = z.head(d).squaredNorm();
    const double weight = z[d] > 0.0 ? 1.0 - p_.q : p_.q;
    const double h_ww = 2.0 * weight * (x2 + 1.0) + p_.rho;
    const double h_wv = 2.0 * weight * std::sqrt(x2);
    const double h_vv = 2.0 * p_.q * (1.0 - p_.q) + p_.rho;
    return std::max({h_ww, h_wv, h_vv});
  }

 private:
  AucParams p_;
};

}  // namespace

std::unique_ptr<DatasetObjective> LossModel::Bind(
    const std::vector<Vector>& points) const {
  return std::make_unique<PointwiseObjective>(this, points);
}

absl::Status ProblemInstance::CheckArguments(const Vector& w,
                                             const Vector& v) const {
  if (w.size() != dim_w || v.size() != dim_v) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "expected (w, v) of dims (%d, %d), got (%d, %d)", dim_w, dim_v,
        w.size(), v.size()));
  }
  if (!AllFinite(w) || !AllFinite(v)) {
    return absl::InvalidArgumentError("w and v must be finite");
  }
  return absl::OkStatus();
}

namespace {

absl::Status CheckDataset(const ProblemInstance& inst, const Dataset& data) {
  if (data.points.empty()) {
    return absl::InvalidArgumentError("dataset is empty");
  }
  for (size_t i = 0; i < data.points.size(); ++i) {
    const Vector& z = data.points[i];
    if (z.size() != inst.dim_z) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "point %d has dim %d, expected %d", i, z.size(), inst.dim_z));
    }
    if (!inst.model->InDataDomain(z)) {
      return absl::InvalidArgumentError(
          absl::StrFormat("point %d lies outside the data domain", i));
    }
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<std::unique_ptr<DatasetObjective>> ProblemInstance::Bind(
    const Dataset& data) const {
  if (absl::Status s = CheckDataset(*this, data); !s.ok()) return s;
  return model->Bind(data.points);
}

absl::StatusOr<std::unique_ptr<DatasetObjective>>
ProblemInstance::BindPointwise(const Dataset& data) const {
  if (absl::Status s = CheckDataset(*this, data); !s.ok()) return s;
  return model->LossModel::Bind(data.points);
}

absl::StatusOr<double> EmpiricalLoss(const ProblemInstance& inst,
                                     const Vector& w, const Vector& v,
                                     const Dataset& data) {
  if (absl::Status s = inst.CheckArguments(w, v); !s.ok()) return s;
  if (absl::Status s = CheckDataset(inst, data); !s.ok()) return s;
  double sum = 0.0;
  for (const Vector& z : data.points) sum += inst.Loss(w, v, z);
  return sum / static_cast<double>(data.n());
}

absl::StatusOr<QuadraticSaddleSpec> RandomQuadraticSpec(
    const RandomQuadraticOptions& options, uint64_t seed) {
  if (options.dim_w <= 0 || options.dim_v <= 0 || options.dim_z <= 0) {
    return absl::InvalidArgumentError("dimensions must be positive");
  }
  if (options.coupling_norm < 0.0) {
    return absl::InvalidArgumentError("coupling_norm must be >= 0");
  }
  Rng rng(DeriveSeed(seed, "quadratic-spec"));
  auto gaussian = [&rng](int rows, int cols, double target_norm) {
    Vector entries(static_cast<Eigen::Index>(rows) * cols);
    FillGaussian(1.0, rng, entries);
    Matrix m = Eigen::Map<Matrix>(entries.data(), rows, cols);
    const double norm = SpectralNorm(m);
    if (norm > 0.0) m *= target_norm / norm;
    return m;
  };
  QuadraticSaddleSpec spec;
  spec.A = gaussian(options.dim_w, options.dim_z, 1.0);
  spec.C = gaussian(options.dim_v, options.dim_z, 1.0);
  spec.B = gaussian(options.dim_w, options.dim_v, options.coupling_norm);
  spec.rho = options.rho;
  spec.data_radius = options.data_radius;
  return spec;
}

absl::StatusOr<ProblemInstance> MakeQuadraticSaddle(
    const QuadraticSaddleSpec& spec) {
  if (absl::Status s = ValidateQuadraticSpec(spec); !s.ok()) return s;
  const int dim_w = static_cast<int>(spec.A.rows());
  const int dim_v = static_cast<int>(spec.C.rows());
  const int dim_z = static_cast<int>(spec.A.cols());
  const double rho = spec.rho, R = spec.data_radius;

  // The saddle for data mean z_bar is K z_bar, and z_bar ranges over the
  // data ball, so ||K_w|| R bounds every reachable w-saddle.
  Matrix rhs(dim_w + dim_v, dim_z);
  rhs.topRows(dim_w) = rho * spec.A;
  rhs.bottomRows(dim_v) = -rho * spec.C;
  const Matrix K = SaddleSystem(spec.B, rho).fullPivLu().solve(rhs);
  const double saddle_w = SpectralNorm(K.topRows(dim_w)) * R;
  const double saddle_v = SpectralNorm(K.bottomRows(dim_v)) * R;

  absl::StatusOr<double> mw = ResolveRadius("radius_w", spec.radius_w, saddle_w);
  if (!mw.ok()) return mw.status();
  absl::StatusOr<double> mv = ResolveRadius("radius_v", spec.radius_v, saddle_v);
  if (!mv.ok()) return mv.status();

  const double norm_a = SpectralNorm(spec.A);
  const double norm_b = SpectralNorm(spec.B);
  const double norm_c = SpectralNorm(spec.C);
  const double m_max = std::max(*mw, *mv);

  // On the domain, (rho/2)||w - Az||^2 >= 0, w'Bv >= -||B|| M_W M_V and
  // (rho/2)||v - Cz||^2 <= (rho/2)(M_V + ||C|| R)^2.
  const double offset =
      norm_b * *mw * *mv + 0.5 * rho * std::pow(*mv + norm_c * R, 2);

  ProblemInstance inst;
  inst.name = "quadratic";
  inst.kind = InstanceKind::kQuadratic;
  inst.dim_w = dim_w;
  inst.dim_v = dim_v;
  inst.dim_z = dim_z;
  inst.radius_w = *mw;
  inst.radius_v = *mv;
  inst.rho = rho;
  inst.lipschitz = std::max(rho * (*mw + norm_a * R) + norm_b * m_max,
                            rho * (*mv + norm_c * R) + norm_b * m_max);
  inst.smooth = rho + norm_b;
  inst.loss_bound = 0.5 * rho * std::pow(*mw + norm_a * R, 2) +
                    norm_b * *mw * *mv + offset;
  inst.model = std::make_shared<QuadraticModel>(spec.A, spec.B, spec.C, rho,
                                                R, offset);
  return inst;
}

absl::StatusOr<std::pair<Vector, Vector>> ClosedFormSaddle(
    const QuadraticSaddleSpec& spec, const Dataset& data) {
  if (absl::Status s = ValidateQuadraticSpec(spec); !s.ok()) return s;
  if (data.points.empty()) {
    return absl::InvalidArgumentError("dataset is empty");
  }
  for (const Vector& z : data.points) {
    if (z.size() != spec.A.cols()) {
      return absl::InvalidArgumentError("point dimension does not match A");
    }
  }
  const Eigen::Index dim_w = spec.A.rows(), dim_v = spec.C.rows();
  const Vector z_bar = Mean(data.points);
  Vector rhs(dim_w + dim_v);
  rhs.head(dim_w) = spec.rho * (spec.A * z_bar);
  rhs.tail(dim_v) = -spec.rho * (spec.C * z_bar);
  const Matrix M = SaddleSystem(spec.B, spec.rho);
  Eigen::FullPivLU<Matrix> lu(M);
  if (!lu.isInvertible()) {
    return absl::InternalError("saddle system is singular");
  }
  const Vector x = lu.solve(rhs);
  const double residual = (M * x - rhs).norm();
  if (!(residual <= 1e-10 * std::max(1.0, rhs.norm()))) {
    return absl::InternalError(
        absl::StrFormat("saddle solve residual %g exceeds 1e-10", residual));
  }
  return std::make_pair(Vector(x.head(dim_w)), Vector(x.tail(dim_v)));
}

absl::StatusOr<ProblemInstance> MakeAucInstance(const AucSpec& spec,
                                                uint64_t seed) {
  if (!(spec.q > 0.0 && spec.q < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("q must lie in (0,1), got %g", spec.q));
  }
  if (spec.feature_dim <= 0) {
    return absl::InvalidArgumentError("feature_dim must be positive");
  }
  if (!(spec.rho > 0.0) || !(spec.feature_radius > 0.0) ||
      !(spec.radius_w > 0.0) || !(spec.radius_v > 0.0) ||
      !(spec.separation >= 0.0)) {
    return absl::InvalidArgumentError(
        "rho, feature_radius and radii must be positive; separation >= 0");
  }
  if (spec.constant_samples <= 0) {
    return absl::InvalidArgumentError("constant_samples must be positive");
  }
  const double q = spec.q;
  const double mw = spec.radius_w, mv = spec.radius_v;
  const double rx = spec.separation + spec.feature_radius;
  AucParams params{spec.feature_dim, q, spec.rho, spec.separation,
                   spec.feature_radius, 0.0};
  // |u'x| <= M_W R_x and |1 + alpha| <= 1 + M_V bound the linear term; the
  // alpha^2 terms are at least -(q(1-q) + rho/2) M_V^2.
  params.offset = 2.0 * (1.0 + mv) * std::max(q, 1.0 - q) * mw * rx +
                  (q * (1.0 - q) + 0.5 * spec.rho) * mv * mv;
  auto model = std::make_shared<AucModel>(params);

  const int dim_w = spec.feature_dim + 2;
  Rng rng(DeriveSeed(seed, "auc-constants"));
  double max_grad = 0.0, max_loss = 0.0, max_smooth = spec.rho;
  Vector gw(dim_w), gv(1), v(1);
  for (int k = 0; k < spec.constant_samples; ++k) {
    const Vector w = SampleUniformBall(dim_w, mw, rng);
    v[0] = mv * (2.0 * rng.NextUniform() - 1.0);
    const Vector z = model->SamplePoint(rng);
    model->Gradients(w, v, z, gw, gv);
    max_grad = std::max({max_grad, gw.norm(), gv.norm()});
    max_loss = std::max(max_loss, model->Loss(w, v, z));
    max_smooth = std::max(max_smooth, model->BlockSmoothness(z));
  }
  constexpr double kInflation = 1.25;

  ProblemInstance inst;
  inst.name = "auc";
  inst.kind = InstanceKind::kAuc;
  inst.dim_w = dim_w;
  inst.dim_v = 1;
  inst.dim_z = spec.feature_dim + 1;
  inst.radius_w = mw;
  inst.radius_v = mv;
  inst.rho = spec.rho;
  inst.lipschitz = kInflation * max_grad;
  inst.smooth = kInflation * max_smooth;
  inst.loss_bound = kInflation * max_loss;
  inst.model = std::move(model);
  return inst;
}

absl::StatusOr<Dataset> GenDataset(const ProblemInstance& inst, int n,
                                   uint64_t seed) {
  if (n <= 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("dataset size must be positive, got %d", n));
  }
  Rng rng(DeriveSeed(seed, "train"));
  Dataset data;
  data.seed = seed;
  data.points.reserve(n);
  for (int i = 0; i < n; ++i) data.points.push_back(inst.model->SamplePoint(rng));
  return data;
}

absl::StatusOr<Dataset> EvalSet(const ProblemInstance& inst, int n,
                                uint64_t seed) {
  if (n <= 0) {
    return absl::InvalidArgumentError(
        absl::StrFormat("eval set size must be positive, got %d", n));
  }
  Rng rng(DeriveSeed(seed, "eval"));
  Dataset data;
  data.seed = seed;
  data.points.reserve(n);
  for (int i = 0; i < n; ++i) data.points.push_back(inst.model->SamplePoint(rng));
  return data;
}

absl::Status WriteDatasetCsv(const Dataset& data, std::ostream& out) {
  if (data.points.empty()) return absl::InvalidArgumentError("empty dataset");
  const Eigen::Index dim = data.points.front().size();
  WriteSchemaLine(out, "dataset", 1);
  for (Eigen::Index j = 0; j < dim; ++j) {
    out << (j ? "," : "") << "z" << j;
  }
  out << "\n";
  for (const Vector& z : data.points) {
    if (z.size() != dim) {
      return absl::InvalidArgumentError("ragged dataset");
    }
    for (Eigen::Index j = 0; j < dim; ++j) {
      out << (j ? "," : "") << Num(z[j]);
    }
    out << "\n";
  }
  if (!out) return absl::DataLossError("failed writing dataset CSV");
  return absl::OkStatus();
}

absl::StatusOr<Dataset> ReadDatasetCsv(std::istream& in) {
  std::string line;
  int dim = -1;
  Dataset data;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    absl::string_view view = absl::StripAsciiWhitespace(line);
    if (view.empty() || view.front() == '#') continue;
    std::vector<absl::string_view> fields = absl::StrSplit(view, ',');
    if (dim < 0) {
      for (size_t j = 0; j < fields.size(); ++j) {
        if (fields[j] != absl::StrFormat("z%d", j)) {
          return absl::InvalidArgumentError(absl::StrFormat(
              "line %d: expected header z0,z1,..., got '%s'", line_no, view));
        }
      }
      dim = static_cast<int>(fields.size());
      continue;
    }
    if (static_cast<int>(fields.size()) != dim) {
      return absl::InvalidArgumentError(absl::StrFormat(
          "line %d: expected %d fields, got %d", line_no, dim, fields.size()));
    }
    Vector z(dim);
    for (int j = 0; j < dim; ++j) {
      if (!absl::SimpleAtod(fields[j], &z[j]) || !std::isfinite(z[j])) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "line %d: bad number '%s'", line_no, fields[j]));
      }
    }
    data.points.push_back(std::move(z));
  }
  if (dim < 0) return absl::InvalidArgumentError("missing CSV header");
  return data;
}

}  // namespace dpminimax
