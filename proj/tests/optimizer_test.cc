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
#include <sstream>

#include <gtest/gtest.h>

#include "dpminimax/risk.h"
#include "test_util.h"

namespace dpminimax {
namespace {

using testing::BindOrDie;
using testing::Mat;
using testing::RandomQuadratic;
using testing::Unwrap;
using testing::Vec;

QuadraticSaddleSpec DecoupledSpec(double rho) {
  QuadraticSaddleSpec spec;
  spec.A = Mat(2, 2, {1.0, 0.2, 0.0, 0.8});
  spec.C = Mat(2, 2, {0.5, 0.0, -0.3, 1.0});
  spec.B = Matrix::Zero(2, 2);
  spec.rho = rho;
  spec.data_radius = 1.0;
  return spec;
}

Dataset SmallData() {
  return Dataset{{Vec({0.5, 0.1}), Vec({-0.2, 0.6}), Vec({0.3, -0.3})}, 0};
}

NoisePlan PlanFor(const ProblemInstance& inst, int64_t T, int64_t n) {
  return Unwrap(CalibrateSigma(inst.lipschitz, T, n, {1.0, 1e-5}));
}

TEST(Schedule, RejectsNonPositiveSteps) {
  EXPECT_FALSE((Schedule{0.0, 0.0}).Validate().ok());
  EXPECT_FALSE((Schedule{1.0, -0.5}).Validate().ok());
  EXPECT_TRUE((Schedule{2.0, 3.0}).Validate().ok());
  EXPECT_DOUBLE_EQ((Schedule{2.0, 3.0}).Eta(1), 1.0 / 8.0);
}

// With B = 0 and eta = 1/rho the first step from the origin lands on
// (A z_bar, C z_bar).
TEST(GdaStep, DecoupledFirstStepReachesBlockOptimum) {
  const QuadraticSaddleSpec spec = DecoupledSpec(1.7);
  const ProblemInstance inst = Unwrap(MakeQuadraticSaddle(spec));
  const Dataset data = SmallData();
  auto obj = BindOrDie(inst, data);
  Vector z_bar = Vector::Zero(2);
  for (const Vector& z : data.points) z_bar += z / 3.0;
  const Vector zero = Vector::Zero(2);
  auto [w, v] =
      Unwrap(GdaStep(inst, *obj, zero, zero, 1.0 / spec.rho, zero, zero));
  EXPECT_NEAR((w - spec.A * z_bar).norm(), 0.0, 1e-15);
  EXPECT_NEAR((v - spec.C * z_bar).norm(), 0.0, 1e-15);

  const Trajectory traj =
      Unwrap(RunGda(inst, data, 1, {spec.rho, 0.0}, std::nullopt, 0));
  EXPECT_EQ(traj.last_w, w);
  EXPECT_EQ(traj.last_v, v);
  // The average covers w_1 only.
  EXPECT_EQ(traj.avg_w, zero);
  EXPECT_EQ(traj.avg_v, zero);
}

TEST(GdaStep, SaddleIsFixedPoint) {
  const auto q = RandomQuadratic(4, 1.0, 0.6, 5);
  const Dataset data = Unwrap(GenDataset(q.inst, 10, 1));
  auto obj = BindOrDie(q.inst, data);
  auto [ws, vs] = Unwrap(ClosedFormSaddle(q.spec, data));
  const Vector zero = Vector::Zero(4);
  auto [w, v] = Unwrap(GdaStep(q.inst, *obj, ws, vs, 0.3, zero, zero));
  EXPECT_LE((w - ws).norm() + (v - vs).norm(), 1e-14);
}

TEST(GdaStep, SmallNoiseStaysNearNoiselessStep) {
  const auto q = RandomQuadratic(4, 1.0, 0.6, 5);
  const Dataset data = Unwrap(GenDataset(q.inst, 10, 1));
  auto obj = BindOrDie(q.inst, data);
  Rng rng(3);
  const Vector zero = Vector::Zero(4);
  for (int k = 0; k < 50; ++k) {
    const Vector w = testing::RandomInBall(4, q.inst.radius_w, rng);
    const Vector v = testing::RandomInBall(4, q.inst.radius_v, rng);
    const Vector bw = Unwrap(SampleGaussian(4, 1e-3, rng));
    const Vector bv = Unwrap(SampleGaussian(4, 1e-3, rng));
    const double eta = 0.2;
    auto [w0, v0] = Unwrap(GdaStep(q.inst, *obj, w, v, eta, zero, zero));
    auto [w1, v1] = Unwrap(GdaStep(q.inst, *obj, w, v, eta, bw, bv));
    EXPECT_LE((w1 - w0).norm(), eta * bw.norm() + 1e-15);
    EXPECT_LE((v1 - v0).norm(), eta * bv.norm() + 1e-15);
  }
}

TEST(GdaStep, RejectsDimensionMismatch) {
  const auto q = RandomQuadratic(3);
  auto obj = BindOrDie(q.inst, Dataset{{Vector::Zero(3)}, 0});
  const Vector z3 = Vector::Zero(3);
  EXPECT_FALSE(
      GdaStep(q.inst, *obj, Vector::Zero(2), z3, 0.1, z3, z3).ok());
  EXPECT_FALSE(
      GdaStep(q.inst, *obj, z3, z3, 0.1, Vector::Zero(4), z3).ok());
}

// Both gradients are taken at (w_t, v_t), so computing the blocks in either
// order gives the same result while an alternating update does not.
TEST(GdaStep, UpdateIsSimultaneous) {
  const auto q = RandomQuadratic(4, 1.0, 0.9, 8);
  const Dataset data = Unwrap(GenDataset(q.inst, 10, 2));
  auto obj = BindOrDie(q.inst, data);
  Rng rng(4);
  const Vector w = testing::RandomInBall(4, q.inst.radius_w, rng);
  const Vector v = testing::RandomInBall(4, q.inst.radius_v, rng);
  const Vector zero = Vector::Zero(4);
  const double eta = 0.5;
  auto [w1, v1] = Unwrap(GdaStep(q.inst, *obj, w, v, eta, zero, zero));

  Vector gw(4), gv(4);
  obj->Gradients(w, v, gw, gv);
  const Vector v_first = Unwrap(ProjectBall(v + eta * gv, q.inst.radius_v));
  const Vector w_second = Unwrap(ProjectBall(w - eta * gw, q.inst.radius_w));
  EXPECT_EQ(w1, w_second);
  EXPECT_EQ(v1, v_first);

  Vector gw_alt(4), gv_alt(4);
  obj->Gradients(w, v_first, gw_alt, gv_alt);
  const Vector w_alternating =
      Unwrap(ProjectBall(w - eta * gw_alt, q.inst.radius_w));
  EXPECT_GT((w_alternating - w1).norm(), 1e-6);
}

TEST(RunGda, ZeroSigmaMatchesNoiseless) {
  const auto q = RandomQuadratic(4);
  const Dataset data = Unwrap(GenDataset(q.inst, 50, 3));
  NoisePlan plan = PlanFor(q.inst, 200, 50);
  plan.sigma = 0.0;
  const Schedule schedule{q.inst.rho, 0.0};
  const Trajectory a = Unwrap(RunGda(q.inst, data, 200, schedule, plan, 11));
  const Trajectory b =
      Unwrap(RunGda(q.inst, data, 200, schedule, std::nullopt, 11));
  EXPECT_EQ(a.avg_w, b.avg_w);
  EXPECT_EQ(a.avg_v, b.avg_v);
  EXPECT_EQ(a.last_w, b.last_w);
}

TEST(RunGda, AveragingIdentityAndFeasibility) {
  const auto q = RandomQuadratic(4);
  const Dataset data = Unwrap(GenDataset(q.inst, 50, 3));
  const NoisePlan plan = PlanFor(q.inst, 300, 50);
  RunOptions options;
  options.retain_iterates = true;
  const Trajectory traj = Unwrap(
      RunGda(q.inst, data, 300, {q.inst.rho, 0.0}, plan, 17, options));
  ASSERT_EQ(traj.iterates.size(), 301u);
  EXPECT_EQ(traj.iterates.front().first, Vector::Zero(4));
  Vector sum_w = Vector::Zero(4), sum_v = Vector::Zero(4);
  for (size_t t = 0; t < 300; ++t) {
    sum_w += traj.iterates[t].first;
    sum_v += traj.iterates[t].second;
  }
  for (const auto& [w, v] : traj.iterates) {
    ASSERT_LE(w.norm(), q.inst.radius_w * (1 + 1e-12));
    ASSERT_LE(v.norm(), q.inst.radius_v * (1 + 1e-12));
  }
  EXPECT_LE((sum_w / 300 - traj.avg_w).norm(), 1e-12 * traj.avg_w.norm());
  EXPECT_LE((sum_v / 300 - traj.avg_v).norm(), 1e-12 * traj.avg_v.norm());
  EXPECT_EQ(traj.iterates.back().first, traj.last_w);
}

TEST(RunGda, SameSeedReplays) {
  const auto q = RandomQuadratic(4);
  const Dataset data = Unwrap(GenDataset(q.inst, 50, 3));
  const NoisePlan plan = PlanFor(q.inst, 100, 50);
  const Schedule schedule{q.inst.rho, 0.0};
  const Trajectory a = Unwrap(RunGda(q.inst, data, 100, schedule, plan, 5));
  const Trajectory b = Unwrap(RunGda(q.inst, data, 100, schedule, plan, 5));
  const Trajectory c = Unwrap(RunGda(q.inst, data, 100, schedule, plan, 6));
  EXPECT_EQ(a.avg_w, b.avg_w);
  EXPECT_NE(a.avg_w, c.avg_w);
}

TEST(RunGda, PlanMustMatchAndVerify) {
  const auto q = RandomQuadratic(3);
  const Dataset data = Unwrap(GenDataset(q.inst, 20, 3));
  NoisePlan plan = PlanFor(q.inst, 100, 20);
  EXPECT_EQ(RunGda(q.inst, data, 99, {1.0, 0.0}, plan, 0).status().code(),
            absl::StatusCode::kInvalidArgument);
  plan.verified = false;
  EXPECT_EQ(RunGda(q.inst, data, 100, {1.0, 0.0}, plan, 0).status().code(),
            absl::StatusCode::kFailedPrecondition);
  EXPECT_FALSE(RunGda(q.inst, data, 0, {1.0, 0.0}, std::nullopt, 0).ok());
}

// Noiseless rate: strong PD <= 3 G^2 log(eT) / (rho T) and distance to the
// saddle <= 2 sqrt(G^2 log(eT) / (rho^2 T)).
TEST(RunGda, NoiselessConvergence) {
  const auto q = RandomQuadratic(4, 1.0, 0.5, 9);
  const Dataset data = Unwrap(GenDataset(q.inst, 40, 4));
  auto obj = BindOrDie(q.inst, data);
  auto [ws, vs] = Unwrap(ClosedFormSaddle(q.spec, data));
  const double G = q.inst.lipschitz, rho = q.inst.rho;
  InnerSolverOptions options;
  options.tol = 1e-10;
  for (int64_t T : {100, 1000, 10000}) {
    const Trajectory traj =
        Unwrap(RunGda(q.inst, *obj, T, {rho, 0.0}, std::nullopt, 0));
    const double rate = G * G * std::log(M_E * T) / (rho * T);
    const double pd = Unwrap(StrongPd(q.inst, *obj, traj.avg_w, traj.avg_v, options));
    EXPECT_LE(pd, 3 * rate) << "T=" << T;
    const double dist =
        std::sqrt((traj.avg_w - ws).squaredNorm() + (traj.avg_v - vs).squaredNorm());
    EXPECT_LE(dist, 2 * std::sqrt(rate / rho)) << "T=" << T;
  }
}

TEST(CoupledRuns, IdenticalDatasetsGiveIdenticalRuns) {
  const auto q = RandomQuadratic(4);
  const Dataset data = Unwrap(GenDataset(q.inst, 30, 3));
  const NoisePlan plan = PlanFor(q.inst, 50, 30);
  auto [a, b] =
      Unwrap(CoupledRuns(q.inst, data, data, 50, {q.inst.rho, 0.0}, plan, 8));
  EXPECT_EQ(a.avg_w, b.avg_w);
  EXPECT_EQ(a.avg_v, b.avg_v);
}

TEST(CoupledRuns, SharedNoiseMatchesSeparateRuns) {
  const auto q = RandomQuadratic(4);
  const Dataset data = Unwrap(GenDataset(q.inst, 30, 3));
  Dataset adj = data;
  adj.points[7] = Vector::Zero(4);
  const NoisePlan plan = PlanFor(q.inst, 50, 30);
  const Schedule schedule{q.inst.rho, 0.0};
  auto [a, b] = Unwrap(CoupledRuns(q.inst, data, adj, 50, schedule, plan, 8));
  EXPECT_EQ(a.avg_w, Unwrap(RunGda(q.inst, data, 50, schedule, plan, 8)).avg_w);
  EXPECT_EQ(b.avg_w, Unwrap(RunGda(q.inst, adj, 50, schedule, plan, 8)).avg_w);
  EXPECT_NE(a.avg_w, b.avg_w);
}

TEST(CoupledRuns, RejectsNonAdjacent) {
  const auto q = RandomQuadratic(4);
  const Dataset data = Unwrap(GenDataset(q.inst, 30, 3));
  Dataset far = data;
  far.points[0] = Vector::Zero(4);
  far.points[1] = Vector::Zero(4);
  EXPECT_EQ(CoupledRuns(q.inst, data, far, 10, {1.0, 0.0}, std::nullopt, 0)
                .status()
                .code(),
            absl::StatusCode::kInvalidArgument);
  Dataset shorter = data;
  shorter.points.pop_back();
  EXPECT_FALSE(
      CoupledRuns(q.inst, data, shorter, 10, {1.0, 0.0}, std::nullopt, 0).ok());
}

TEST(WriteTrajectoryCsv, NeedsRetainedIterates) {
  const auto q = RandomQuadratic(2);
  const Dataset data = Unwrap(GenDataset(q.inst, 5, 3));
  std::ostringstream out;
  const Trajectory bare =
      Unwrap(RunGda(q.inst, data, 3, {1.0, 0.0}, std::nullopt, 0));
  EXPECT_FALSE(WriteTrajectoryCsv(bare, out).ok());
  RunOptions options;
  options.retain_iterates = true;
  const Trajectory full =
      Unwrap(RunGda(q.inst, data, 3, {1.0, 0.0}, std::nullopt, 0, options));
  ASSERT_TRUE(WriteTrajectoryCsv(full, out).ok());
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "# schema=trajectory@1");
  std::getline(lines, line);
  EXPECT_EQ(line, "t,w_0,w_1,v_0,v_1");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 4);
}

}  // namespace
}  // namespace dpminimax
