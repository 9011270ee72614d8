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

#include "dpminimax/risk.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"

namespace dpminimax {
namespace {

using testing::BindOrDie;
using testing::Mat;
using testing::RandomQuadratic;
using testing::Unwrap;
using testing::Vec;

struct Scalar {
  QuadraticSaddleSpec spec;
  ProblemInstance inst;
  Dataset data;
  double a_bar = 0.0;
  double c_bar = 0.0;
};

// p = 1 instance with strong coupling so that best responses hit the
// interval ends for large |w| or |v|.
Scalar MakeScalar() {
  Scalar s;
  s.spec.A = Mat(1, 1, {0.8});
  s.spec.C = Mat(1, 1, {-0.5});
  s.spec.B = Mat(1, 1, {3.0});
  s.spec.rho = 1.0;
  s.spec.data_radius = 1.0;
  s.inst = Unwrap(MakeQuadraticSaddle(s.spec));
  s.data = Dataset{{Vec({0.4}), Vec({0.9}), Vec({-0.1})}, 0};
  const double z_bar = (0.4 + 0.9 - 0.1) / 3.0;
  s.a_bar = 0.8 * z_bar;
  s.c_bar = -0.5 * z_bar;
  return s;
}

TEST(InnerMax, DecoupledMaximizerIgnoresW) {
  QuadraticSaddleSpec spec = RandomQuadratic(3).spec;
  spec.B.setZero();
  spec.radius_w = spec.radius_v = 0.0;
  const ProblemInstance inst = Unwrap(MakeQuadraticSaddle(spec));
  const Dataset data = Unwrap(GenDataset(inst, 25, 8));
  auto obj = BindOrDie(inst, data);
  Vector z_bar = Vector::Zero(3);
  for (const Vector& z : data.points) z_bar += z / 25.0;
  const Vector expected = Unwrap(ProjectBall(spec.C * z_bar, inst.radius_v));
  Rng rng(1);
  for (int k = 0; k < 5; ++k) {
    const Vector w = testing::RandomInBall(3, inst.radius_w, rng);
    const BestResponse best = Unwrap(InnerMax(inst, *obj, w));
    EXPECT_LE((best.argument - expected).norm(), 1e-8);
    EXPECT_LE(best.residual, 1e-8);
  }
  const BestResponse argmin = Unwrap(InnerMin(inst, *obj, Vector::Zero(3)));
  EXPECT_LE((argmin.argument - Unwrap(ProjectBall(spec.A * z_bar, inst.radius_w)))
                .norm(),
            1e-8);
}

// Stationarity b w - rho (v - c_bar) = 0 gives the vertex c_bar + b w / rho;
// the min side mirrors it with a_bar - b v / rho.
TEST(InnerMax, ScalarVertexIsClipped) {
  const Scalar s = MakeScalar();
  auto obj = BindOrDie(s.inst, s.data);
  bool clipped = false;
  for (double frac : {-1.0, -0.4, 0.0, 0.1, 0.7, 1.0}) {
    const double w = frac * s.inst.radius_w;
    const double vertex = s.c_bar + 3.0 * w / s.spec.rho;
    const double expected = std::clamp(vertex, -s.inst.radius_v, s.inst.radius_v);
    clipped |= expected != vertex;
    EXPECT_NEAR(Unwrap(InnerMax(s.inst, *obj, Vec({w}))).argument[0], expected,
                1e-8);
    const double v = frac * s.inst.radius_v;
    const double w_vertex = s.a_bar - 3.0 * v / s.spec.rho;
    EXPECT_NEAR(Unwrap(InnerMin(s.inst, *obj, Vec({v}))).argument[0],
                std::clamp(w_vertex, -s.inst.radius_w, s.inst.radius_w), 1e-8);
  }
  EXPECT_TRUE(clipped);
}

TEST(InnerMax, TolerancePropagatesThroughStrongConcavity) {
  const auto q = RandomQuadratic(4, 0.5, 0.8, 3);
  const Dataset data = Unwrap(GenDataset(q.inst, 30, 3));
  auto obj = BindOrDie(q.inst, data);
  Rng rng(6);
  InnerSolverOptions loose, tight;
  loose.tol = 1e-6;
  tight.tol = 1e-10;
  for (int k = 0; k < 10; ++k) {
    const Vector w = testing::RandomInBall(4, q.inst.radius_w, rng);
    const Vector a = Unwrap(InnerMax(q.inst, *obj, w, loose)).argument;
    const Vector b = Unwrap(InnerMax(q.inst, *obj, w, tight)).argument;
    EXPECT_LE((a - b).norm(), 2 * 1e-6 / q.inst.rho);
  }
}

TEST(InnerMax, RestartsAgree) {
  const auto q = RandomQuadratic(4, 1.0, 0.8, 4);
  const Dataset data = Unwrap(GenDataset(q.inst, 30, 3));
  auto obj = BindOrDie(q.inst, data);
  Rng rng(7);
  const Vector w = testing::RandomInBall(4, q.inst.radius_w, rng);
  const BestResponse base = Unwrap(InnerMax(q.inst, *obj, w));
  for (int k = 0; k < 10; ++k) {
    const Vector init = testing::RandomInBall(4, q.inst.radius_v, rng);
    const BestResponse restart =
        Unwrap(InnerMax(q.inst, *obj, w, {}, &init));
    EXPECT_LE(restart.residual, 1e-8);
    EXPECT_NEAR(restart.value, base.value, 10 * 1e-8);
  }
}

TEST(InnerMax, IterationCapIsResourceExhausted) {
  const auto q = RandomQuadratic(4);
  const Dataset data = Unwrap(GenDataset(q.inst, 30, 3));
  auto obj = BindOrDie(q.inst, data);
  InnerSolverOptions options;
  options.tol = 1e-14;
  options.max_iterations = 2;
  const Vector init = Vector::Constant(4, 0.1);
  EXPECT_EQ(InnerMax(q.inst, *obj, Vector::Zero(4), options, &init)
                .status()
                .code(),
            absl::StatusCode::kResourceExhausted);
}

TEST(InnerMax, PrimalDominatesLoss) {
  const auto q = RandomQuadratic(4, 1.0, 0.8, 4);
  const Dataset data = Unwrap(GenDataset(q.inst, 30, 3));
  auto obj = BindOrDie(q.inst, data);
  Rng rng(9);
  const Vector w = testing::RandomInBall(4, q.inst.radius_w, rng);
  const double primal = Unwrap(InnerMax(q.inst, *obj, w)).value;
  for (int k = 0; k < 100; ++k) {
    const Vector v = testing::RandomInBall(4, q.inst.radius_v, rng);
    EXPECT_GE(primal, obj->Value(w, v) - 1e-8);
  }
}

TEST(StrongPd, VanishesAtSaddleAndIsNonNegative) {
  const auto q = RandomQuadratic(4, 1.0, 0.7, 5);
  const Dataset data = Unwrap(GenDataset(q.inst, 30, 3));
  auto obj = BindOrDie(q.inst, data);
  auto [ws, vs] = Unwrap(ClosedFormSaddle(q.spec, data));
  const double tol = 1e-8;
  EXPECT_LE(std::abs(Unwrap(StrongPd(q.inst, *obj, ws, vs))), 2 * tol);
  Rng rng(10);
  for (int k = 0; k < 50; ++k) {
    const Vector w = testing::RandomInBall(4, q.inst.radius_w, rng);
    const Vector v = testing::RandomInBall(4, q.inst.radius_v, rng);
    EXPECT_GE(Unwrap(StrongPd(q.inst, *obj, w, v)), -2 * tol);
  }
}

// Brute force over 10^4 grid points per block. The grid misses the optimum
// by at most h/2, which costs at most G h in value.
TEST(StrongPd, ScalarMatchesGridSearch) {
  const Scalar s = MakeScalar();
  auto obj = BindOrDie(s.inst, s.data);
  const int points = 10000;
  for (auto [w, v] : {std::pair{0.3, -0.2}, std::pair{-0.9, 0.5},
                      std::pair{s.inst.radius_w, s.inst.radius_v}}) {
    double sup = -INFINITY, inf = INFINITY;
    for (int k = 0; k < points; ++k) {
      const double vk = -s.inst.radius_v + 2 * s.inst.radius_v * k / (points - 1);
      sup = std::max(sup, obj->Value(Vec({w}), Vec({vk})));
      const double wk = -s.inst.radius_w + 2 * s.inst.radius_w * k / (points - 1);
      inf = std::min(inf, obj->Value(Vec({wk}), Vec({v})));
    }
    const double h = 2 * std::max(s.inst.radius_w, s.inst.radius_v) / (points - 1);
    const double pd = Unwrap(StrongPd(s.inst, *obj, Vec({w}), Vec({v})));
    EXPECT_NEAR(pd, sup - inf, 2 * s.inst.lipschitz * h) << "w=" << w;
    EXPECT_GE(pd, sup - inf - 1e-7);
  }
}

TEST(WeakPd, NeedsTwoReplicates) {
  const auto q = RandomQuadratic(3);
  const Dataset data = Unwrap(GenDataset(q.inst, 10, 1));
  auto obj = BindOrDie(q.inst, data);
  const DatasetObjective* objectives[] = {obj.get()};
  const ParameterPair pair{Vector::Zero(3), Vector::Zero(3)};
  EXPECT_FALSE(WeakPd(q.inst, {pair}, objectives).ok());
}

TEST(WeakPd, IdenticalReplicatesEqualStrongPd) {
  const auto q = RandomQuadratic(3, 1.0, 0.6, 2);
  const Dataset data = Unwrap(GenDataset(q.inst, 20, 1));
  auto obj = BindOrDie(q.inst, data);
  Rng rng(3);
  const ParameterPair pair{testing::RandomInBall(3, q.inst.radius_w, rng),
                           testing::RandomInBall(3, q.inst.radius_v, rng)};
  const std::vector<ParameterPair> pairs(4, pair);
  const DatasetObjective* shared[] = {obj.get()};
  const std::vector<const DatasetObjective*> per_replicate(4, obj.get());
  const double strong = Unwrap(StrongPd(q.inst, *obj, pair.w, pair.v));
  EXPECT_NEAR(Unwrap(WeakPd(q.inst, pairs, shared)), strong, 4e-8);
  EXPECT_NEAR(Unwrap(WeakPd(q.inst, pairs, per_replicate)), strong, 4e-8);
}

TEST(WeakPd, BoundedByMeanStrongPd) {
  const auto q = RandomQuadratic(3, 1.0, 0.6, 2);
  std::vector<Dataset> datasets;
  std::vector<std::unique_ptr<DatasetObjective>> owned;
  std::vector<const DatasetObjective*> objectives;
  std::vector<ParameterPair> pairs;
  Rng rng(4);
  double mean_strong = 0.0;
  const int R = 8;
  for (int r = 0; r < R; ++r) {
    datasets.push_back(Unwrap(GenDataset(q.inst, 15, 100 + r)));
    owned.push_back(BindOrDie(q.inst, datasets.back()));
    objectives.push_back(owned.back().get());
    pairs.push_back({testing::RandomInBall(3, q.inst.radius_w, rng),
                     testing::RandomInBall(3, q.inst.radius_v, rng)});
    mean_strong +=
        Unwrap(StrongPd(q.inst, *owned.back(), pairs.back().w, pairs.back().v)) / R;
  }
  const double weak = Unwrap(WeakPd(q.inst, pairs, objectives));
  EXPECT_LE(weak, mean_strong + 4e-8);
  EXPECT_GE(weak, -4e-8);
}

TEST(PlainGap, VanishesOnTrainingSet) {
  const auto q = RandomQuadratic(3);
  const Dataset data = Unwrap(GenDataset(q.inst, 20, 1));
  auto train = BindOrDie(q.inst, data);
  auto eval = BindOrDie(q.inst, data);
  Rng rng(5);
  const Vector w = testing::RandomInBall(3, q.inst.radius_w, rng);
  const Vector v = testing::RandomInBall(3, q.inst.radius_v, rng);
  EXPECT_EQ(PlainGap(*train, *eval, w, v), 0.0);
  EXPECT_NEAR(Unwrap(PrimalGap(q.inst, *train, *eval, w)), 0.0, 1e-12);
  const RiskReport report =
      Unwrap(EvaluateRisks(q.inst, *train, *eval, 20, w, v));
  EXPECT_EQ(report.plain_gap(), 0.0);
  EXPECT_NEAR(report.primal_gap(), 0.0, 1e-12);
  EXPECT_NEAR(report.strong_pd_pop, report.strong_pd_emp, 1e-12);
  EXPECT_TRUE(std::isnan(report.weak_pd_emp));
}

TEST(PlainGap, DataIndependentLossHasNoGap) {
  QuadraticSaddleSpec spec;
  spec.A = Matrix::Zero(2, 2);
  spec.C = Matrix::Zero(2, 2);
  spec.B = Matrix::Zero(2, 2);
  spec.radius_w = spec.radius_v = 1.0;
  const ProblemInstance inst = Unwrap(MakeQuadraticSaddle(spec));
  auto train = BindOrDie(inst, Unwrap(GenDataset(inst, 10, 1)));
  auto eval = BindOrDie(inst, Unwrap(EvalSet(inst, 1000, 1)));
  const Vector w = Vec({0.3, -0.1}), v = Vec({0.2, 0.5});
  EXPECT_NEAR(PlainGap(*train, *eval, w, v), 0.0, 1e-14);
  EXPECT_NEAR(Unwrap(PrimalGap(inst, *train, *eval, w)), 0.0, 1e-12);
}

// Monte Carlo error model: the plain loss estimate on a 4N set differs from
// the estimate on its first N points by at most 2 M_l / sqrt(N) in at least
// 95 of 100 repetitions.
TEST(PopulationEstimate, NestedEvalSetsAgree) {
  const auto q = RandomQuadratic(3);
  Rng rng(12);
  const Vector w = testing::RandomInBall(3, q.inst.radius_w, rng);
  const Vector v = testing::RandomInBall(3, q.inst.radius_v, rng);
  const int N = 500;
  int within = 0;
  for (int rep = 0; rep < 100; ++rep) {
    Dataset big = Unwrap(EvalSet(q.inst, 4 * N, 1000 + rep));
    Dataset small{{big.points.begin(), big.points.begin() + N}, 0};
    const double a = BindOrDie(q.inst, small)->Value(w, v);
    const double b = BindOrDie(q.inst, big)->Value(w, v);
    if (std::abs(a - b) <= 2 * q.inst.loss_bound / std::sqrt(N)) ++within;
  }
  EXPECT_GE(within, 95);
}

TEST(GDistances, ZeroAtSaddle) {
  const auto q = RandomQuadratic(3, 1.0, 0.6, 7);
  const Dataset data = Unwrap(GenDataset(q.inst, 20, 1));
  auto obj = BindOrDie(q.inst, data);
  auto [ws, vs] = Unwrap(ClosedFormSaddle(q.spec, data));
  Trajectory traj;
  traj.avg_w = ws;
  traj.avg_v = vs;
  const GDistances g = Unwrap(ComputeGDistances(q.inst, *obj, traj));
  EXPECT_LE(g.g_w, 1e-7);
  EXPECT_LE(g.g_v, 1e-7);
}

TEST(GDistances, DecoupledMatchesKnownBestResponse) {
  QuadraticSaddleSpec spec = RandomQuadratic(3).spec;
  spec.B.setZero();
  spec.radius_w = spec.radius_v = 0.0;
  const ProblemInstance inst = Unwrap(MakeQuadraticSaddle(spec));
  const Dataset data = Unwrap(GenDataset(inst, 20, 2));
  auto obj = BindOrDie(inst, data);
  Vector z_bar = Vector::Zero(3);
  for (const Vector& z : data.points) z_bar += z / 20.0;
  const Trajectory traj =
      Unwrap(RunGda(inst, *obj, 7, {inst.rho, 0.0}, std::nullopt, 0));
  const GDistances g = Unwrap(ComputeGDistances(inst, *obj, traj));
  EXPECT_NEAR(g.g_w,
              (Unwrap(ProjectBall(spec.A * z_bar, inst.radius_w)) - traj.avg_w).norm(),
              1e-8);
  EXPECT_NEAR(g.g_v,
              (Unwrap(ProjectBall(spec.C * z_bar, inst.radius_v)) - traj.avg_v).norm(),
              1e-8);
}

TEST(RiskReportCsv, RowMatchesHeader) {
  const auto count = [](const std::string& s) {
    return std::count(s.begin(), s.end(), ',');
  };
  RiskReport report;
  EXPECT_EQ(count(RiskReportCsvHeader()), count(RiskReportCsvRow(report)));
}

}  // namespace
}  // namespace dpminimax
