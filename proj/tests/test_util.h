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

#ifndef DPMINIMAX_TESTS_TEST_UTIL_H_
#define DPMINIMAX_TESTS_TEST_UTIL_H_

#include <initializer_list>
#include <memory>

#include <gtest/gtest.h>

#include "dpminimax/numerics.h"
#include "dpminimax/problem.h"

namespace dpminimax::testing {

inline Vector Vec(std::initializer_list<double> xs) {
  Vector v(xs.size());
  int i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

inline Matrix Mat(int rows, int cols, std::initializer_list<double> xs) {
  Matrix m(rows, cols);
  auto it = xs.begin();
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = *it++;
  }
  return m;
}

template <typename T>
T Unwrap(absl::StatusOr<T> value) {
  EXPECT_TRUE(value.ok()) << value.status();
  return *std::move(value);
}

struct Quadratic {
  QuadraticSaddleSpec spec;
  ProblemInstance inst;
};

// The coupled instance shared by the optimizer and risk tests.
inline Quadratic RandomQuadratic(int dim = 8, double rho = 1.0,
                                 double coupling = 0.5, uint64_t seed = 1) {
  RandomQuadraticOptions options;
  options.dim_w = options.dim_v = options.dim_z = dim;
  options.rho = rho;
  options.coupling_norm = coupling;
  Quadratic q;
  q.spec = Unwrap(RandomQuadraticSpec(options, seed));
  q.inst = Unwrap(MakeQuadraticSaddle(q.spec));
  return q;
}

inline Vector RandomInBall(int dim, double radius, Rng& rng) {
  return SampleUniformBall(dim, radius, rng);
}

inline std::unique_ptr<DatasetObjective> BindOrDie(const ProblemInstance& inst,
                                                   const Dataset& data) {
  return Unwrap(inst.Bind(data));
}

}  // namespace dpminimax::testing

#endif  // DPMINIMAX_TESTS_TEST_UTIL_H_
