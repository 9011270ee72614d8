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

#ifndef DPMINIMAX_TESTS_ORACLES_SLOPE_H_
#define DPMINIMAX_TESTS_ORACLES_SLOPE_H_

#include <cmath>
#include <vector>

namespace dpminimax::oracle {

// Least-squares slope of log(y) against log(x).
inline double LogLogSlope(const std::vector<double>& x,
                          const std::vector<double>& y) {
  const size_t k = x.size();
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < k; ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= k;
  my /= k;
  double sxy = 0.0, sxx = 0.0;
  for (size_t i = 0; i < k; ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace dpminimax::oracle

#endif  // DPMINIMAX_TESTS_ORACLES_SLOPE_H_
