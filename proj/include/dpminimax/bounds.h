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

#ifndef DPMINIMAX_BOUNDS_H_
#define DPMINIMAX_BOUNDS_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace dpminimax {

// Inputs shared by the closed-form bounds. All logs are natural.
struct BoundInputs {
  double G = 1.0;
  double rho = 1.0;
  double L = 1.0;
  double M_ell = 1.0;
  double M_W = 1.0;
  double M_V = 1.0;
  double sigma = 0.0;
  double T = 1.0;
  double n = 1.0;
  double p = 1.0;
  double epsilon = 1.0;
  double delta = 1e-5;
  double zeta = 0.1;
  double iota = 0.5;
  double g_w = 0.0;
  double g_v = 0.0;
  // Argument stability parameter for the generalization bounds.
  double gamma = 0.0;
  double delta_s_emp = 0.0;
  double delta_s_emp_expect = 0.0;
};

// A right-hand side together with the coefficient that multiplies the
// empirical (or optimal) term on the left-hand side, e.g. 1/(1-iota) in
//   L(w, v) - L_S(w, v) / (1 - iota) <= value.
struct BoundEvaluation {
  double value = 0.0;
  double lhs_coefficient = 1.0;
};

// 1 + (8 log(2T/zeta) / p)^(1/4), for zeta in (0, 2T].
absl::StatusOr<double> PZeta(double T, double p, double zeta);

// Argument stability of the averaged DP-GDA output with probability 1-zeta,
// for zeta in (exp(-p/8), 1):
//   4G/(n rho) + 2 sigma sqrt(p) log(eT) p_zeta / T
//   + 4 sqrt( G^2 log(eT)/(rho^2 T) + sigma^2 p log(eT) p_zeta^2/(rho^2 T)
//            + 2 G sigma sqrt(p) log(eT) p_zeta/(rho^2 T)
//            + (g_w + g_v) sigma sqrt(p) p_zeta / rho ).
absl::StatusOr<double> Theorem2Gamma(const BoundInputs& in);

// High-probability bounds on (g_w, g_v):
//   sqrt(log(eT)) sqrt( G^2/(rho^2 T)
//       + (2/rho)(G sigma sqrt(p)/T + M sigma sqrt(p)/log(eT)) p'
//       + sigma^2 p p'^2/(rho T) ),
// with p' = 1 + (8 log(T/zeta)/p)^(1/4) and M = M_W for g_w, M_V for g_v.
absl::StatusOr<std::pair<double, double>> Remark3GBound(const BoundInputs& in);

// Strong PD empirical risk of the averaged output, in terms of sigma:
//   G^2 log(eT)/(rho T) + sigma^2 p log(eT) p_zeta^2/(rho T)
//   + 2 G sigma sqrt(p) log(eT) p_zeta/(rho T) + (g_w + g_v) sigma sqrt(p)
//   p_zeta.
absl::StatusOr<double> Lemma9DeltaS(const BoundInputs& in);

// The same bound with sigma written through the calibration constant c:
//   G^2 log(eT)/(rho T) + c G (g_w + g_v) sqrt(T p log(1/delta)) p_zeta/(n eps)
//   + c G^2 log(eT) (p log(1/delta) p_zeta^2/(rho n^2 eps^2)
//                    + 2 sqrt(p log(1/delta)) p_zeta/(rho sqrt(T) n eps)).
absl::StatusOr<double> Lemma9DeltaSInTermsOfC(const BoundInputs& in, double c);

// Generalization bounds driven by argument stability gamma. log n enters as
// ceil(log n).
absl::StatusOr<BoundEvaluation> Thm3aPlain(const BoundInputs& in);
absl::StatusOr<BoundEvaluation> Thm3bPrimal(const BoundInputs& in);
absl::StatusOr<BoundEvaluation> Thm3cExcess(const BoundInputs& in);
// The strong and weak PD bounds share, with l = log(e/zeta),
//   common = 100 sqrt(2) e (1+iota)(1+L/rho) G gamma ceil(log n) l/(1-iota)
//          + 144 e (1+iota) G^2 l/(rho iota (1-iota) n)
//          + 8 e (1+iota) M_ell l/(n (1-iota)),
// and keep D = delta_s_emp apart from E[D] = delta_s_emp_expect:
//   common + (e iota/(1-iota)) l E[D] + D.
absl::StatusOr<BoundEvaluation> Thm3dStrongPd(const BoundInputs& in);
// common + (e iota/(1-iota)) l E[D].
absl::StatusOr<BoundEvaluation> Cor1aStrongGen(const BoundInputs& in);
// Same right-hand side as Thm3dStrongPd.
absl::StatusOr<BoundEvaluation> Cor1bWeakPop(const BoundInputs& in);
// common + (e iota/(1-iota)) l E[D] + D + E[D].
absl::StatusOr<BoundEvaluation> Cor1cWeakGen(const BoundInputs& in);

// Names accepted by EvaluateBound.
std::vector<std::string> BoundNames();

// Dispatches by name. Scalar bounds report lhs_coefficient = 1; the two g
// bounds are exposed as "remark3_g_w" and "remark3_g_v".
absl::StatusOr<BoundEvaluation> EvaluateBound(std::string_view name,
                                              const BoundInputs& in);

}  // namespace dpminimax

#endif  // DPMINIMAX_BOUNDS_H_
