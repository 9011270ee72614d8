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

#include "dpminimax/bounds.h"

#include <cmath>
#include <numbers>

#include "absl/status/status.h"
#include "absl/strings/str_format.h"

namespace dpminimax {
namespace {

constexpr double kE = std::numbers::e;
constexpr double kSqrt2 = std::numbers::sqrt2;

bool Finite(double x) { return std::isfinite(x); }

absl::Status CheckOptimizationInputs(const BoundInputs& in) {
  if (!(in.G > 0.0) || !(in.rho > 0.0) || !(in.n >= 1.0) || !(in.T >= 1.0) ||
      !(in.p >= 1.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "need G > 0, rho > 0, n >= 1, T >= 1, p >= 1; got G=%g rho=%g n=%g "
        "T=%g p=%g",
        in.G, in.rho, in.n, in.T, in.p));
  }
  if (!(in.sigma >= 0.0) || !Finite(in.sigma) || !(in.g_w >= 0.0) ||
      !(in.g_v >= 0.0) || !Finite(in.g_w) || !Finite(in.g_v)) {
    return absl::InvalidArgumentError("need sigma, g_w, g_v finite and >= 0");
  }
  if (!(in.zeta > std::exp(-in.p / 8.0) && in.zeta < 1.0)) {
    return absl::OutOfRangeError(absl::StrFormat(
        "zeta=%g outside (exp(-p/8), 1) = (%g, 1) for p=%g", in.zeta,
        std::exp(-in.p / 8.0), in.p));
  }
  return absl::OkStatus();
}

absl::Status CheckGeneralizationInputs(const BoundInputs& in) {
  if (!(in.iota > 0.0 && in.iota < 1.0)) {
    return absl::OutOfRangeError(
        absl::StrFormat("iota=%g outside (0, 1)", in.iota));
  }
  if (!(in.zeta > 0.0 && in.zeta < 1.0)) {
    return absl::OutOfRangeError(
        absl::StrFormat("zeta=%g outside (0, 1)", in.zeta));
  }
  if (!(in.n >= 1.0) || !(in.gamma >= 0.0) || !Finite(in.gamma) ||
      !(in.G >= 0.0) || !(in.M_ell >= 0.0) || !(in.rho > 0.0) ||
      !(in.L >= 0.0)) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "need n >= 1, gamma >= 0, G >= 0, M_ell >= 0, rho > 0, L >= 0; got "
        "n=%g gamma=%g G=%g M_ell=%g rho=%g L=%g",
        in.n, in.gamma, in.G, in.M_ell, in.rho, in.L));
  }
  if (!Finite(in.delta_s_emp) || !Finite(in.delta_s_emp_expect)) {
    return absl::InvalidArgumentError("strong PD inputs must be finite");
  }
  return absl::OkStatus();
}

double CeilLogN(double n) { return std::ceil(std::log(n)); }

// Shared part of the strong and weak PD bounds.
double PdCommon(const BoundInputs& in) {
  const double iota = in.iota;
  const double log_e_zeta = std::log(kE / in.zeta);
  return 100.0 * kSqrt2 * kE * (1.0 + iota) * (1.0 + in.L / in.rho) * in.G *
             in.gamma * CeilLogN(in.n) / (1.0 - iota) * log_e_zeta +
         144.0 * kE * (1.0 + iota) * in.G * in.G /
             (in.rho * iota * (1.0 - iota) * in.n) * log_e_zeta +
         8.0 * kE * (1.0 + iota) * in.M_ell / (in.n * (1.0 - iota)) *
             log_e_zeta;
}

double ExpectationCoefficient(const BoundInputs& in) {
  return kE * in.iota / (1.0 - in.iota) * std::log(kE / in.zeta);
}

}  // namespace

absl::StatusOr<double> PZeta(double T, double p, double zeta) {
  if (!(T >= 1.0) || !(p >= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrFormat("need T >= 1 and p >= 1, got T=%g p=%g", T, p));
  }
  if (!(zeta > 0.0 && zeta <= 2.0 * T)) {
    return absl::OutOfRangeError(
        absl::StrFormat("zeta=%g outside (0, 2T] = (0, %g]", zeta, 2.0 * T));
  }
  return 1.0 + std::pow(8.0 * std::log(2.0 * T / zeta) / p, 0.25);
}

absl::StatusOr<double> Theorem2Gamma(const BoundInputs& in) {
  if (absl::Status s = CheckOptimizationInputs(in); !s.ok()) return s;
  absl::StatusOr<double> pz = PZeta(in.T, in.p, in.zeta);
  if (!pz.ok()) return pz.status();
  const double T = in.T, G = in.G, rho = in.rho, sigma = in.sigma;
  const double sqrt_p = std::sqrt(in.p), log_et = std::log(kE * T);
  const double radicand =
      G * G * log_et / (rho * rho * T) +
      sigma * sigma * in.p * log_et / (rho * rho * T) * *pz * *pz +
      2.0 * G * sigma * sqrt_p * log_et / (rho * rho * T) * *pz +
      (in.g_w + in.g_v) * sigma * sqrt_p * *pz / rho;
  return 4.0 * G / (in.n * rho) + 2.0 * sigma * sqrt_p * log_et / T * *pz +
         4.0 * std::sqrt(radicand);
}

absl::StatusOr<std::pair<double, double>> Remark3GBound(const BoundInputs& in) {
  if (absl::Status s = CheckOptimizationInputs(in); !s.ok()) return s;
  if (!(in.M_W >= 0.0) || !(in.M_V >= 0.0)) {
    return absl::InvalidArgumentError("need M_W, M_V >= 0");
  }
  const double T = in.T, G = in.G, rho = in.rho, sigma = in.sigma;
  const double sqrt_p = std::sqrt(in.p), log_et = std::log(kE * T);
  const double pp = 1.0 + std::pow(8.0 * std::log(T / in.zeta) / in.p, 0.25);
  auto bound = [&](double M) {
    const double radicand =
        G * G / (rho * rho * T) +
        (2.0 / rho) * (G * sigma * sqrt_p / T + M * sigma * sqrt_p / log_et) *
            pp +
        sigma * sigma * in.p / (rho * T) * pp * pp;
    return std::sqrt(log_et) * std::sqrt(radicand);
  };
  return std::make_pair(bound(in.M_W), bound(in.M_V));
}

absl::StatusOr<double> Lemma9DeltaS(const BoundInputs& in) {
  if (absl::Status s = CheckOptimizationInputs(in); !s.ok()) return s;
  absl::StatusOr<double> pz = PZeta(in.T, in.p, in.zeta);
  if (!pz.ok()) return pz.status();
  const double T = in.T, G = in.G, rho = in.rho, sigma = in.sigma;
  const double sqrt_p = std::sqrt(in.p), log_et = std::log(kE * T);
  return G * G * log_et / (rho * T) +
         sigma * sigma * in.p * log_et / (rho * T) * *pz * *pz +
         2.0 * G * sigma * sqrt_p * log_et / (rho * T) * *pz +
         (in.g_w + in.g_v) * sigma * sqrt_p * *pz;
}

absl::StatusOr<double> Lemma9DeltaSInTermsOfC(const BoundInputs& in,
                                              double c) {
  if (absl::Status s = CheckOptimizationInputs(in); !s.ok()) return s;
  if (!(c > 0.0) || !(in.epsilon > 0.0) ||
      !(in.delta > 0.0 && in.delta < 1.0)) {
    return absl::InvalidArgumentError("need c > 0, epsilon > 0, 0 < delta < 1");
  }
  absl::StatusOr<double> pz = PZeta(in.T, in.p, in.zeta);
  if (!pz.ok()) return pz.status();
  const double T = in.T, G = in.G, rho = in.rho, n = in.n, eps = in.epsilon;
  const double log_et = std::log(kE * T);
  const double log_inv_delta = std::log(1.0 / in.delta);
  return G * G * log_et / (rho * T) +
         c * G * (in.g_w + in.g_v) * std::sqrt(T * in.p * log_inv_delta) /
             (n * eps) * *pz +
         c * G * G * log_et *
             (in.p * log_inv_delta / (rho * n * n * eps * eps) * *pz * *pz +
              2.0 * std::sqrt(in.p * log_inv_delta) /
                  (rho * std::sqrt(T) * n * eps) * *pz);
}

absl::StatusOr<BoundEvaluation> Thm3aPlain(const BoundInputs& in) {
  if (absl::Status s = CheckGeneralizationInputs(in); !s.ok()) return s;
  const double iota = in.iota, n = in.n, G = in.G, gamma = in.gamma;
  const double log3 = std::log(3.0 / in.zeta);
  const double value =
      std::sqrt((G * G * gamma * gamma + 64.0 * G * G * n * gamma * gamma * log3) /
                (2.0 * (1.0 - iota) * (1.0 - iota) * n) * log3) +
      50.0 * kSqrt2 * kE * G * gamma * CeilLogN(n) / (1.0 - iota) *
          std::log(3.0 * kE / in.zeta) +
      (12.0 + 2.0 * iota) * in.M_ell / (3.0 * iota * (1.0 - iota) * n) * log3;
  return BoundEvaluation{value, 1.0 / (1.0 - iota)};
}

absl::StatusOr<BoundEvaluation> Thm3bPrimal(const BoundInputs& in) {
  if (absl::Status s = CheckGeneralizationInputs(in); !s.ok()) return s;
  const double iota = in.iota, n = in.n, G = in.G, gamma = in.gamma;
  const double k = 1.0 + in.L / in.rho;
  const double log3 = std::log(3.0 / in.zeta);
  const double value =
      std::sqrt(k * k * G * G * gamma * gamma * (1.0 + 64.0 * n * log3) /
                (2.0 * (1.0 - iota) * (1.0 - iota) * n) * log3) +
      50.0 * kSqrt2 * k * G * gamma * CeilLogN(n) / (1.0 - iota) *
          std::log(3.0 * kE / in.zeta) +
      (12.0 + 2.0 * iota) * in.M_ell / (3.0 * iota * (1.0 - iota) * n) * log3;
  return BoundEvaluation{value, 1.0 / (1.0 - iota)};
}

absl::StatusOr<BoundEvaluation> Thm3cExcess(const BoundInputs& in) {
  if (absl::Status s = CheckGeneralizationInputs(in); !s.ok()) return s;
  const double iota = in.iota, n = in.n, G = in.G, gamma = in.gamma;
  const double k = 1.0 + in.L / in.rho;
  const double log6 = std::log(6.0 / in.zeta);
  const double denom = 2.0 * (1.0 - iota) * (1.0 - iota) * n;
  const double value =
      std::sqrt(k * k * G * G * gamma * gamma * (1.0 + 64.0 * n * log6) /
                denom * log6) +
      std::sqrt((G * G * gamma * gamma + 64.0 * G * G * n * gamma * gamma * log6) /
                denom * log6) +
      50.0 * kSqrt2 * (1.0 + kE + in.L / in.rho) * G * gamma * CeilLogN(n) /
          (1.0 - iota) * std::log(6.0 * kE / in.zeta) +
      (24.0 + 4.0 * iota) * in.M_ell / (3.0 * iota * (1.0 - iota) * n) * log6 +
      in.delta_s_emp / (1.0 - iota);
  return BoundEvaluation{value, (1.0 + iota) / (1.0 - iota)};
}

absl::StatusOr<BoundEvaluation> Thm3dStrongPd(const BoundInputs& in) {
  if (absl::Status s = CheckGeneralizationInputs(in); !s.ok()) return s;
  return BoundEvaluation{PdCommon(in) +
                             ExpectationCoefficient(in) * in.delta_s_emp_expect +
                             in.delta_s_emp,
                         1.0};
}

absl::StatusOr<BoundEvaluation> Cor1aStrongGen(const BoundInputs& in) {
  if (absl::Status s = CheckGeneralizationInputs(in); !s.ok()) return s;
  return BoundEvaluation{
      PdCommon(in) + ExpectationCoefficient(in) * in.delta_s_emp_expect, 1.0};
}

absl::StatusOr<BoundEvaluation> Cor1bWeakPop(const BoundInputs& in) {
  return Thm3dStrongPd(in);
}

absl::StatusOr<BoundEvaluation> Cor1cWeakGen(const BoundInputs& in) {
  if (absl::Status s = CheckGeneralizationInputs(in); !s.ok()) return s;
  return BoundEvaluation{PdCommon(in) +
                             ExpectationCoefficient(in) * in.delta_s_emp_expect +
                             in.delta_s_emp + in.delta_s_emp_expect,
                         1.0};
}

std::vector<std::string> BoundNames() {
  return {"p_zeta",         "theorem2_gamma",   "remark3_g_w",
          "remark3_g_v",    "lemma9_delta_s",   "thm3a_plain",
          "thm3b_primal",   "thm3c_excess",     "thm3d_strong_pd",
          "cor1a_strong_gen", "cor1b_weak_pop", "cor1c_weak_gen"};
}

absl::StatusOr<BoundEvaluation> EvaluateBound(std::string_view name,
                                              const BoundInputs& in) {
  auto scalar = [](absl::StatusOr<double> v) -> absl::StatusOr<BoundEvaluation> {
    if (!v.ok()) return v.status();
    return BoundEvaluation{*v, 1.0};
  };
  if (name == "p_zeta") return scalar(PZeta(in.T, in.p, in.zeta));
  if (name == "theorem2_gamma") return scalar(Theorem2Gamma(in));
  if (name == "remark3_g_w" || name == "remark3_g_v") {
    absl::StatusOr<std::pair<double, double>> g = Remark3GBound(in);
    if (!g.ok()) return g.status();
    return BoundEvaluation{name == "remark3_g_w" ? g->first : g->second, 1.0};
  }
  if (name == "lemma9_delta_s") return scalar(Lemma9DeltaS(in));
  if (name == "thm3a_plain") return Thm3aPlain(in);
  if (name == "thm3b_primal") return Thm3bPrimal(in);
  if (name == "thm3c_excess") return Thm3cExcess(in);
  if (name == "thm3d_strong_pd") return Thm3dStrongPd(in);
  if (name == "cor1a_strong_gen") return Cor1aStrongGen(in);
  if (name == "cor1b_weak_pop") return Cor1bWeakPop(in);
  if (name == "cor1c_weak_gen") return Cor1cWeakGen(in);
  return absl::InvalidArgumentError(
      absl::StrFormat("unknown bound '%s'", std::string(name)));
}

}  // namespace dpminimax
