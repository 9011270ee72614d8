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

#include "dpminimax/config.h"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <limits>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "json.hpp"

namespace dpminimax {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

constexpr std::string_view kTwoThirds = "n^(2/3)";

// Typed access to the members of one JSON object. `path` prefixes key names
// in error messages, e.g. "budget.delta".
class ObjectReader {
 public:
  ObjectReader(const Json& object, std::string path)
      : object_(object), path_(std::move(path)) {}

  static absl::StatusOr<ObjectReader> Make(
      const Json& object, std::string path,
      std::initializer_list<std::string_view> allowed) {
    const std::string where = path.empty() ? "config" : path;
    if (!object.is_object()) {
      return absl::InvalidArgumentError(
          absl::StrFormat("%s must be a JSON object", where));
    }
    for (const auto& item : object.items()) {
      if (std::find(allowed.begin(), allowed.end(), item.key()) ==
          allowed.end()) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "unknown key \"%s\" in %s; allowed keys: %s",
            Qualify(path, item.key()), where,
            absl::StrJoin(std::vector<std::string>(allowed.begin(),
                                                   allowed.end()),
                          ", ")));
      }
    }
    return ObjectReader(object, std::move(path));
  }

  bool Has(std::string_view key) const {
    return object_.contains(std::string(key));
  }
  const Json& At(std::string_view key) const {
    return object_.at(std::string(key));
  }
  std::string Name(std::string_view key) const { return Qualify(path_, key); }

  absl::Status Double(std::string_view key, double* out) const {
    if (!Has(key)) return absl::OkStatus();
    const Json& j = At(key);
    if (!j.is_number()) return TypeError(key, "a number");
    *out = j.get<double>();
    return absl::OkStatus();
  }

  absl::Status Int64(std::string_view key, int64_t* out) const {
    if (!Has(key)) return absl::OkStatus();
    const Json& j = At(key);
    if (j.is_number_integer()) {
      if (j.is_number_unsigned() &&
          j.get<uint64_t>() >
              static_cast<uint64_t>(std::numeric_limits<int64_t>::max())) {
        return TypeError(key, "an integer below 2^63");
      }
      *out = j.get<int64_t>();
      return absl::OkStatus();
    }
    // Accept 1e6 style literals when they are exact integers.
    if (j.is_number_float()) {
      const double x = j.get<double>();
      if (std::isfinite(x) && x == std::floor(x) && std::abs(x) < 9.0e15) {
        *out = static_cast<int64_t>(x);
        return absl::OkStatus();
      }
    }
    return TypeError(key, "an integer");
  }

  absl::Status Int(std::string_view key, int* out) const {
    int64_t value = *out;
    if (absl::Status s = Int64(key, &value); !s.ok()) return s;
    if (value < std::numeric_limits<int>::min() ||
        value > std::numeric_limits<int>::max()) {
      return TypeError(key, "a 32-bit integer");
    }
    *out = static_cast<int>(value);
    return absl::OkStatus();
  }

  absl::Status Uint64(std::string_view key, uint64_t* out) const {
    if (!Has(key)) return absl::OkStatus();
    const Json& j = At(key);
    if (j.is_number_unsigned()) {
      *out = j.get<uint64_t>();
      return absl::OkStatus();
    }
    return TypeError(key, "a non-negative integer");
  }

  absl::Status Bool(std::string_view key, bool* out) const {
    if (!Has(key)) return absl::OkStatus();
    const Json& j = At(key);
    if (!j.is_boolean()) return TypeError(key, "a boolean");
    *out = j.get<bool>();
    return absl::OkStatus();
  }

  absl::Status String(std::string_view key, std::string* out) const {
    if (!Has(key)) return absl::OkStatus();
    const Json& j = At(key);
    if (!j.is_string()) return TypeError(key, "a string");
    *out = j.get<std::string>();
    return absl::OkStatus();
  }

 private:
  static std::string Qualify(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key)
                        : absl::StrCat(path, ".", std::string(key));
  }

  absl::Status TypeError(std::string_view key, std::string_view expected) const {
    return absl::InvalidArgumentError(absl::StrFormat(
        "%s must be %s, got %s", Name(key), std::string(expected),
        At(key).dump()));
  }

  const Json& object_;
  std::string path_;
};

#define DPM_RETURN_IF_ERROR(expr)            \
  do {                                       \
    if (absl::Status _s = (expr); !_s.ok()) { \
      return _s;                             \
    }                                        \
  } while (0)

absl::Status RangeError(std::string_view key, std::string_view range,
                        double got) {
  return absl::InvalidArgumentError(absl::StrFormat(
      "%s must lie in %s, got %.17g", std::string(key), std::string(range),
      got));
}

absl::Status Positive(std::string_view key, double x) {
  if (!(x > 0.0) || !std::isfinite(x)) return RangeError(key, "(0,inf)", x);
  return absl::OkStatus();
}

absl::Status NonNegative(std::string_view key, double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) return RangeError(key, "[0,inf)", x);
  return absl::OkStatus();
}

absl::Status OpenUnit(std::string_view key, double x) {
  if (!(x > 0.0 && x < 1.0)) return RangeError(key, "(0,1)", x);
  return absl::OkStatus();
}

absl::Status AtLeast(std::string_view key, int64_t x, int64_t lo) {
  if (x < lo) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "%s must lie in [%d,inf), got %d", std::string(key), lo, x));
  }
  return absl::OkStatus();
}

absl::Status ParseInstance(const Json& j, InstanceConfig* out) {
  // The kind decides which parameter names are legal.
  std::string kind = out->kind;
  if (j.is_object() && j.contains("kind")) {
    if (!j.at("kind").is_string()) {
      return absl::InvalidArgumentError("instance.kind must be a string");
    }
    kind = j.at("kind").get<std::string>();
  }
  out->kind = kind;
  if (kind == "quadratic") {
    absl::StatusOr<ObjectReader> r = ObjectReader::Make(
        j, "instance",
        {"kind", "seed", "dim_w", "dim_v", "dim_z", "rho", "coupling_norm",
         "data_radius"});
    if (!r.ok()) return r.status();
    RandomQuadraticOptions& q = out->quadratic;
    DPM_RETURN_IF_ERROR(r->Uint64("seed", &out->seed));
    DPM_RETURN_IF_ERROR(r->Int("dim_w", &q.dim_w));
    DPM_RETURN_IF_ERROR(r->Int("dim_v", &q.dim_v));
    DPM_RETURN_IF_ERROR(r->Int("dim_z", &q.dim_z));
    DPM_RETURN_IF_ERROR(r->Double("rho", &q.rho));
    DPM_RETURN_IF_ERROR(r->Double("coupling_norm", &q.coupling_norm));
    DPM_RETURN_IF_ERROR(r->Double("data_radius", &q.data_radius));
    return absl::OkStatus();
  }
  if (kind == "auc") {
    absl::StatusOr<ObjectReader> r = ObjectReader::Make(
        j, "instance",
        {"kind", "seed", "feature_dim", "q", "rho", "separation",
         "feature_radius", "radius_w", "radius_v", "constant_samples"});
    if (!r.ok()) return r.status();
    AucSpec& a = out->auc;
    DPM_RETURN_IF_ERROR(r->Uint64("seed", &out->seed));
    DPM_RETURN_IF_ERROR(r->Int("feature_dim", &a.feature_dim));
    DPM_RETURN_IF_ERROR(r->Double("q", &a.q));
    DPM_RETURN_IF_ERROR(r->Double("rho", &a.rho));
    DPM_RETURN_IF_ERROR(r->Double("separation", &a.separation));
    DPM_RETURN_IF_ERROR(r->Double("feature_radius", &a.feature_radius));
    DPM_RETURN_IF_ERROR(r->Double("radius_w", &a.radius_w));
    DPM_RETURN_IF_ERROR(r->Double("radius_v", &a.radius_v));
    DPM_RETURN_IF_ERROR(r->Int("constant_samples", &a.constant_samples));
    return absl::OkStatus();
  }
  return absl::InvalidArgumentError(absl::StrFormat(
      "instance.kind must be one of {quadratic, auc}, got \"%s\"", kind));
}

absl::Status ParseBoundInputs(const Json& j, BoundInputs* in) {
  absl::StatusOr<ObjectReader> r = ObjectReader::Make(
      j, "bounds.inputs",
      {"G", "rho", "L", "M_ell", "M_W", "M_V", "sigma", "T", "n", "p",
       "epsilon", "delta", "zeta", "iota", "g_w", "g_v", "gamma",
       "delta_s_emp", "delta_s_emp_expect"});
  if (!r.ok()) return r.status();
  DPM_RETURN_IF_ERROR(r->Double("G", &in->G));
  DPM_RETURN_IF_ERROR(r->Double("rho", &in->rho));
  DPM_RETURN_IF_ERROR(r->Double("L", &in->L));
  DPM_RETURN_IF_ERROR(r->Double("M_ell", &in->M_ell));
  DPM_RETURN_IF_ERROR(r->Double("M_W", &in->M_W));
  DPM_RETURN_IF_ERROR(r->Double("M_V", &in->M_V));
  DPM_RETURN_IF_ERROR(r->Double("sigma", &in->sigma));
  DPM_RETURN_IF_ERROR(r->Double("T", &in->T));
  DPM_RETURN_IF_ERROR(r->Double("n", &in->n));
  DPM_RETURN_IF_ERROR(r->Double("p", &in->p));
  DPM_RETURN_IF_ERROR(r->Double("epsilon", &in->epsilon));
  DPM_RETURN_IF_ERROR(r->Double("delta", &in->delta));
  DPM_RETURN_IF_ERROR(r->Double("zeta", &in->zeta));
  DPM_RETURN_IF_ERROR(r->Double("iota", &in->iota));
  DPM_RETURN_IF_ERROR(r->Double("g_w", &in->g_w));
  DPM_RETURN_IF_ERROR(r->Double("g_v", &in->g_v));
  DPM_RETURN_IF_ERROR(r->Double("gamma", &in->gamma));
  DPM_RETURN_IF_ERROR(r->Double("delta_s_emp", &in->delta_s_emp));
  DPM_RETURN_IF_ERROR(
      r->Double("delta_s_emp_expect", &in->delta_s_emp_expect));
  return absl::OkStatus();
}

absl::Status ParseDocument(const Json& doc, ExperimentConfig* config) {
  absl::StatusOr<ObjectReader> r = ObjectReader::Make(
      doc, "",
      {"instance", "n", "T", "private", "budget", "c", "lambda_max", "phi",
       "replicates", "seed", "zeta", "iota", "tol", "max_inner_iterations",
       "n_eval", "gamma_source", "stability", "noise_check", "bounds",
       "write_trajectories", "output", "workers"});
  if (!r.ok()) return r.status();

  if (r->Has("instance")) {
    DPM_RETURN_IF_ERROR(ParseInstance(r->At("instance"), &config->instance));
  }
  if (r->Has("n")) {
    const Json& n = r->At("n");
    std::vector<int> values;
    if (n.is_array()) {
      for (const Json& item : n) {
        if (!item.is_number_integer()) {
          return absl::InvalidArgumentError(absl::StrFormat(
              "n must be an integer or a list of integers, got %s",
              n.dump()));
        }
        values.push_back(item.get<int>());
      }
    } else if (n.is_number_integer()) {
      values.push_back(n.get<int>());
    } else {
      return absl::InvalidArgumentError(absl::StrFormat(
          "n must be an integer or a list of integers, got %s", n.dump()));
    }
    config->n_values = values;
  }
  if (r->Has("T")) {
    const Json& t = r->At("T");
    if (t.is_string()) {
      if (t.get<std::string>() != kTwoThirds) {
        return absl::InvalidArgumentError(absl::StrFormat(
            "T must be a positive integer or \"%s\", got %s",
            std::string(kTwoThirds), t.dump()));
      }
      config->t_rule.two_thirds = true;
    } else {
      config->t_rule.two_thirds = false;
      DPM_RETURN_IF_ERROR(r->Int64("T", &config->t_rule.fixed));
    }
  }
  DPM_RETURN_IF_ERROR(r->Bool("private", &config->private_run));
  if (r->Has("budget")) {
    absl::StatusOr<ObjectReader> b =
        ObjectReader::Make(r->At("budget"), "budget", {"epsilon", "delta"});
    if (!b.ok()) return b.status();
    DPM_RETURN_IF_ERROR(b->Double("epsilon", &config->budget.epsilon));
    DPM_RETURN_IF_ERROR(b->Double("delta", &config->budget.delta));
  }
  DPM_RETURN_IF_ERROR(r->Double("c", &config->c));
  DPM_RETURN_IF_ERROR(r->Int("lambda_max", &config->lambda_max));
  DPM_RETURN_IF_ERROR(r->Double("phi", &config->phi));
  DPM_RETURN_IF_ERROR(r->Int("replicates", &config->replicates));
  DPM_RETURN_IF_ERROR(r->Uint64("seed", &config->seed));
  DPM_RETURN_IF_ERROR(r->Double("zeta", &config->zeta));
  DPM_RETURN_IF_ERROR(r->Double("iota", &config->iota));
  DPM_RETURN_IF_ERROR(r->Double("tol", &config->inner.tol));
  DPM_RETURN_IF_ERROR(
      r->Int64("max_inner_iterations", &config->inner.max_iterations));
  DPM_RETURN_IF_ERROR(r->Int("n_eval", &config->n_eval));
  DPM_RETURN_IF_ERROR(r->String("gamma_source", &config->gamma_source));
  if (r->Has("stability")) {
    absl::StatusOr<ObjectReader> s = ObjectReader::Make(
        r->At("stability"), "stability",
        {"num_indices", "num_replacements", "fresh_noise"});
    if (!s.ok()) return s.status();
    DPM_RETURN_IF_ERROR(s->Int("num_indices", &config->stability.num_indices));
    DPM_RETURN_IF_ERROR(
        s->Int("num_replacements", &config->stability.num_replacements));
    DPM_RETURN_IF_ERROR(s->Bool("fresh_noise", &config->stability.fresh_noise));
  }
  if (r->Has("noise_check")) {
    absl::StatusOr<ObjectReader> s = ObjectReader::Make(
        r->At("noise_check"), "noise_check", {"sigma", "p", "zeta", "draws"});
    if (!s.ok()) return s.status();
    DPM_RETURN_IF_ERROR(s->Double("sigma", &config->noise_check.sigma));
    DPM_RETURN_IF_ERROR(s->Int("p", &config->noise_check.p));
    DPM_RETURN_IF_ERROR(s->Double("zeta", &config->noise_check.zeta));
    DPM_RETURN_IF_ERROR(s->Int64("draws", &config->noise_check.draws));
  }
  if (r->Has("bounds")) {
    absl::StatusOr<ObjectReader> s =
        ObjectReader::Make(r->At("bounds"), "bounds", {"name", "inputs"});
    if (!s.ok()) return s.status();
    DPM_RETURN_IF_ERROR(s->String("name", &config->bounds.name));
    if (s->Has("inputs")) {
      DPM_RETURN_IF_ERROR(
          ParseBoundInputs(s->At("inputs"), &config->bounds.inputs));
    }
  }
  DPM_RETURN_IF_ERROR(
      r->Bool("write_trajectories", &config->write_trajectories));
  DPM_RETURN_IF_ERROR(r->String("output", &config->output));
  DPM_RETURN_IF_ERROR(r->Int("workers", &config->workers));
  return absl::OkStatus();
}

}  // namespace

int64_t FloorTwoThirdsPower(int64_t n) {
  if (n <= 0) return 0;
  // Start from the floating estimate and correct it exactly. n <= 2^31 keeps
  // n^2 and T^3 inside 128-bit range comfortably.
  const __int128 n2 = static_cast<__int128>(n) * n;
  int64_t t = static_cast<int64_t>(
      std::floor(std::cbrt(static_cast<double>(n2))));
  auto cube = [](int64_t x) {
    return static_cast<__int128>(x) * x * x;
  };
  while (t > 0 && cube(t) > n2) --t;
  while (cube(t + 1) <= n2) ++t;
  return t;
}

int64_t TRule::Resolve(int64_t n) const {
  if (!two_thirds) return fixed;
  return std::max<int64_t>(1, FloorTwoThirdsPower(n));
}

std::string TRule::ToString() const {
  return two_thirds ? std::string(kTwoThirds) : absl::StrCat(fixed);
}

absl::Status ValidateConfig(const ExperimentConfig& c) {
  const InstanceConfig& inst = c.instance;
  if (inst.kind == "quadratic") {
    const RandomQuadraticOptions& q = inst.quadratic;
    DPM_RETURN_IF_ERROR(AtLeast("instance.dim_w", q.dim_w, 1));
    DPM_RETURN_IF_ERROR(AtLeast("instance.dim_v", q.dim_v, 1));
    DPM_RETURN_IF_ERROR(AtLeast("instance.dim_z", q.dim_z, 1));
    DPM_RETURN_IF_ERROR(Positive("instance.rho", q.rho));
    DPM_RETURN_IF_ERROR(NonNegative("instance.coupling_norm", q.coupling_norm));
    DPM_RETURN_IF_ERROR(Positive("instance.data_radius", q.data_radius));
  } else if (inst.kind == "auc") {
    const AucSpec& a = inst.auc;
    DPM_RETURN_IF_ERROR(AtLeast("instance.feature_dim", a.feature_dim, 1));
    DPM_RETURN_IF_ERROR(OpenUnit("instance.q", a.q));
    DPM_RETURN_IF_ERROR(Positive("instance.rho", a.rho));
    DPM_RETURN_IF_ERROR(NonNegative("instance.separation", a.separation));
    DPM_RETURN_IF_ERROR(Positive("instance.feature_radius", a.feature_radius));
    DPM_RETURN_IF_ERROR(Positive("instance.radius_w", a.radius_w));
    DPM_RETURN_IF_ERROR(Positive("instance.radius_v", a.radius_v));
    DPM_RETURN_IF_ERROR(
        AtLeast("instance.constant_samples", a.constant_samples, 1));
  } else {
    return absl::InvalidArgumentError(absl::StrFormat(
        "instance.kind must be one of {quadratic, auc}, got \"%s\"",
        inst.kind));
  }
  if (c.n_values.empty()) {
    return absl::InvalidArgumentError("n must list at least one sample size");
  }
  for (int n : c.n_values) DPM_RETURN_IF_ERROR(AtLeast("n", n, 2));
  if (!c.t_rule.two_thirds) DPM_RETURN_IF_ERROR(AtLeast("T", c.t_rule.fixed, 1));
  DPM_RETURN_IF_ERROR(Positive("budget.epsilon", c.budget.epsilon));
  DPM_RETURN_IF_ERROR(OpenUnit("budget.delta", c.budget.delta));
  DPM_RETURN_IF_ERROR(Positive("c", c.c));
  DPM_RETURN_IF_ERROR(AtLeast("lambda_max", c.lambda_max, 1));
  DPM_RETURN_IF_ERROR(NonNegative("phi", c.phi));
  DPM_RETURN_IF_ERROR(AtLeast("replicates", c.replicates, 1));
  DPM_RETURN_IF_ERROR(OpenUnit("zeta", c.zeta));
  DPM_RETURN_IF_ERROR(OpenUnit("iota", c.iota));
  DPM_RETURN_IF_ERROR(Positive("tol", c.inner.tol));
  DPM_RETURN_IF_ERROR(
      AtLeast("max_inner_iterations", c.inner.max_iterations, 1));
  DPM_RETURN_IF_ERROR(AtLeast("n_eval", c.n_eval, 1));
  if (c.gamma_source != "theory" && c.gamma_source != "empirical") {
    return absl::InvalidArgumentError(absl::StrFormat(
        "gamma_source must be one of {theory, empirical}, got \"%s\"",
        c.gamma_source));
  }
  const int min_n = *std::min_element(c.n_values.begin(), c.n_values.end());
  if (c.stability.num_indices < 1 || c.stability.num_indices > min_n) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "stability.num_indices must lie in [1,%d] (the smallest n), got %d",
        min_n, c.stability.num_indices));
  }
  DPM_RETURN_IF_ERROR(
      AtLeast("stability.num_replacements", c.stability.num_replacements, 1));
  DPM_RETURN_IF_ERROR(Positive("noise_check.sigma", c.noise_check.sigma));
  DPM_RETURN_IF_ERROR(AtLeast("noise_check.p", c.noise_check.p, 1));
  DPM_RETURN_IF_ERROR(OpenUnit("noise_check.zeta", c.noise_check.zeta));
  DPM_RETURN_IF_ERROR(AtLeast("noise_check.draws", c.noise_check.draws, 1));
  const std::vector<std::string> names = BoundNames();
  if (c.bounds.name != "all" &&
      std::find(names.begin(), names.end(), c.bounds.name) == names.end()) {
    return absl::InvalidArgumentError(absl::StrFormat(
        "bounds.name must be \"all\" or one of {%s}, got \"%s\"",
        absl::StrJoin(names, ", "), c.bounds.name));
  }
  if (c.output.empty()) {
    return absl::InvalidArgumentError("output must be a non-empty path");
  }
  DPM_RETURN_IF_ERROR(AtLeast("workers", c.workers, 1));
  return absl::OkStatus();
}

absl::StatusOr<ExperimentConfig> ParseConfig(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text.begin(), json_text.end());
  } catch (const Json::parse_error& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("malformed JSON config: ", e.what()));
  }
  ExperimentConfig config;
  DPM_RETURN_IF_ERROR(ParseDocument(doc, &config));
  DPM_RETURN_IF_ERROR(ValidateConfig(config));
  return config;
}

std::string ConfigToJson(const ExperimentConfig& c) {
  OrderedJson j;
  OrderedJson inst;
  inst["kind"] = c.instance.kind;
  inst["seed"] = c.instance.seed;
  if (c.instance.kind == "auc") {
    const AucSpec& a = c.instance.auc;
    inst["feature_dim"] = a.feature_dim;
    inst["q"] = a.q;
    inst["rho"] = a.rho;
    inst["separation"] = a.separation;
    inst["feature_radius"] = a.feature_radius;
    inst["radius_w"] = a.radius_w;
    inst["radius_v"] = a.radius_v;
    inst["constant_samples"] = a.constant_samples;
  } else {
    const RandomQuadraticOptions& q = c.instance.quadratic;
    inst["dim_w"] = q.dim_w;
    inst["dim_v"] = q.dim_v;
    inst["dim_z"] = q.dim_z;
    inst["rho"] = q.rho;
    inst["coupling_norm"] = q.coupling_norm;
    inst["data_radius"] = q.data_radius;
  }
  j["instance"] = inst;
  j["n"] = c.n_values;
  if (c.t_rule.two_thirds) {
    j["T"] = std::string(kTwoThirds);
  } else {
    j["T"] = c.t_rule.fixed;
  }
  j["private"] = c.private_run;
  j["budget"] = {{"epsilon", c.budget.epsilon}, {"delta", c.budget.delta}};
  j["c"] = c.c;
  j["lambda_max"] = c.lambda_max;
  j["phi"] = c.phi;
  j["replicates"] = c.replicates;
  j["seed"] = c.seed;
  j["zeta"] = c.zeta;
  j["iota"] = c.iota;
  j["tol"] = c.inner.tol;
  j["max_inner_iterations"] = c.inner.max_iterations;
  j["n_eval"] = c.n_eval;
  j["gamma_source"] = c.gamma_source;
  j["stability"] = {{"num_indices", c.stability.num_indices},
                    {"num_replacements", c.stability.num_replacements},
                    {"fresh_noise", c.stability.fresh_noise}};
  j["noise_check"] = {{"sigma", c.noise_check.sigma},
                      {"p", c.noise_check.p},
                      {"zeta", c.noise_check.zeta},
                      {"draws", c.noise_check.draws}};
  const BoundInputs& b = c.bounds.inputs;
  OrderedJson inputs = {
      {"G", b.G},         {"rho", b.rho},
      {"L", b.L},         {"M_ell", b.M_ell},
      {"M_W", b.M_W},     {"M_V", b.M_V},
      {"sigma", b.sigma}, {"T", b.T},
      {"n", b.n},         {"p", b.p},
      {"epsilon", b.epsilon}, {"delta", b.delta},
      {"zeta", b.zeta},   {"iota", b.iota},
      {"g_w", b.g_w},     {"g_v", b.g_v},
      {"gamma", b.gamma}, {"delta_s_emp", b.delta_s_emp},
      {"delta_s_emp_expect", b.delta_s_emp_expect}};
  j["bounds"] = {{"name", c.bounds.name}, {"inputs", inputs}};
  j["write_trajectories"] = c.write_trajectories;
  j["output"] = c.output;
  j["workers"] = c.workers;
  return j.dump(2) + "\n";
}

absl::StatusOr<ProblemInstance> BuildInstance(const InstanceConfig& config) {
  if (config.kind == "auc") return MakeAucInstance(config.auc, config.seed);
  if (config.kind != "quadratic") {
    return absl::InvalidArgumentError(
        absl::StrFormat("unknown instance kind \"%s\"", config.kind));
  }
  absl::StatusOr<QuadraticSaddleSpec> spec =
      RandomQuadraticSpec(config.quadratic, config.seed);
  if (!spec.ok()) return spec.status();
  return MakeQuadraticSaddle(*spec);
}

}  // namespace dpminimax
