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

#include <cstdint>
#include <string>

#include <gtest/gtest.h>

#include "test_util.h"

namespace dpminimax {
namespace {

using testing::Unwrap;

std::string ErrorOf(const std::string& json) {
  absl::StatusOr<ExperimentConfig> config = ParseConfig(json);
  EXPECT_FALSE(config.ok()) << json;
  return config.ok() ? "" : std::string(config.status().message());
}

TEST(FloorTwoThirdsPower, ExactIntegerRoots) {
  EXPECT_EQ(FloorTwoThirdsPower(1000), 100);
  EXPECT_EQ(FloorTwoThirdsPower(8), 4);
  EXPECT_EQ(FloorTwoThirdsPower(7), 3);
  EXPECT_EQ(FloorTwoThirdsPower(1), 1);
  EXPECT_EQ(FloorTwoThirdsPower(1000000), 10000);
  EXPECT_EQ(FloorTwoThirdsPower(999999), 9999);
  for (int64_t n : {2, 17, 400, 1600, 6400, 123457}) {
    const int64_t T = FloorTwoThirdsPower(n);
    EXPECT_LE(T * T * T, n * n);
    EXPECT_GT((T + 1) * (T + 1) * (T + 1), n * n);
  }
}

TEST(ParseConfig, MinimalConfigTakesDefaults) {
  const ExperimentConfig config = Unwrap(ParseConfig("{}"));
  EXPECT_EQ(config.instance.kind, "quadratic");
  ASSERT_EQ(config.n_values.size(), 1u);
  EXPECT_EQ(config.n_values[0], 1000);
  EXPECT_TRUE(config.private_run);
  EXPECT_EQ(config.c, kDefaultNoiseMultiplier);
  EXPECT_EQ(config.inner.tol, 1e-8);
  EXPECT_EQ(config.inner.max_iterations, 1000000);
}

TEST(ParseConfig, EchoRoundTrips) {
  const std::string text = R"j({
    "instance": {"kind": "auc", "feature_dim": 3, "q": 0.3},
    "n": [100, 200], "T": "n^(2/3)", "budget": {"epsilon": 2, "delta": 1e-6},
    "replicates": 4, "seed": 18446744073709551615, "zeta": 0.2,
    "max_inner_iterations": 1e5, "bounds": {"name": "all",
    "inputs": {"gamma": 0.25, "p": 20}}, "workers": 2})j";
  const ExperimentConfig config = Unwrap(ParseConfig(text));
  EXPECT_EQ(config.seed, UINT64_MAX);
  EXPECT_EQ(config.inner.max_iterations, 100000);
  EXPECT_EQ(config.instance.auc.feature_dim, 3);
  const std::string echo = ConfigToJson(config);
  const ExperimentConfig again = Unwrap(ParseConfig(echo));
  EXPECT_EQ(ConfigToJson(again), echo);
  EXPECT_EQ(again.n_values, config.n_values);
  EXPECT_TRUE(again.t_rule.two_thirds);
  EXPECT_EQ(again.bounds.inputs.gamma, 0.25);
}

TEST(ParseConfig, DeltaOutOfRangeNamesKeyAndRange) {
  const std::string message = ErrorOf(R"j({"budget": {"delta": 1.5}})j");
  EXPECT_NE(message.find("delta"), std::string::npos) << message;
  EXPECT_NE(message.find("(0,1)"), std::string::npos) << message;
}

TEST(ParseConfig, TwoThirdsRuleResolves) {
  const ExperimentConfig config =
      Unwrap(ParseConfig(R"j({"n": 1000, "T": "n^(2/3)"})j"));
  EXPECT_EQ(config.t_rule.Resolve(1000), 100);
  EXPECT_EQ(config.t_rule.ToString(), "n^(2/3)");
  EXPECT_EQ(Unwrap(ParseConfig(R"j({"T": 37})j")).t_rule.Resolve(1000), 37);
}

TEST(ParseConfig, RejectsUnknownKeys) {
  EXPECT_NE(ErrorOf(R"j({"epsilon": 1})j").find("epsilon"), std::string::npos);
  EXPECT_NE(ErrorOf(R"j({"budget": {"eps": 1}})j").find("budget.eps"),
            std::string::npos);
  EXPECT_NE(ErrorOf(R"j({"instance": {"kind": "auc", "dim_w": 3}})j")
                .find("instance.dim_w"),
            std::string::npos);
}

TEST(ParseConfig, RejectsBadValues) {
  ErrorOf("not json");
  ErrorOf("[1, 2]");
  ErrorOf(R"j({"n": 1})j");
  ErrorOf(R"j({"n": []})j");
  ErrorOf(R"j({"n": 2.5})j");
  ErrorOf(R"j({"T": "n^2"})j");
  ErrorOf(R"j({"T": 0})j");
  ErrorOf(R"j({"budget": {"epsilon": 0}})j");
  ErrorOf(R"j({"iota": 1})j");
  ErrorOf(R"j({"zeta": 0})j");
  ErrorOf(R"j({"private": "yes"})j");
  ErrorOf(R"j({"instance": {"kind": "hinge"}})j");
  ErrorOf(R"j({"workers": 0})j");
  ErrorOf(R"j({"gamma_source": "guess"})j");
  ErrorOf(R"j({"bounds": {"name": "theorem9"}})j");
  ErrorOf(R"j({"n": [10], "stability": {"num_indices": 11}})j");
  ErrorOf(R"j({"seed": -1})j");
  ErrorOf(R"j({"lambda_max": 0})j");
}

TEST(ValidateConfig, CatchesEditsAfterParsing) {
  ExperimentConfig config = Unwrap(ParseConfig("{}"));
  EXPECT_TRUE(ValidateConfig(config).ok());
  config.workers = -3;
  EXPECT_EQ(ValidateConfig(config).code(), absl::StatusCode::kInvalidArgument);
}

TEST(BuildInstance, BothKinds) {
  ExperimentConfig config = Unwrap(ParseConfig("{}"));
  const ProblemInstance quadratic = Unwrap(BuildInstance(config.instance));
  EXPECT_EQ(quadratic.dim_w, 8);
  config = Unwrap(ParseConfig(
      R"j({"instance": {"kind": "auc", "feature_dim": 4, "constant_samples": 1000}})j"));
  const ProblemInstance auc = Unwrap(BuildInstance(config.instance));
  EXPECT_EQ(auc.dim_w, 6);
  EXPECT_EQ(auc.dim_v, 1);
}

}  // namespace
}  // namespace dpminimax
