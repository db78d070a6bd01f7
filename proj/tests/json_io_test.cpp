// Copyright 2026 The distest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "distest/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "gtest/gtest.h"

namespace distest {
namespace {

TEST(CoeffJsonTest, RoundTrip) {
  CoeffSeq f(3);
  f.father() = 0.1;
  f.at(2, 3) = -1.0 / 3.0;
  f.at(3, 8) = 1e-300;
  const Json j = coeffs_to_json(f);
  EXPECT_EQ(coeffs_from_json(j), f);
  EXPECT_EQ(coeffs_from_json(Json::parse(j.dump())), f);
}

TEST(CoeffJsonTest, LoadFromFile) {
  CoeffSeq f(2);
  f.at(1, 2) = 0.75;
  const std::string path = ::testing::TempDir() + "coeffs.json";
  {
    std::ofstream out(path);
    out << coeffs_to_json(f).dump();
  }
  EXPECT_EQ(load_coeffs(path), f);
  std::remove(path.c_str());
  EXPECT_THROW(load_coeffs(path), std::runtime_error);
}

TEST(RiskReportJsonTest, RoundTrip) {
  RiskReport rep;
  rep.rows.push_back(RiskRow{1024, 2, "l2", 0.123456789012345678, 1e-3, 96.5, 112, 40});
  rep.rows.push_back(RiskRow{2048, 3, "l2", 0.1, 2e-3, 100, 130, 40});
  rep.slope = -0.61;
  rep.slope_se = 0.02;
  rep.rate_axis = RateAxis::kLogNOverLogN;
  rep.warnings = {"something"};
  const Json j = risk_report_to_json(rep);
  EXPECT_EQ(j.at("schema_version"), 1);
  EXPECT_EQ(risk_report_from_json(Json::parse(j.dump())), rep);
  RiskReport bare;
  EXPECT_EQ(risk_report_from_json(risk_report_to_json(bare)), bare);
}

TEST(ExperimentSpecJsonTest, RoundTripAndUnknownKeys) {
  ExperimentSpec spec;
  spec.method = "selfsim";
  spec.n_grid = {4096, 8192};
  spec.p = 0.2;
  spec.reps = 17;
  spec.norm = RiskNorm::kLinf;
  spec.rate_axis = RateAxis::kLogNOverLogN;
  spec.seed = 12345678901234ULL;
  spec.budget = 300.0;
  spec.selfsim.eps = 0.25;
  const Json j = experiment_spec_to_json(spec);
  const ExperimentSpec back = experiment_spec_from_json(Json::parse(j.dump()));
  EXPECT_EQ(experiment_spec_to_json(back), j);
  EXPECT_EQ(back.seed, spec.seed);
  EXPECT_EQ(*back.p, 0.2);
  Json bad = j;
  bad["colour"] = "blue";
  EXPECT_THROW(experiment_spec_from_json(bad), std::invalid_argument);
}

TEST(EstimateJsonTest, HasLedger) {
  EstimateReport rep;
  rep.method = "l2";
  rep.fhat = CoeffSeq(2);
  rep.ledger = BudgetLedger(2, 100);
  rep.ledger.record_bits(1, 40);
  rep.counts = {0, 5};
  const Json j = estimate_to_json(rep);
  EXPECT_EQ(j.at("method"), "l2");
  EXPECT_EQ(j.dump().find("40") != std::string::npos, true);
}

}  // namespace
}  // namespace distest
