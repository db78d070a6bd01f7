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

#pragma once

#include <span>
#include <string>

#include "json.hpp"

#include "distest/coeff_seq.hpp"
#include "distest/estimators.hpp"
#include "distest/harness.hpp"
#include "distest/model.hpp"

namespace distest {

using Json = nlohmann::json;

// {"J_max": int, "father": float, "levels": [[floats]]}
Json coeffs_to_json(const CoeffSeq& f);
CoeffSeq coeffs_from_json(const Json& j);
CoeffSeq load_coeffs(const std::string& path);

Json samples_to_json(std::span<const LocalSample> samples);
Json estimate_to_json(const EstimateReport& report);

Json risk_report_to_json(const RiskReport& report);
RiskReport risk_report_from_json(const Json& j);

// Keys mirror ExperimentSpec field names; see README for the schema.
ExperimentSpec experiment_spec_from_json(const Json& j);
Json experiment_spec_to_json(const ExperimentSpec& spec);

}  // namespace distest
