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

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace distest {

namespace {

const char* norm_name(RiskNorm n) { return n == RiskNorm::kL2Sq ? "L2sq" : "Linf"; }

RiskNorm parse_norm(const std::string& s) {
  if (s == "L2sq") return RiskNorm::kL2Sq;
  if (s == "Linf") return RiskNorm::kLinf;
  throw std::invalid_argument("norm must be L2sq or Linf, got '" + s + "'");
}

const char* axis_name(RateAxis a) {
  return a == RateAxis::kLogN ? "log2n" : "log2(n/log2n)";
}

RateAxis parse_axis(const std::string& s) {
  if (s == "log2n") return RateAxis::kLogN;
  if (s == "log2(n/log2n)") return RateAxis::kLogNOverLogN;
  throw std::invalid_argument("rate_axis must be log2n or log2(n/log2n)");
}

}  // namespace

Json coeffs_to_json(const CoeffSeq& f) {
  Json levels = Json::array();
  for (int j = 0; j <= f.j_max(); ++j) {
    const auto lvl = f.level(j);
    levels.push_back(std::vector<double>(lvl.begin(), lvl.end()));
  }
  return Json{{"J_max", f.j_max()}, {"father", f.father()}, {"levels", levels}};
}

CoeffSeq coeffs_from_json(const Json& j) {
  const int j_max = j.at("J_max").get<int>();
  const auto levels = j.at("levels").get<std::vector<std::vector<double>>>();
  if (static_cast<int>(levels.size()) != j_max + 1) {
    throw std::invalid_argument("coefficient JSON: J_max disagrees with levels");
  }
  return CoeffSeq::from_levels(j.at("father").get<double>(), levels);
}

CoeffSeq load_coeffs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return coeffs_from_json(Json::parse(in));
}

Json samples_to_json(std::span<const LocalSample> samples) {
  Json out = Json::array();
  for (const LocalSample& s : samples) {
    out.push_back({{"machine", s.machine},
                   {"replicate", s.replicate},
                   {"noise_sd", s.noise_sd},
                   {"obs", coeffs_to_json(s.obs)}});
  }
  return out;
}

Json estimate_to_json(const EstimateReport& r) {
  Json out{{"method", r.method},
           {"fhat", coeffs_to_json(r.fhat)},
           {"bits", std::vector<std::uint64_t>(r.ledger.totals().begin(),
                                               r.ledger.totals().end())},
           {"counts", r.counts},
           {"s_hat", r.s_hat},
           {"contributors", r.contributors},
           {"warnings", r.warnings}};
  out["bit_cap"] = r.ledger.cap() ? Json(*r.ledger.cap()) : Json(nullptr);
  out["N_tilde"] = r.n_tilde ? Json(*r.n_tilde) : Json(nullptr);
  out["s_tilde"] = r.s_tilde ? Json(*r.s_tilde) : Json(nullptr);
  out["lepski_level"] = r.lepski_level ? Json(*r.lepski_level) : Json(nullptr);
  return out;
}

Json risk_report_to_json(const RiskReport& report) {
  Json rows = Json::array();
  for (const RiskRow& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"m", r.m},
                    {"method", r.method},
                    {"risk", r.risk},
                    {"risk_se", r.risk_se},
                    {"bits_mean", r.bits_mean},
                    {"bits_max", r.bits_max},
                    {"reps", r.reps}});
  }
  Json out{{"schema_version", kReportSchemaVersion},
           {"rows", rows},
           {"rate_axis", axis_name(report.rate_axis)},
           {"warnings", report.warnings}};
  out["slope"] = report.slope ? Json(*report.slope) : Json(nullptr);
  out["slope_se"] = report.slope_se ? Json(*report.slope_se) : Json(nullptr);
  return out;
}

RiskReport risk_report_from_json(const Json& j) {
  if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
    throw std::invalid_argument("unsupported report schema version");
  }
  RiskReport out;
  for (const Json& r : j.at("rows")) {
    out.rows.push_back({r.at("n").get<double>(), r.at("m").get<int>(),
                        r.at("method").get<std::string>(), r.at("risk").get<double>(),
                        r.at("risk_se").get<double>(), r.at("bits_mean").get<double>(),
                        r.at("bits_max").get<double>(), r.at("reps").get<int>()});
  }
  out.rate_axis = parse_axis(j.at("rate_axis").get<std::string>());
  out.warnings = j.at("warnings").get<std::vector<std::string>>();
  if (!j.at("slope").is_null()) out.slope = j.at("slope").get<double>();
  if (!j.at("slope_se").is_null()) out.slope_se = j.at("slope_se").get<double>();
  return out;
}

ExperimentSpec experiment_spec_from_json(const Json& j) {
  static const std::vector<std::string> kKeys{
      "method", "signal",    "n_grid",    "p",         "m",          "reps",
      "norm",   "rate_axis", "seed",      "j_max",     "s",          "s1",
      "s2",     "L",         "budget",    "budget_factor", "precision",
      "lepski_kappa", "selfsim", "threads"};
  for (const auto& [key, value] : j.items()) {
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  ExperimentSpec spec;
  spec.method = j.value("method", spec.method);
  spec.signal = j.value("signal", spec.signal);
  spec.n_grid = j.at("n_grid").get<std::vector<double>>();
  if (j.contains("p") && !j.at("p").is_null()) spec.p = j.at("p").get<double>();
  spec.m = j.value("m", spec.m);
  spec.reps = j.value("reps", spec.reps);
  spec.norm = parse_norm(j.value("norm", std::string(norm_name(spec.norm))));
  spec.rate_axis = parse_axis(j.value("rate_axis", std::string(axis_name(spec.rate_axis))));
  spec.seed = j.value("seed", spec.seed);
  spec.j_max = j.value("j_max", spec.j_max);
  spec.s = j.value("s", spec.s);
  spec.s1 = j.value("s1", spec.s1);
  spec.s2 = j.value("s2", spec.s2);
  spec.L = j.value("L", spec.L);
  if (j.contains("budget") && !j.at("budget").is_null()) {
    spec.budget = j.at("budget").get<double>();
  }
  spec.budget_factor = j.value("budget_factor", spec.budget_factor);
  spec.precision = j.value("precision", spec.precision);
  spec.lepski_kappa = j.value("lepski_kappa", spec.lepski_kappa);
  if (j.contains("selfsim")) {
    const Json& ss = j.at("selfsim");
    spec.selfsim.s = ss.value("s", spec.selfsim.s);
    spec.selfsim.L = ss.value("L", spec.selfsim.L);
    spec.selfsim.eps = ss.value("eps", spec.selfsim.eps);
    spec.selfsim.j0 = ss.value("j0", spec.selfsim.j0);
    spec.selfsim.rho = ss.value("rho", spec.selfsim.rho);
  }
  spec.threads = j.value("threads", spec.threads);
  spec.validate();
  return spec;
}

Json experiment_spec_to_json(const ExperimentSpec& spec) {
  Json out{{"method", spec.method},
           {"signal", spec.signal},
           {"n_grid", spec.n_grid},
           {"m", spec.m},
           {"reps", spec.reps},
           {"norm", norm_name(spec.norm)},
           {"rate_axis", axis_name(spec.rate_axis)},
           {"seed", spec.seed},
           {"j_max", spec.j_max},
           {"s", spec.s},
           {"s1", spec.s1},
           {"s2", spec.s2},
           {"L", spec.L},
           {"budget_factor", spec.budget_factor},
           {"precision", spec.precision},
           {"lepski_kappa", spec.lepski_kappa},
           {"selfsim",
            {{"s", spec.selfsim.s},
             {"L", spec.selfsim.L},
             {"eps", spec.selfsim.eps},
             {"j0", spec.selfsim.j0},
             {"rho", spec.selfsim.rho}}},
           {"threads", spec.threads}};
  out["p"] = spec.p ? Json(*spec.p) : Json(nullptr);
  out["budget"] = spec.budget ? Json(*spec.budget) : Json(nullptr);
  return out;
}

}  // namespace distest
