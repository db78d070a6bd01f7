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

// Command-line front end: simulate, estimate, calibrate-test, rates,
// hard-instance.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "distest/channel.hpp"
#include "distest/estimators.hpp"
#include "distest/generators.hpp"
#include "distest/harness.hpp"
#include "distest/json_io.hpp"
#include "distest/model.hpp"

namespace {

using namespace distest;

std::uint64_t effective_seed(std::uint64_t seed) {
  if (const char* env = std::getenv("DISTEST_SEED")) {
    return std::stoull(env);
  }
  return seed;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

struct Common {
  double n = 4096;
  int m = 4;
  int j_max = 8;
  std::uint64_t seed = 1;
  std::string signal = "besov:s=1,L=1,fill=0.9";
  std::string out;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--n", c.n, "signal-to-noise parameter")->capture_default_str();
  app->add_option("--m", c.m, "number of machines")->capture_default_str();
  app->add_option("--j-max", c.j_max, "deepest resolution level")->capture_default_str();
  app->add_option("--seed", c.seed, "master seed (DISTEST_SEED overrides)")
      ->capture_default_str();
  app->add_option("--signal", c.signal, "generator spec or coefficient JSON file")
      ->capture_default_str();
  app->add_option("--out", c.out, "output file (stdout if omitted)");
}

CoeffSeq make_signal(const Common& c, double p, double budget,
                     std::uint64_t replicate) {
  const SignalSource src = SignalSource::parse(c.signal);
  RandomStream rng(effective_seed(c.seed), 0, replicate, StreamRole::kSignal);
  return src.make({c.j_max, c.n, c.m, p, budget}, rng);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed estimation under communication constraints"};
  app.require_subcommand(1);

  Common sim;
  std::uint64_t sim_rep = 0;
  auto* simulate_cmd = app.add_subcommand("simulate", "dump local samples as JSON");
  add_common(simulate_cmd, sim);
  simulate_cmd->add_option("--replicate", sim_rep)->capture_default_str();

  Common est;
  std::string method = "l2";
  double s = 1.0, s1 = 0.5, s2 = 1.0, L = 1.0, precision = 0.5;
  std::optional<double> budget, p_opt;
  SelfSimSpec selfsim;
  std::uint64_t est_rep = 0;
  auto* estimate_cmd = app.add_subcommand("estimate", "run one procedure");
  add_common(estimate_cmd, est);
  estimate_cmd->add_option("--method", method)
      ->check(CLI::IsMember({"l2", "linf", "oracle-s0", "adaptive2", "adaptive-grid",
                             "selfsim"}))
      ->capture_default_str();
  estimate_cmd->add_option("--budget", budget, "bits per machine");
  estimate_cmd->add_option("--s", s)->capture_default_str();
  estimate_cmd->add_option("--s1", s1)->capture_default_str();
  estimate_cmd->add_option("--s2", s2)->capture_default_str();
  estimate_cmd->add_option("--L", L)->capture_default_str();
  estimate_cmd->add_option("--p", p_opt, "m = n^p exponent (default log m / log n)");
  estimate_cmd->add_option("--precision", precision, "encoder exponent D")
      ->capture_default_str();
  estimate_cmd->add_option("--eps", selfsim.eps)->capture_default_str();
  estimate_cmd->add_option("--j0", selfsim.j0)->capture_default_str();
  estimate_cmd->add_option("--rho", selfsim.rho)->capture_default_str();
  estimate_cmd->add_option("--replicate", est_rep)->capture_default_str();

  double alpha = 0.04, cal_n = 512, cal_s1 = 0.5, cal_s2 = 1.0, cal_L = 1.0;
  int cal_m = 1, cal_reps = 2000, cal_threads = 1;
  std::uint64_t cal_seed = 1;
  std::string cal_out;
  auto* calibrate_cmd =
      app.add_subcommand("calibrate-test", "empirical error rates of the test");
  calibrate_cmd->add_option("--alpha", alpha)->capture_default_str();
  calibrate_cmd->add_option("--n", cal_n)->capture_default_str();
  calibrate_cmd->add_option("--m", cal_m)->capture_default_str();
  calibrate_cmd->add_option("--s1", cal_s1)->capture_default_str();
  calibrate_cmd->add_option("--s2", cal_s2)->capture_default_str();
  calibrate_cmd->add_option("--L", cal_L)->capture_default_str();
  calibrate_cmd->add_option("--reps", cal_reps)->capture_default_str();
  calibrate_cmd->add_option("--seed", cal_seed)->capture_default_str();
  calibrate_cmd->add_option("--threads", cal_threads)->capture_default_str();
  calibrate_cmd->add_option("--out", cal_out);

  std::string config_path, format = "csv", rates_out;
  std::optional<int> rates_threads;
  auto* rates_cmd = app.add_subcommand("rates", "Monte Carlo risk over an n grid");
  rates_cmd->add_option("--config", config_path, "JSON experiment file")->required();
  rates_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  rates_cmd->add_option("--threads", rates_threads);
  rates_cmd->add_option("--out", rates_out);

  std::string hard_kind = "l2";
  Common hard;
  double hard_s = 1.0, hard_L = 1.0, hard_s2 = 2.0;
  std::optional<double> hard_budget, hard_p;
  long hard_k = 1;
  int hard_reps = 0, hard_threads = 1;
  auto* hard_cmd = app.add_subcommand(
      "hard-instance", "adversarial signal, optionally with the likelihood-ratio experiment");
  add_common(hard_cmd, hard);
  hard_cmd->add_option("--kind", hard_kind)
      ->check(CLI::IsMember({"l2", "linf"}))
      ->capture_default_str();
  hard_cmd->add_option("--s", hard_s)->capture_default_str();
  hard_cmd->add_option("--s2", hard_s2, "alternative smoothness for the experiment")
      ->capture_default_str();
  hard_cmd->add_option("--L", hard_L)->capture_default_str();
  hard_cmd->add_option("--budget", hard_budget, "bits per machine");
  hard_cmd->add_option("--p", hard_p);
  hard_cmd->add_option("--k", hard_k, "bump position for linf")->capture_default_str();
  hard_cmd->add_option("--reps", hard_reps, "run the indistinguishability experiment")
      ->capture_default_str();
  hard_cmd->add_option("--threads", hard_threads)->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*simulate_cmd) {
      const CoeffSeq f0 = make_signal(sim, 0.0, 0.0, sim_rep);
      const ModelConfig cfg{sim.n, sim.m, sim.j_max, effective_seed(sim.seed)};
      const auto samples = simulate(f0, cfg, sim_rep);
      const Json out{{"f0", coeffs_to_json(f0)}, {"samples", samples_to_json(samples)}};
      write_output(out.dump(2) + "\n", sim.out);
    } else if (*estimate_cmd) {
      const double p = p_opt ? *p_opt : std::log(est.m) / std::log(est.n);
      const double b = budget ? *budget
                              : std::pow(est.n, 1.0 / (1.0 + 2.0 * s)) * std::log2(est.n);
      const CoeffSeq f0 = make_signal(est, p, b, est_rep);
      EstimatorConfig cfg;
      cfg.model = ModelConfig{est.n, est.m, est.j_max, effective_seed(est.seed)};
      cfg.precision = precision;
      const auto samples = simulate(f0, cfg.model, est_rep);
      EstimateReport rep;
      if (method == "l2") {
        rep = nonadaptive_l2(samples, s, L, b, cfg);
      } else if (method == "linf") {
        rep = nonadaptive_linf(samples, s, L, b, cfg);
      } else if (method == "oracle-s0") {
        rep = global_adaptive_s0(samples, s1, s2, cfg);
      } else if (method == "adaptive2") {
        rep = adaptive_l2_twopoint(samples, s1, s2, L, p, cfg);
      } else if (method == "adaptive-grid") {
        rep = adaptive_l2_grid(samples, s1, s2, L, p, cfg);
      } else {
        selfsim.L = L;
        rep = adaptive_linf_selfsim(samples, selfsim,
                                    SmoothnessGrid::make(s1, s2, est.n), cfg);
      }
      Json out = estimate_to_json(rep);
      out["l2_error_sq"] = l2_norm_sq(rep.fhat - f0);
      out["sup_error"] = haar_sup_norm(rep.fhat - f0);
      write_output(out.dump(2) + "\n", est.out);
    } else if (*calibrate_cmd) {
      const CalibrationRow row =
          calibrate_test(alpha, cal_n, cal_m, cal_s1, cal_s2, cal_L, cal_reps,
                         effective_seed(cal_seed), cal_threads);
      write_output(calibration_csv(std::vector<CalibrationRow>{row}), cal_out);
    } else if (*rates_cmd) {
      std::ifstream in(config_path);
      if (!in) throw std::runtime_error("cannot open " + config_path);
      ExperimentSpec spec = experiment_spec_from_json(Json::parse(in));
      spec.seed = effective_seed(spec.seed);
      if (rates_threads) spec.threads = *rates_threads;
      const RiskReport report = run_risk(spec);
      write_output(format == "csv" ? risk_report_csv(report)
                                   : risk_report_to_json(report).dump(2) + "\n",
                   rates_out);
    } else if (*hard_cmd) {
      const double b = hard_budget
                           ? *hard_budget
                           : std::pow(hard.n, 1.0 / (1.0 + 2.0 * hard_s)) * std::log2(hard.n);
      const std::vector<double> budgets(static_cast<std::size_t>(hard.m), b);
      Json out;
      if (hard_kind == "l2") {
        RandomStream rng(effective_seed(hard.seed), 0, 0, StreamRole::kHardInstance);
        const HardInstance h = gen_hard_l2(hard_s, hard_L, hard.n, hard.m, budgets, rng,
                                           hard.j_max);
        out = {{"delta", h.delta}, {"level", h.level}, {"f", coeffs_to_json(h.f)}};
      } else {
        const HardInstance h =
            gen_hard_linf(hard_s, hard.n, hard.m, budgets, hard_k, hard.j_max);
        out = {{"delta", h.delta}, {"level", h.level}, {"f", coeffs_to_json(h.f)}};
      }
      if (hard_reps > 0) {
        const double p = hard_p ? *hard_p : std::log(hard.m) / std::log(hard.n);
        const auto r = run_indistinguishability(hard.n, hard.m, hard_s, hard_s2, p,
                                                budgets, hard_reps,
                                                effective_seed(hard.seed), -1.0,
                                                hard_threads);
        out["indistinguishability"] = {{"delta", r.delta}, {"level", r.level},
                                       {"eps3", r.eps3},   {"type1", r.type1},
                                       {"type2", r.type2}, {"total", r.total()},
                                       {"reps", r.reps}};
      }
      write_output(out.dump(2) + "\n", hard.out);
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget violation: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
