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

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distest/coeff_seq.hpp"
#include "distest/estimators.hpp"
#include "distest/random.hpp"
#include "distest/wavelet.hpp"

namespace distest {

inline constexpr int kReportSchemaVersion = 1;

// Runs fn(0..count-1) on up to `threads` workers. fn must only write to its
// own index's slot; the first exception thrown is rethrown after joining.
void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn);

enum class RiskNorm { kL2Sq, kLinf };
enum class RateAxis { kLogN, kLogNOverLogN };

// Everything a signal generator may need besides its own parameters.
struct SignalContext {
  int j_max = 0;
  double n = 0.0;
  int m = 1;
  double p = 0.0;
  double budget = 0.0;
};

// Parsed form of "zero", "besov:s=1,L=1,fill=0.9,kind=B2inf",
// "selfsim:s=1,L=1,eps=0.5,j0=2,rho=2", "separated:s=0.4,s2=1,L=1,fill=0.9",
// "hard-l2:s=1,L=1", "hard-linf:s=1,k=1", or a path to a coefficient JSON file.
class SignalSource {
 public:
  static SignalSource parse(const std::string& text);

  const std::string& text() const { return text_; }
  // True when two draws may differ.
  bool random() const;
  CoeffSeq make(const SignalContext& ctx, RandomStream& rng) const;

 private:
  std::string text_;
  std::string kind_;
  std::vector<std::pair<std::string, double>> params_;
  std::optional<CoeffSeq> fixed_;

  double get(const std::string& key, double fallback) const;
};

// Level-`level` bump added to f so that its distance to B^{s2}_{2,inf}(L)
// becomes exactly `radius`.
CoeffSeq add_separation(CoeffSeq f, double s2, double L, double radius,
                        int level = 1);

struct ExperimentSpec {
  std::string method = "l2";
  std::string signal = "besov:s=1,L=1,fill=0.9";
  std::vector<double> n_grid;
  // m = round(n^p) when set, else the fixed m below.
  std::optional<double> p;
  int m = 1;
  int reps = 100;
  RiskNorm norm = RiskNorm::kL2Sq;
  RateAxis rate_axis = RateAxis::kLogN;
  std::uint64_t seed = 1;
  // 0 picks a depth from the method's largest transmission.
  int j_max = 0;
  double s = 1.0;
  double s1 = 0.5;
  double s2 = 1.0;
  double L = 1.0;
  // Bits per machine; when unset, budget_factor n^{1/(1+2s)} log2 n.
  std::optional<double> budget;
  double budget_factor = 1.0;
  double precision = 0.5;
  double lepski_kappa = 16.0;
  SelfSimSpec selfsim;
  int threads = 1;

  void validate() const;
  int machines_for(double n) const;
  double budget_for(double n) const;
  int depth_for(double n) const;
};

struct RiskRow {
  double n = 0.0;
  int m = 1;
  std::string method;
  double risk = 0.0;
  double risk_se = 0.0;
  double bits_mean = 0.0;
  double bits_max = 0.0;
  int reps = 0;

  bool operator==(const RiskRow&) const = default;
};

struct RiskReport {
  std::vector<RiskRow> rows;
  std::optional<double> slope;
  std::optional<double> slope_se;
  RateAxis rate_axis = RateAxis::kLogN;
  std::vector<std::string> warnings;

  bool operator==(const RiskReport&) const = default;
};

// One replicate: signal draw, simulation, estimate.
struct TrialResult {
  CoeffSeq f0;
  EstimateReport estimate;
  double loss = 0.0;
};
TrialResult run_trial(const ExperimentSpec& spec, double n, std::uint64_t rep);

RiskReport run_risk(const ExperimentSpec& spec);

struct RateFit {
  double slope = 0.0;
  double slope_se = 0.0;
};
// OLS slope of log2 risk against x. Needs at least 3 distinct x values.
RateFit fit_rate(std::span<const double> x, std::span<const double> risk);
RateFit fit_rate(const std::vector<RiskRow>& rows, RateAxis axis);
double rate_abscissa(double n, RateAxis axis);

// log of (1/|F0|) sum_beta dP_beta/dP_0 for observations x at noise variance
// m/n and bump sqrt(delta) on every coordinate.
double log_likelihood_ratio(std::span<const double> x, double delta, double n,
                            int m);
// Same quantity by enumerating all 2^d sign vectors; d <= 20.
double log_likelihood_ratio_bruteforce(std::span<const double> x, double delta,
                                       double n, int m);

struct IndistinguishabilityReport {
  double delta = 0.0;
  int level = 0;
  double eps3 = 0.0;
  double type1 = 0.0;
  double type2 = 0.0;
  double total() const { return type1 + type2; }
  int reps = 0;
};

// eps3 < 0 selects half of the admissible range (p(1+2s1) - 1/2)/(1/2 + 2s1).
IndistinguishabilityReport run_indistinguishability(
    double n, int m, double s1, double s2, double p,
    std::span<const double> budgets, int reps, std::uint64_t seed,
    double eps3 = -1.0, int threads = 1);

struct CalibrationRow {
  double alpha = 0.0;
  double n = 0.0;
  int m = 1;
  double s1 = 0.0;
  double s2 = 0.0;
  double type1_hat = 0.0;
  double type2_hat = 0.0;
  double separation = 0.0;
  int reps = 0;
  std::uint64_t seed = 0;
};

CalibrationRow calibrate_test(double alpha, double n, int m, double s1,
                              double s2, double L, int reps, std::uint64_t seed,
                              int threads = 1);

struct ConcentrationReport {
  double delta = 0.0;
  double frequency = 0.0;
  double bound = 0.0;
  double mc_sd = 0.0;
  int reps = 0;
};

// Frequency of {exists l <= j : |T(l) - |Pi_l f|^2| >= dev(l)} with noise
// variance 1/n, against 2 exp(-sqrt(3/2)/sqrt(Delta)).
ConcentrationReport run_concentration(const CoeffSeq& f, double n, int j,
                                      double Delta, int reps,
                                      std::uint64_t seed, int threads = 1);

std::string risk_report_csv(const RiskReport& report);
std::string calibration_csv(std::span<const CalibrationRow> rows);

}  // namespace distest
