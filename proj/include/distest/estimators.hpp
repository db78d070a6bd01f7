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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "distest/channel.hpp"
#include "distest/coeff_seq.hpp"
#include "distest/model.hpp"
#include "distest/smooth_tests.hpp"
#include "distest/wavelet.hpp"

namespace distest {

struct EstimatorConfig {
  ModelConfig model;
  // Fractional precision exponent D of the encoder.
  double precision = 0.5;
  double lepski_kappa = 16.0;

  EncoderConfig encoder() const { return {model.n, precision}; }
};

struct EstimateReport {
  std::string method;
  CoeffSeq fhat;
  BudgetLedger ledger;
  // Coefficients each machine sent.
  std::vector<long> counts;
  // Local smoothness choices; empty for nonadaptive procedures.
  std::vector<double> s_hat;
  std::optional<long> n_tilde;
  std::optional<double> s_tilde;
  // |M_t| for t = 1..contributors.size().
  std::vector<int> contributors;
  std::optional<int> lepski_level;
  std::vector<std::string> warnings;
};

struct MachineGroup {
  // Machines [first_machine, last_machine], 0-based and inclusive.
  int first_machine = 0;
  int last_machine = 0;
  // Flat indices [first_index, last_index]; empty when first > last.
  long first_index = 1;
  long last_index = 0;
};

struct GroupPlan {
  int eta = 1;
  // floor(B / log2 n) coefficients per machine.
  long per_machine = 0;
  // Highest flat index anyone transmits.
  long transmitted = 0;
  std::vector<MachineGroup> groups;
};

// floor(n^{1/(1+2s)}), at least 1.
long count_l2(double n, double s);
// floor((n / log2 n)^{1/(1+2s)}), at least 1.
long count_linf(double n, double s);

GroupPlan plan_l2(double n, int m, double s, double budget);
GroupPlan plan_linf(double n, int m, double s, double L, double budget);

// Lower median, the ceil(m/2)-th smallest count.
long median_count(std::span<const long> counts);

EstimateReport nonadaptive_l2(std::span<const LocalSample> samples, double s,
                              double L, double budget, const EstimatorConfig& cfg);
EstimateReport nonadaptive_linf(std::span<const LocalSample> samples, double s,
                                double L, double budget,
                                const EstimatorConfig& cfg);
EstimateReport global_adaptive_s0(std::span<const LocalSample> samples,
                                  double s0, double s_max,
                                  const EstimatorConfig& cfg);
EstimateReport adaptive_l2_twopoint(std::span<const LocalSample> samples,
                                    double s1, double s2, double L, double p,
                                    const EstimatorConfig& cfg);
EstimateReport adaptive_l2_grid(std::span<const LocalSample> samples,
                                const SmoothnessGrid& grid, double L, double p,
                                const EstimatorConfig& cfg);
EstimateReport adaptive_l2_grid(std::span<const LocalSample> samples, double s1,
                                double s2, double L, double p,
                                const EstimatorConfig& cfg);
EstimateReport adaptive_linf_selfsim(std::span<const LocalSample> samples,
                                     const SelfSimSpec& spec,
                                     const SmoothnessGrid& grid,
                                     const EstimatorConfig& cfg);

}  // namespace distest
