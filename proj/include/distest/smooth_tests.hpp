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
#include <vector>

#include "distest/coeff_seq.hpp"
#include "distest/wavelet.hpp"

namespace distest {

inline constexpr double kMinAlpha = 1e-6;

struct TestParams {
  double s1 = 0.5;
  double s2 = 1.0;
  double L = 1.0;
  double alpha = 0.05;
  double n = 1024.0;
  int m = 1;

  // alpha floored at kMinAlpha.
  double effective_alpha() const;
  // Noise variance of a half sample, 2m/n.
  double sigma_sq() const;
  // floor(log2(n/(2m)) / (2 s1 + 1/2)).
  int level_cap() const;
  void validate() const;
};

struct LevelStat {
  int level = 0;
  double statistic = 0.0;
  double threshold = 0.0;
};

struct TestReport {
  std::vector<LevelStat> levels;
  bool reject = false;
};

// l >= 1: sum_k fhat_{lk}^2 - 2^l sigma_sq. l = 0: father^2 - sigma_sq.
double test_statistic(const CoeffSeq& fhat, int l, double sigma_sq);

// Squared father followed by the squared masses of levels 1..upto.
std::vector<double> level_energies(const CoeffSeq& fhat, int upto);

double test_tau(int l, const TestParams& params);
double threshold(int l, const TestParams& params);

TestReport run_test(const CoeffSeq& half1, const TestParams& params);
// Same decision computed from level_energies output.
bool test_rejects(std::span<const double> energies, const TestParams& params);

// s1 if the test rejects, s2 otherwise.
double two_point_smoothness(const CoeffSeq& half1, const TestParams& params);

enum class SeparationForm {
  // 24 (2^{s1} L / sqrt(1 - 2^{-2 s1}) + 19) 2^{s1/(1+2s1)} / sqrt(alpha)
  kAdaptive,
  // 24 (2^{s1} L / (sqrt(1 - 2^{-2 s1}) + 19)) / sqrt(alpha)
  kAlternate,
};

double separation_constant(double alpha, double s1, double L,
                           SeparationForm form = SeparationForm::kAdaptive);
// separation_constant * (n/m)^{-s1/(1/2 + 2 s1)}.
double separation_radius(double alpha, double s1, double L, double n, int m,
                         SeparationForm form = SeparationForm::kAdaptive);

struct SmoothnessGrid {
  std::vector<double> points;

  // s1, s1 + 1/log2 n, ... while below s2, then s2 itself.
  static SmoothnessGrid make(double s1, double s2, double n);
  double min() const { return points.front(); }
  double max() const { return points.back(); }
};

// Exponent 2 s1 (1/2 - p(1+2 s1)) / ((1+2 s1)(1/2 + 2 s1)); may be negative.
double mn_alpha_exponent(double p, double s1);
// n^{exponent}. Throws std::domain_error when the exponent is negative.
double mn_alpha(double n, double p, double s1);

struct TestLevel {
  double alpha = 1.0;
  bool in_regime = true;
};
// alpha = 1/M_n inside the regime; alpha = 1 and in_regime = false outside.
TestLevel local_test_level(double n, double p, double s1);

// max{s in grid : the test of t against s accepts for every grid t < s},
// with alpha = 1/M_{n,t} for the test against t.
double grid_smoothness(const CoeffSeq& half1, const SmoothnessGrid& grid,
                       double L, double n, int m, double p);

// Smoothness read off the largest super-threshold coefficient of each block
// [j, rho j]; clipped to the grid range.
double selfsim_smoothness(const CoeffSeq& half1, const SelfSimSpec& spec,
                          const SmoothnessGrid& grid, double n, int m);

}  // namespace distest
