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

#include "distest/estimators.hpp"

#include <cmath>
#include <vector>

#include "distest/channel.hpp"
#include "distest/generators.hpp"
#include "distest/model.hpp"
#include "gtest/gtest.h"

namespace distest {
namespace {

EstimatorConfig config(double n, int m, int j_max, std::uint64_t seed,
                       double noise = 1.0) {
  EstimatorConfig cfg;
  cfg.model = ModelConfig{n, m, j_max, seed, noise};
  return cfg;
}

CoeffSeq smooth_truth(int j_max, std::uint64_t seed) {
  RandomStream rng(seed, 0, 0, StreamRole::kSignal);
  return gen_besov_random(BesovSpec{1.0, 1.0, BesovNorm::kB2Inf}, 0.9, j_max, rng);
}

TEST(CountTest, Examples) {
  EXPECT_EQ(count_l2(4096, 1.0), 16);
  EXPECT_EQ(count_l2(1 << 16, 0.4), 474);
  EXPECT_EQ(count_l2(1 << 16, 1.0), 40);
  EXPECT_EQ(count_linf(1 << 16, 1.0), 16);
  EXPECT_THROW(count_l2(1024, 0.0), std::invalid_argument);
}

TEST(PlanTest, FullBudgetIsOneGroup) {
  const GroupPlan plan = plan_l2(4096, 4, 1.0, 16 * 12);
  EXPECT_EQ(plan.eta, 1);
  EXPECT_EQ(plan.per_machine, 16);
  EXPECT_EQ(plan.transmitted, 16);
  ASSERT_EQ(plan.groups.size(), 1u);
  EXPECT_EQ(plan.groups[0].first_machine, 0);
  EXPECT_EQ(plan.groups[0].last_machine, 3);
  EXPECT_EQ(plan.groups[0].first_index, 1);
  EXPECT_EQ(plan.groups[0].last_index, 16);
}

TEST(PlanTest, SmallBudgetSplitsMachines) {
  // ratio 4: eta = floor(4^{3/4}) = 2, 4 coefficients per machine.
  const GroupPlan plan = plan_l2(4096, 8, 1.0, 48);
  EXPECT_EQ(plan.eta, 2);
  EXPECT_EQ(plan.per_machine, 4);
  EXPECT_EQ(plan.transmitted, 8);
  ASSERT_EQ(plan.groups.size(), 2u);
  EXPECT_EQ(plan.groups[0].first_machine, 0);
  EXPECT_EQ(plan.groups[0].last_machine, 3);
  EXPECT_EQ(plan.groups[0].first_index, 1);
  EXPECT_EQ(plan.groups[0].last_index, 4);
  EXPECT_EQ(plan.groups[1].first_machine, 4);
  EXPECT_EQ(plan.groups[1].last_machine, 7);
  EXPECT_EQ(plan.groups[1].first_index, 5);
  EXPECT_EQ(plan.groups[1].last_index, 8);
}

TEST(PlanTest, GroupsPartitionMachines) {
  for (int m : {1, 3, 7, 10, 33}) {
    for (double budget : {12.0, 30.0, 100.0, 400.0}) {
      const GroupPlan plan = plan_l2(4096, m, 0.5, budget);
      ASSERT_GE(plan.eta, 1);
      ASSERT_LE(plan.eta, m);
      int next = 0;
      for (const MachineGroup& g : plan.groups) {
        EXPECT_EQ(g.first_machine, next);
        EXPECT_GE(g.last_machine, g.first_machine);
        next = g.last_machine + 1;
      }
      EXPECT_EQ(next, m);
    }
  }
}

TEST(PlanTest, LinfSingleGroup) {
  const GroupPlan plan = plan_linf(1 << 16, 4, 1.0, 1.0, 1e4);
  EXPECT_EQ(plan.eta, 1);
  EXPECT_EQ(plan.transmitted, count_linf(1 << 16, 1.0));
  EXPECT_THROW(plan_l2(4096, 4, 1.0, 11.0), std::invalid_argument);
}

TEST(MedianTest, LowerMedian) {
  const std::vector<long> a{64, 16, 16};
  EXPECT_EQ(median_count(a), 16);
  const std::vector<long> b{16};
  EXPECT_EQ(median_count(b), 16);
  const std::vector<long> c{16, 64};
  EXPECT_EQ(median_count(c), 16);
  const std::vector<long> d{5, 1, 4, 2, 3};
  EXPECT_EQ(median_count(d), 3);
  EXPECT_THROW(median_count(std::span<const long>()), std::invalid_argument);
}

TEST(NonadaptiveTest, ZeroNoiseRecoversTruncatedSignal) {
  const double n = 4096;
  const EstimatorConfig cfg = config(n, 4, 6, 3, 0.0);
  const CoeffSeq f = smooth_truth(6, 3);
  const auto samples = simulate(f, cfg.model, 0);
  const EstimateReport rep = nonadaptive_l2(samples, 1.0, 1.0, 16 * 12, cfg);
  const EncoderConfig enc = cfg.encoder();
  for (std::size_t t = 1; t <= f.size(); ++t) {
    if (t <= 16) {
      EXPECT_EQ(rep.fhat.flat(t), decode_value(encode_value(f.flat(t), enc), enc));
      EXPECT_LE(std::abs(rep.fhat.flat(t) - f.flat(t)), 1.0 / 64);
    } else {
      EXPECT_EQ(rep.fhat.flat(t), 0.0);
    }
  }
  EXPECT_EQ(rep.ledger.max_bits(), 16u * enc.max_length());
}

TEST(NonadaptiveTest, GroupedAverages) {
  const double n = 4096;
  const EstimatorConfig cfg = config(n, 8, 6, 4);
  const CoeffSeq f = smooth_truth(6, 4);
  const auto samples = simulate(f, cfg.model, 2);
  const EstimateReport rep = nonadaptive_l2(samples, 1.0, 1.0, 48, cfg);
  const EncoderConfig enc = cfg.encoder();
  for (long t = 1; t <= 8; ++t) {
    const int first = t <= 4 ? 0 : 4;
    double sum = 0.0;
    for (int i = first; i < first + 4; ++i) {
      sum += decode_value(encode_value(samples[i].obs.flat(t), enc), enc);
    }
    EXPECT_DOUBLE_EQ(rep.fhat.flat(t), sum / 4);
    EXPECT_EQ(rep.contributors[t - 1], 4);
  }
  for (int i = 0; i < 8; ++i) EXPECT_EQ(rep.counts[i], 4);
  EXPECT_LE(rep.ledger.max_bits(), 4u * enc.max_length());
}

TEST(NonadaptiveTest, LedgerWithinCapOnNoisyData) {
  const double n = 1 << 12;
  const EstimatorConfig cfg = config(n, 5, 8, 8);
  const CoeffSeq f = smooth_truth(8, 8);
  const double budget = 100.0;
  for (int r = 0; r < 20; ++r) {
    const auto samples = simulate(f, cfg.model, r);
    const EstimateReport a = nonadaptive_l2(samples, 0.7, 1.0, budget, cfg);
    const EstimateReport b = nonadaptive_linf(samples, 0.7, 1.0, budget, cfg);
    const std::uint64_t cap = static_cast<std::uint64_t>(budget / 12) *
                              cfg.encoder().max_length();
    EXPECT_LE(a.ledger.max_bits(), cap);
    EXPECT_LE(b.ledger.max_bits(), cap);
  }
}

TEST(AdaptiveTest, ZeroNoiseSmoothSignalUsesTopSmoothness) {
  const double n = 1 << 12;
  const EstimatorConfig cfg = config(n, 4, 8, 9, 0.0);
  const CoeffSeq f = smooth_truth(8, 9);
  const auto samples = simulate(f, cfg.model, 0);
  const EstimateReport rep = adaptive_l2_twopoint(samples, 0.5, 1.0, 1.0, 0.25, cfg);
  ASSERT_EQ(rep.s_hat.size(), 4u);
  for (double s : rep.s_hat) EXPECT_EQ(s, 1.0);
  EXPECT_EQ(*rep.n_tilde, count_l2(n, 1.0));
  EXPECT_EQ(*rep.s_tilde, 1.0);
  const EncoderConfig enc = cfg.encoder();
  for (long t = 1; t <= *rep.n_tilde; ++t) {
    EXPECT_EQ(rep.fhat.flat(t), decode_value(encode_value(f.flat(t), enc), enc));
  }
}

TEST(AdaptiveTest, MedianCountAndContributors) {
  const double n = 1 << 12;
  const EstimatorConfig cfg = config(n, 3, 8, 10, 0.0);
  CoeffSeq rough(8);
  rough.at(1, 1) = 1e3;
  const CoeffSeq smooth = smooth_truth(8, 10);
  std::vector<LocalSample> samples = simulate(smooth, cfg.model, 0);
  samples[0] = simulate_machine(rough, cfg.model, 0, 0);
  const EstimateReport rep = adaptive_l2_twopoint(samples, 0.5, 1.0, 1.0, 0.25, cfg);
  EXPECT_EQ(rep.s_hat[0], 0.5);
  EXPECT_EQ(rep.s_hat[1], 1.0);
  EXPECT_EQ(rep.counts[0], count_l2(n, 0.5));
  EXPECT_EQ(*rep.n_tilde, count_l2(n, 1.0));
  for (int c : rep.contributors) EXPECT_EQ(c, 3);
  const std::uint64_t cap =
      static_cast<std::uint64_t>(count_l2(n, 0.5)) * cfg.encoder().max_length();
  EXPECT_LE(rep.ledger.max_bits(), cap);
}

TEST(AdaptiveTest, GridOfTwoMatchesTwoPoint) {
  const double n = 1 << 12;
  const EstimatorConfig cfg = config(n, 4, 8, 11);
  CoeffSeq f = smooth_truth(8, 11);
  f.at(1, 2) = 0.5;
  const SmoothnessGrid g{{0.5, 1.0}};
  for (int r = 0; r < 10; ++r) {
    const auto samples = simulate(f, cfg.model, r);
    const EstimateReport a = adaptive_l2_twopoint(samples, 0.5, 1.0, 1.0, 0.25, cfg);
    const EstimateReport b = adaptive_l2_grid(samples, g, 1.0, 0.25, cfg);
    EXPECT_EQ(a.fhat, b.fhat);
    EXPECT_EQ(a.s_hat, b.s_hat);
    EXPECT_EQ(a.n_tilde, b.n_tilde);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_EQ(a.ledger.max_bits(), b.ledger.max_bits());
  }
}

TEST(AdaptiveTest, RegimeWarning) {
  const double n = 1 << 12;
  const EstimatorConfig cfg = config(n, 4, 8, 12);
  const auto samples = simulate(CoeffSeq(8), cfg.model, 0);
  EXPECT_TRUE(adaptive_l2_grid(samples, 0.5, 1.0, 1.0, 0.1, cfg).warnings.empty());
  EXPECT_FALSE(adaptive_l2_grid(samples, 0.4, 1.0, 1.0, 3.0 / 16, cfg).warnings.empty());
}

TEST(SelfSimEstimatorTest, CapsAndCounts) {
  const double n = 1 << 14;
  const EstimatorConfig cfg = config(n, 4, 10, 13);
  RandomStream rng(13, 0, 0, StreamRole::kSignal);
  const SelfSimSpec spec{1.0, 1.0, 0.5, 2, 2.0};
  const CoeffSeq f = gen_self_similar(spec, 10, rng);
  const SmoothnessGrid g = SmoothnessGrid::make(0.5, 1.5, n);
  const auto samples = simulate(f, cfg.model, 0);
  const EstimateReport rep = adaptive_linf_selfsim(samples, spec, g, cfg);
  for (std::size_t i = 0; i < samples.size(); ++i) {
    EXPECT_EQ(rep.counts[i], count_linf(n, rep.s_hat[i]));
  }
  const std::uint64_t cap =
      static_cast<std::uint64_t>(count_linf(n, 0.5)) * cfg.encoder().max_length();
  EXPECT_LE(rep.ledger.max_bits(), cap);
}

TEST(LepskiTest, NoiselessKeepsSignal) {
  const double n = 1 << 12;
  const EstimatorConfig cfg = config(n, 2, 8, 14, 0.0);
  CoeffSeq f(8);
  f.at(3, 2) = 0.7;
  const auto samples = simulate(f, cfg.model, 0);
  const EstimateReport rep = global_adaptive_s0(samples, 0.5, 2.0, cfg);
  EXPECT_GE(*rep.lepski_level, 3);
  EXPECT_NEAR(rep.fhat.at(3, 2), 0.7, 1.0 / 64);
}

TEST(LepskiTest, PureNoiseCutsLow) {
  const double n = 1 << 12;
  const EstimatorConfig cfg = config(n, 2, 8, 15);
  int low = 0;
  for (int r = 0; r < 50; ++r) {
    const auto samples = simulate(CoeffSeq(8), cfg.model, r);
    low += *global_adaptive_s0(samples, 0.5, 2.0, cfg).lepski_level == 0;
  }
  EXPECT_GE(low, 45);
}

TEST(LepskiTest, SelectedLevelReachesSignal) {
  const double n = 1 << 14;
  const EstimatorConfig cfg = config(n, 2, 10, 16);
  CoeffSeq f(10);
  for (double& v : f.level(4)) v = 0.3;
  for (int r = 0; r < 20; ++r) {
    const auto samples = simulate(f, cfg.model, r);
    EXPECT_GE(*global_adaptive_s0(samples, 0.5, 2.0, cfg).lepski_level, 4);
  }
}

}  // namespace
}  // namespace distest
