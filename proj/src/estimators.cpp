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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "distest/numeric.hpp"

namespace distest {

namespace {

void check_samples(std::span<const LocalSample> samples,
                   const EstimatorConfig& cfg) {
  cfg.model.validate();
  if (samples.size() != static_cast<std::size_t>(cfg.model.m)) {
    throw std::invalid_argument("expected " + std::to_string(cfg.model.m) +
                                " local samples, got " +
                                std::to_string(samples.size()));
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].machine != static_cast<int>(i)) {
      throw std::invalid_argument("local samples must be in machine order");
    }
    if (samples[i].obs.j_max() != cfg.model.j_max) {
      throw std::invalid_argument("local sample J_max does not match config");
    }
  }
}

void check_storage(long count, int j_max) {
  if (count > static_cast<long>(coefficient_count(j_max))) {
    throw std::invalid_argument("J_max " + std::to_string(j_max) +
                                " holds fewer than " + std::to_string(count) +
                                " coefficients");
  }
}

std::uint64_t bit_cap(long count, const EncoderConfig& enc) {
  return static_cast<std::uint64_t>(count) *
         static_cast<std::uint64_t>(enc.max_length());
}

// Encodes x, charges the ledger and returns what the centre decodes.
double transmit(double x, std::size_t machine, const EncoderConfig& enc,
                BudgetLedger& ledger) {
  const BitMessage msg = encode_value(x, enc);
  ledger.record(machine, msg);
  return decode_value(msg, enc);
}

GroupPlan make_plan(double n, int m, int eta, double budget, long range_cap) {
  const double log_n = std::log2(n);
  if (!(budget >= log_n)) {
    throw std::invalid_argument("budget below log2 n: no coefficient fits");
  }
  GroupPlan plan;
  plan.eta = std::clamp(eta, 1, m);
  plan.per_machine = static_cast<long>(safe_floor(budget / log_n));
  plan.transmitted = std::min(plan.eta * plan.per_machine, range_cap);
  // Machine i (1-based) joins group ceil(i eta / m).
  std::vector<int> owner(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    owner[i - 1] = static_cast<int>((static_cast<long>(i) * plan.eta + m - 1) / m);
  }
  for (int g = 1; g <= plan.eta; ++g) {
    MachineGroup grp;
    const auto first = std::ranges::find(owner, g);
    grp.first_machine = static_cast<int>(first - owner.begin());
    grp.last_machine = static_cast<int>(
        owner.rend() - std::ranges::find(owner.rbegin(), owner.rend(), g) - 1);
    grp.first_index = (g - 1) * plan.per_machine + 1;
    grp.last_index = std::min(g * plan.per_machine, plan.transmitted);
    plan.groups.push_back(grp);
  }
  return plan;
}

EstimateReport run_grouped(const GroupPlan& plan,
                           std::span<const LocalSample> samples,
                           const EstimatorConfig& cfg, std::string method) {
  check_samples(samples, cfg);
  check_storage(plan.transmitted, cfg.model.j_max);
  const EncoderConfig enc = cfg.encoder();
  enc.validate();

  EstimateReport rep;
  rep.method = std::move(method);
  rep.fhat = CoeffSeq(cfg.model.j_max);
  rep.ledger = BudgetLedger(samples.size(), bit_cap(plan.per_machine, enc));
  rep.counts.assign(samples.size(), 0);
  rep.contributors.assign(static_cast<std::size_t>(plan.transmitted), 0);

  for (const MachineGroup& g : plan.groups) {
    for (long t = g.first_index; t <= g.last_index; ++t) {
      double sum = 0.0;
      for (int i = g.first_machine; i <= g.last_machine; ++i) {
        sum += transmit(samples[i].obs.flat(t), i, enc, rep.ledger);
      }
      const int size = g.last_machine - g.first_machine + 1;
      rep.fhat.flat(t) = sum / size;
      rep.contributors[t - 1] = size;
    }
    const long sent = std::max(0L, g.last_index - g.first_index + 1);
    for (int i = g.first_machine; i <= g.last_machine; ++i) rep.counts[i] = sent;
  }
  return rep;
}

// Machine i sends the first counts[i] coefficients of halves[i]; the centre
// keeps t <= median count and averages over the machines that sent t.
void aggregate_prefixes(std::span<const CoeffSeq> halves,
                        std::span<const long> counts, long count_cap,
                        const EstimatorConfig& cfg, EstimateReport& rep) {
  const EncoderConfig enc = cfg.encoder();
  enc.validate();
  check_storage(count_cap, cfg.model.j_max);
  const std::size_t m = halves.size();
  rep.fhat = CoeffSeq(cfg.model.j_max);
  rep.ledger = BudgetLedger(m, bit_cap(count_cap, enc));
  rep.counts.assign(counts.begin(), counts.end());

  const long n_tilde = median_count(counts);
  rep.n_tilde = n_tilde;
  rep.contributors.assign(static_cast<std::size_t>(n_tilde), 0);
  std::vector<double> sums(static_cast<std::size_t>(n_tilde), 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (long t = 1; t <= counts[i]; ++t) {
      const double y = transmit(halves[i].flat(t), i, enc, rep.ledger);
      if (t <= n_tilde) {
        sums[t - 1] += y;
        ++rep.contributors[t - 1];
      }
    }
  }
  for (long t = 1; t <= n_tilde; ++t) {
    if (rep.contributors[t - 1] == 0) {
      throw std::logic_error("no machine sent coefficient " + std::to_string(t) +
                             " below the median count");
    }
    rep.fhat.flat(t) = sums[t - 1] / rep.contributors[t - 1];
  }
  double s_tilde = -1.0;
  for (std::size_t i = 0; i < m; ++i) {
    if (counts[i] == n_tilde && i < rep.s_hat.size()) {
      s_tilde = std::max(s_tilde, rep.s_hat[i]);
    }
  }
  if (s_tilde >= 0.0) rep.s_tilde = s_tilde;
}

std::vector<SplitSample> split_all(std::span<const LocalSample> samples,
                                   const EstimatorConfig& cfg) {
  std::vector<SplitSample> out;
  out.reserve(samples.size());
  for (const LocalSample& s : samples) out.push_back(split(s, cfg.model));
  return out;
}

void regime_warning(double p, double s_top, EstimateReport& rep) {
  if (mn_alpha_exponent(p, s_top) < -1e-12) {
    rep.warnings.push_back("outside the adaptive regime: s = " +
                           std::to_string(s_top) + " exceeds 1/(4p) - 1/2 at p = " +
                           std::to_string(p));
  }
}

EstimateReport finish_adaptive(std::span<const LocalSample> samples,
                               const std::vector<SplitSample>& halves,
                               std::vector<double> s_hat, long count_cap,
                               bool sup_norm_counts, const EstimatorConfig& cfg,
                               EstimateReport rep) {
  std::vector<long> counts;
  std::vector<CoeffSeq> second;
  counts.reserve(samples.size());
  second.reserve(samples.size());
  const double n = cfg.model.n;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    counts.push_back(sup_norm_counts ? count_linf(n, s_hat[i]) : count_l2(n, s_hat[i]));
    second.push_back(halves[i].half2);
  }
  rep.s_hat = std::move(s_hat);
  aggregate_prefixes(second, counts, count_cap, cfg, rep);
  return rep;
}

}  // namespace

long count_l2(double n, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("count_l2: s must be > 0");
  return std::max(1L, static_cast<long>(safe_floor(std::pow(n, 1.0 / (1.0 + 2.0 * s)))));
}

long count_linf(double n, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("count_linf: s must be > 0");
  return std::max(1L, static_cast<long>(safe_floor(
                          std::pow(n / std::log2(n), 1.0 / (1.0 + 2.0 * s)))));
}

GroupPlan plan_l2(double n, int m, double s, double budget) {
  if (m < 1) throw std::invalid_argument("plan_l2: m must be >= 1");
  const double log_n = std::log2(n);
  const double ratio = std::pow(n, 1.0 / (1.0 + 2.0 * s)) * log_n / budget;
  const double eta = safe_floor(std::pow(ratio, (1.0 + 2.0 * s) / (2.0 + 2.0 * s)));
  const int eta_i = static_cast<int>(std::clamp(eta, 1.0, static_cast<double>(m)));
  return make_plan(n, m, eta_i, budget, count_l2(n, s));
}

GroupPlan plan_linf(double n, int m, double s, double L, double budget) {
  if (m < 1) throw std::invalid_argument("plan_linf: m must be >= 1");
  const double log_n = std::log2(n);
  const double base = L * L * n * std::pow(log_n, 2.0 * s) /
                      std::pow(budget, 1.0 + 2.0 * s);
  const double eta = safe_floor(std::pow(base, 1.0 / (2.0 + 2.0 * s)));
  const int eta_i = static_cast<int>(std::clamp(eta, 1.0, static_cast<double>(m)));
  return make_plan(n, m, eta_i, budget, count_linf(n, s));
}

long median_count(std::span<const long> counts) {
  if (counts.empty()) throw std::invalid_argument("median_count: no counts");
  std::vector<long> sorted(counts.begin(), counts.end());
  std::ranges::sort(sorted);
  return sorted[(sorted.size() + 1) / 2 - 1];
}

EstimateReport nonadaptive_l2(std::span<const LocalSample> samples, double s,
                              double L, double budget, const EstimatorConfig& cfg) {
  if (!(s > 0.0) || !(L > 0.0)) {
    throw std::invalid_argument("nonadaptive_l2: s and L must be > 0");
  }
  return run_grouped(plan_l2(cfg.model.n, cfg.model.m, s, budget), samples, cfg,
                     "l2");
}

EstimateReport nonadaptive_linf(std::span<const LocalSample> samples, double s,
                                double L, double budget,
                                const EstimatorConfig& cfg) {
  if (!(s > 0.0) || !(L > 0.0)) {
    throw std::invalid_argument("nonadaptive_linf: s and L must be > 0");
  }
  return run_grouped(plan_linf(cfg.model.n, cfg.model.m, s, L, budget), samples,
                     cfg, "linf");
}

EstimateReport global_adaptive_s0(std::span<const LocalSample> samples,
                                  double s0, double s_max,
                                  const EstimatorConfig& cfg) {
  if (!(s0 > 0.0 && s0 < s_max)) {
    throw std::invalid_argument("global_adaptive_s0: need 0 < s0 < s_max");
  }
  check_samples(samples, cfg);
  const double n = cfg.model.n;
  const long count = count_l2(n, s0);
  std::vector<CoeffSeq> obs;
  for (const LocalSample& s : samples) obs.push_back(s.obs);
  const std::vector<long> counts(samples.size(), count);

  EstimateReport rep;
  rep.method = "oracle-s0";
  aggregate_prefixes(obs, counts, count, cfg, rep);

  // Truncation Lepski over levels 0..J with J = floor(log2 count).
  const int top = static_cast<int>(safe_floor(std::log2(static_cast<double>(count))));
  std::vector<double> energy(static_cast<std::size_t>(top) + 1, 0.0);
  for (int l = 0; l <= top && l <= cfg.model.j_max; ++l) {
    for (double v : rep.fhat.level(l)) energy[l] += v * v;
  }
  int chosen = top;
  for (int j = 0; j <= top; ++j) {
    bool ok = true;
    double gap = 0.0;
    for (int jp = j + 1; jp <= top && ok; ++jp) {
      gap += energy[jp];
      ok = gap <= cfg.lepski_kappa * std::exp2(jp) / n;
    }
    if (ok) {
      chosen = j;
      break;
    }
  }
  rep.lepski_level = chosen;
  for (int l = chosen + 1; l <= cfg.model.j_max; ++l) {
    for (double& v : rep.fhat.level(l)) v = 0.0;
  }
  return rep;
}

EstimateReport adaptive_l2_twopoint(std::span<const LocalSample> samples,
                                    double s1, double s2, double L, double p,
                                    const EstimatorConfig& cfg) {
  check_samples(samples, cfg);
  const double n = cfg.model.n;
  const TestLevel level = local_test_level(n, p, s1);
  const TestParams params{s1, s2, L, level.alpha, n, cfg.model.m};
  params.validate();

  EstimateReport rep;
  rep.method = "adaptive2";
  regime_warning(p, s2, rep);

  const std::vector<SplitSample> halves = split_all(samples, cfg);
  std::vector<double> s_hat;
  for (const SplitSample& h : halves) {
    s_hat.push_back(two_point_smoothness(h.half1, params));
  }
  return finish_adaptive(samples, halves, std::move(s_hat), count_l2(n, s1),
                         false, cfg, std::move(rep));
}

EstimateReport adaptive_l2_grid(std::span<const LocalSample> samples,
                                const SmoothnessGrid& grid, double L, double p,
                                const EstimatorConfig& cfg) {
  check_samples(samples, cfg);
  if (grid.points.empty()) throw std::invalid_argument("adaptive_l2_grid: empty grid");
  const double n = cfg.model.n;

  EstimateReport rep;
  rep.method = "adaptive-grid";
  regime_warning(p, grid.max(), rep);

  const std::vector<SplitSample> halves = split_all(samples, cfg);
  std::vector<double> s_hat;
  for (const SplitSample& h : halves) {
    s_hat.push_back(grid_smoothness(h.half1, grid, L, n, cfg.model.m, p));
  }
  return finish_adaptive(samples, halves, std::move(s_hat),
                         count_l2(n, grid.min()), false, cfg, std::move(rep));
}

EstimateReport adaptive_l2_grid(std::span<const LocalSample> samples, double s1,
                                double s2, double L, double p,
                                const EstimatorConfig& cfg) {
  return adaptive_l2_grid(samples, SmoothnessGrid::make(s1, s2, cfg.model.n), L,
                          p, cfg);
}

EstimateReport adaptive_linf_selfsim(std::span<const LocalSample> samples,
                                     const SelfSimSpec& spec,
                                     const SmoothnessGrid& grid,
                                     const EstimatorConfig& cfg) {
  check_samples(samples, cfg);
  spec.validate();
  if (grid.points.empty()) {
    throw std::invalid_argument("adaptive_linf_selfsim: empty grid");
  }
  const double n = cfg.model.n;

  EstimateReport rep;
  rep.method = "selfsim";
  const std::vector<SplitSample> halves = split_all(samples, cfg);
  std::vector<double> s_hat;
  for (const SplitSample& h : halves) {
    s_hat.push_back(selfsim_smoothness(h.half1, spec, grid, n, cfg.model.m));
  }
  return finish_adaptive(samples, halves, std::move(s_hat),
                         count_linf(n, grid.min()), true, cfg, std::move(rep));
}

}  // namespace distest
