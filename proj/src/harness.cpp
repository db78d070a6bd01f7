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

#include "distest/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "distest/generators.hpp"
#include "distest/json_io.hpp"
#include "distest/model.hpp"
#include "distest/numeric.hpp"
#include "distest/smooth_tests.hpp"

namespace distest {

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// Distinct stream family per grid point.
std::uint64_t grid_seed(std::uint64_t seed, double n) {
  return splitmix64(seed ^ splitmix64(std::bit_cast<std::uint64_t>(n)));
}

double log_cosh(double y) {
  const double a = std::abs(y);
  return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

}  // namespace

void parallel_for(std::size_t count, int threads,
                  const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

SignalSource SignalSource::parse(const std::string& text) {
  SignalSource src;
  src.text_ = text;
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  static const std::set<std::string> kKinds{"zero",      "besov",   "selfsim",
                                            "separated", "hard-l2", "hard-linf"};
  if (!kKinds.contains(head)) {
    if (!std::filesystem::exists(text)) {
      throw std::invalid_argument("unknown signal '" + text +
                                  "': not a generator and not a file");
    }
    src.kind_ = "file";
    src.fixed_ = load_coeffs(text);
    return src;
  }
  src.kind_ = head;
  if (colon == std::string::npos) return src;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("signal parameter '" + item + "' lacks '='");
    }
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "kind") {
      if (value == "B2inf") {
        src.params_.emplace_back(key, 0.0);
      } else if (value == "BinfInf") {
        src.params_.emplace_back(key, 1.0);
      } else {
        throw std::invalid_argument("besov kind must be B2inf or BinfInf");
      }
      continue;
    }
    try {
      std::size_t used = 0;
      const double v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      src.params_.emplace_back(key, v);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("signal parameter '" + key +
                                  "' is not a number: " + value);
    }
  }
  return src;
}

double SignalSource::get(const std::string& key, double fallback) const {
  for (const auto& [k, v] : params_) {
    if (k == key) return v;
  }
  return fallback;
}

bool SignalSource::random() const {
  return kind_ != "zero" && kind_ != "file" && kind_ != "hard-linf";
}

CoeffSeq SignalSource::make(const SignalContext& ctx, RandomStream& rng) const {
  if (kind_ == "zero") return CoeffSeq(ctx.j_max);
  if (kind_ == "file") {
    if (fixed_->j_max() > ctx.j_max) {
      throw std::invalid_argument("signal file is deeper than J_max");
    }
    CoeffSeq out(ctx.j_max);
    for (std::size_t t = 1; t <= fixed_->size(); ++t) out.flat(t) = fixed_->flat(t);
    return out;
  }
  const double s = get("s", 1.0);
  const double L = get("L", 1.0);
  if (kind_ == "besov") {
    const BesovSpec spec{s, L,
                         get("kind", 0.0) != 0.0 ? BesovNorm::kBInfInf
                                                 : BesovNorm::kB2Inf};
    return gen_besov_random(spec, get("fill", 1.0), ctx.j_max, rng);
  }
  if (kind_ == "selfsim") {
    const SelfSimSpec spec{s, L, get("eps", 0.5),
                           static_cast<int>(get("j0", 2.0)), get("rho", 2.0)};
    return gen_self_similar(spec, ctx.j_max, rng);
  }
  if (kind_ == "separated") {
    const BesovSpec base{s, L, BesovNorm::kB2Inf};
    CoeffSeq f = gen_besov_random(base, get("fill", 0.9), ctx.j_max, rng);
    const double s2 = get("s2", 1.0);
    double radius = get("radius", -1.0);
    if (radius < 0.0) {
      const double alpha = local_test_level(ctx.n, ctx.p, s).alpha;
      radius = separation_radius(alpha, s, L, ctx.n, ctx.m);
    }
    return add_separation(std::move(f), s2, L, radius,
                          static_cast<int>(get("level", 1.0)));
  }
  const std::vector<double> budgets(static_cast<std::size_t>(ctx.m), ctx.budget);
  if (kind_ == "hard-l2") {
    return gen_hard_l2(s, L, ctx.n, ctx.m, budgets, rng, ctx.j_max).f;
  }
  return gen_hard_linf(s, ctx.n, ctx.m, budgets,
                       static_cast<long>(get("k", 1.0)), ctx.j_max)
      .f;
}

CoeffSeq add_separation(CoeffSeq f, double s2, double L, double radius,
                        int level) {
  if (level < 0 || level > f.j_max()) {
    throw std::out_of_range("add_separation: level out of range");
  }
  if (!(radius >= 0.0)) throw std::invalid_argument("add_separation: radius < 0");
  double others = std::pow(std::max(0.0, std::abs(f.father()) - L), 2);
  for (int j = 0; j <= f.j_max(); ++j) {
    if (j == level) continue;
    double mass = 0.0;
    for (double v : f.level(j)) mass += v * v;
    others += std::pow(std::max(0.0, std::sqrt(mass) - L * std::exp2(-j * s2)), 2);
  }
  if (others > radius * radius) {
    throw std::invalid_argument("add_separation: signal already farther than radius");
  }
  const double target = L * std::exp2(-level * s2) + std::sqrt(radius * radius - others);
  auto lvl = f.level(level);
  double mass = 0.0;
  for (double v : lvl) mass += v * v;
  if (mass > 0.0) {
    const double scale = target / std::sqrt(mass);
    for (double& v : lvl) v *= scale;
  } else {
    const double each = target / std::sqrt(static_cast<double>(lvl.size()));
    for (double& v : lvl) v = each;
  }
  return f;
}

void ExperimentSpec::validate() const {
  static const std::set<std::string> kMethods{"l2",       "linf",          "oracle-s0",
                                              "adaptive2", "adaptive-grid", "selfsim"};
  if (!kMethods.contains(method)) {
    throw std::invalid_argument("unknown method '" + method + "'");
  }
  if (reps < 1) throw std::invalid_argument("reps must be >= 1");
  if (n_grid.empty()) throw std::invalid_argument("n grid is empty");
  for (double n : n_grid) {
    if (!(n >= 4.0) || std::exp2(std::round(std::log2(n))) != n) {
      throw std::invalid_argument("every n must be a power of two >= 4");
    }
  }
  if (!p && m < 1) throw std::invalid_argument("m must be >= 1");
  if (p && !(*p >= 0.0 && *p < 1.0)) throw std::invalid_argument("p must lie in [0, 1)");
  if (j_max < 0 || j_max > kMaxLevel) throw std::invalid_argument("J_max out of range");
}

int ExperimentSpec::machines_for(double n) const {
  if (!p) return m;
  return std::max(1, static_cast<int>(std::lround(std::pow(n, *p))));
}

double ExperimentSpec::budget_for(double n) const {
  if (budget) return *budget;
  return budget_factor * std::pow(n, 1.0 / (1.0 + 2.0 * s)) * std::log2(n);
}

int ExperimentSpec::depth_for(double n) const {
  if (j_max > 0) return j_max;
  const int mm = machines_for(n);
  const double half_n = n / (2.0 * mm);
  long count = 1;
  int tested = 0;
  if (method == "l2") {
    count = plan_l2(n, mm, s, budget_for(n)).transmitted;
  } else if (method == "linf") {
    count = plan_linf(n, mm, s, L, budget_for(n)).transmitted;
  } else if (method == "oracle-s0") {
    count = count_l2(n, s1);
  } else if (method == "selfsim") {
    count = count_linf(n, s1);
    tested = std::min(16, static_cast<int>(safe_floor(std::log2(half_n))));
  } else {
    count = count_l2(n, s1);
    tested = static_cast<int>(safe_floor(std::log2(half_n) / (2.0 * s1 + 0.5)));
  }
  const int top = level_position(static_cast<std::size_t>(std::max(count, 2L))).first;
  const int cap = std::min(20, static_cast<int>(safe_floor(std::log2(n))));
  return std::clamp(std::max(top + 4, tested), 1, cap);
}

namespace {

double loss_of(const CoeffSeq& fhat, const CoeffSeq& f0, RiskNorm norm) {
  const CoeffSeq diff = fhat - f0;
  return norm == RiskNorm::kL2Sq ? l2_norm_sq(diff) : haar_sup_norm(diff);
}

TrialResult trial_with(const ExperimentSpec& spec, const SignalSource& source,
                       double n, std::uint64_t rep) {
  const int m = spec.machines_for(n);
  const int depth = spec.depth_for(n);
  const std::uint64_t seed = grid_seed(spec.seed, n);
  const double p = spec.p ? *spec.p : std::log(static_cast<double>(m)) / std::log(n);
  const SignalContext ctx{depth, n, m, p, spec.budget_for(n)};

  RandomStream signal_rng(seed, 0, rep, StreamRole::kSignal);
  TrialResult out;
  out.f0 = source.make(ctx, signal_rng);

  EstimatorConfig cfg;
  cfg.model = ModelConfig{n, m, depth, seed};
  cfg.precision = spec.precision;
  cfg.lepski_kappa = spec.lepski_kappa;
  const std::vector<LocalSample> samples = simulate(out.f0, cfg.model, rep);

  if (spec.method == "l2") {
    out.estimate = nonadaptive_l2(samples, spec.s, spec.L, ctx.budget, cfg);
  } else if (spec.method == "linf") {
    out.estimate = nonadaptive_linf(samples, spec.s, spec.L, ctx.budget, cfg);
  } else if (spec.method == "oracle-s0") {
    out.estimate = global_adaptive_s0(samples, spec.s1, spec.s2, cfg);
  } else if (spec.method == "adaptive2") {
    out.estimate = adaptive_l2_twopoint(samples, spec.s1, spec.s2, spec.L, p, cfg);
  } else if (spec.method == "adaptive-grid") {
    out.estimate = adaptive_l2_grid(samples, spec.s1, spec.s2, spec.L, p, cfg);
  } else {
    out.estimate = adaptive_linf_selfsim(
        samples, spec.selfsim, SmoothnessGrid::make(spec.s1, spec.s2, n), cfg);
  }
  out.loss = loss_of(out.estimate.fhat, out.f0, spec.norm);
  return out;
}

}  // namespace

TrialResult run_trial(const ExperimentSpec& spec, double n, std::uint64_t rep) {
  spec.validate();
  return trial_with(spec, SignalSource::parse(spec.signal), n, rep);
}

double rate_abscissa(double n, RateAxis axis) {
  return axis == RateAxis::kLogN ? std::log2(n) : std::log2(n / std::log2(n));
}

RiskReport run_risk(const ExperimentSpec& spec) {
  spec.validate();
  const SignalSource source = SignalSource::parse(spec.signal);
  const std::size_t reps = static_cast<std::size_t>(spec.reps);
  const std::size_t tasks = spec.n_grid.size() * reps;

  struct Slot {
    double loss = 0.0;
    double bits_mean = 0.0;
    double bits_max = 0.0;
    std::vector<std::string> warnings;
  };
  std::vector<Slot> slots(tasks);
  parallel_for(tasks, spec.threads, [&](std::size_t task) {
    const double n = spec.n_grid[task / reps];
    const TrialResult r = trial_with(spec, source, n, task % reps);
    slots[task] = {r.loss, r.estimate.ledger.mean_bits(),
                   static_cast<double>(r.estimate.ledger.max_bits()),
                   r.estimate.warnings};
  });

  RiskReport report;
  report.rate_axis = spec.rate_axis;
  std::set<std::string> seen;
  for (std::size_t g = 0; g < spec.n_grid.size(); ++g) {
    RiskRow row;
    row.n = spec.n_grid[g];
    row.m = spec.machines_for(row.n);
    row.method = spec.method;
    row.reps = spec.reps;
    double sum = 0.0;
    double bits = 0.0;
    for (std::size_t r = 0; r < reps; ++r) {
      const Slot& s = slots[g * reps + r];
      sum += s.loss;
      bits += s.bits_mean;
      row.bits_max = std::max(row.bits_max, s.bits_max);
      for (const auto& w : s.warnings) {
        const std::string tagged = "n=" + fmt_double(row.n) + ": " + w;
        if (seen.insert(tagged).second) report.warnings.push_back(tagged);
      }
    }
    row.risk = sum / reps;
    row.bits_mean = bits / reps;
    if (reps > 1) {
      double ss = 0.0;
      for (std::size_t r = 0; r < reps; ++r) {
        ss += std::pow(slots[g * reps + r].loss - row.risk, 2);
      }
      row.risk_se = std::sqrt(ss / (reps - 1) / reps);
    }
    report.rows.push_back(row);
  }
  std::set<double> distinct(spec.n_grid.begin(), spec.n_grid.end());
  const bool positive = std::ranges::all_of(report.rows, [](const RiskRow& r) {
    return r.risk > 0.0;
  });
  if (distinct.size() >= 3 && positive) {
    const RateFit fit = fit_rate(report.rows, spec.rate_axis);
    report.slope = fit.slope;
    report.slope_se = fit.slope_se;
  }
  return report;
}

RateFit fit_rate(std::span<const double> x, std::span<const double> risk) {
  if (x.size() != risk.size()) throw std::invalid_argument("fit_rate: size mismatch");
  const std::size_t k = x.size();
  if (k < 3) throw std::invalid_argument("fit_rate: need at least 3 grid points");
  std::vector<double> y;
  for (double r : risk) {
    if (!(r > 0.0)) throw std::invalid_argument("fit_rate: risks must be positive");
    y.push_back(std::log2(r));
  }
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / k;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / k;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("fit_rate: degenerate grid");
  RateFit fit;
  fit.slope = sxy / sxx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    ssr += std::pow(y[i] - my - fit.slope * (x[i] - mx), 2);
  }
  fit.slope_se = std::sqrt(ssr / static_cast<double>(k - 2) / sxx);
  return fit;
}

RateFit fit_rate(const std::vector<RiskRow>& rows, RateAxis axis) {
  std::vector<double> x;
  std::vector<double> r;
  for (const RiskRow& row : rows) {
    x.push_back(rate_abscissa(row.n, axis));
    r.push_back(row.risk);
  }
  return fit_rate(x, r);
}

double log_likelihood_ratio(std::span<const double> x, double delta, double n,
                            int m) {
  const double snr = n / m;
  const double root = std::sqrt(delta);
  double out = 0.0;
  for (double v : x) out += -0.5 * delta * snr + log_cosh(v * root * snr);
  return out;
}

double log_likelihood_ratio_bruteforce(std::span<const double> x, double delta,
                                       double n, int m) {
  const std::size_t d = x.size();
  if (d > 20) throw std::invalid_argument("bruteforce: at most 20 coordinates");
  const double snr = n / m;
  const double root = std::sqrt(delta);
  const std::size_t patterns = std::size_t{1} << d;
  std::vector<double> terms(patterns);
  for (std::size_t mask = 0; mask < patterns; ++mask) {
    double a = 0.0;
    for (std::size_t k = 0; k < d; ++k) {
      a += ((mask >> k) & 1u ? 1.0 : -1.0) * root * x[k] * snr;
    }
    terms[mask] = a;
  }
  const double peak = *std::ranges::max_element(terms);
  double sum = 0.0;
  for (double a : terms) sum += std::exp(a - peak);
  return peak + std::log(sum) - static_cast<double>(d) * std::log(2.0) -
         0.5 * static_cast<double>(d) * delta * snr;
}

IndistinguishabilityReport run_indistinguishability(
    double n, int m, double s1, double s2, double p,
    std::span<const double> budgets, int reps, std::uint64_t seed, double eps3,
    int threads) {
  if (!(s1 < s2)) throw std::invalid_argument("indistinguishability: need s1 < s2");
  if (reps < 1) throw std::invalid_argument("indistinguishability: reps >= 1");
  if (budgets.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("indistinguishability: one budget per machine");
  }
  IndistinguishabilityReport rep;
  if (eps3 < 0.0) {
    eps3 = std::max(0.0, 0.5 * (p * (1.0 + 2.0 * s1) - 0.5) / (0.5 + 2.0 * s1));
  }
  rep.eps3 = eps3;
  rep.reps = reps;
  const double b = *std::ranges::max_element(budgets);
  rep.delta = tilde_delta_l2(n, m, b, s1, eps3);
  rep.level = critical_level(rep.delta, s1);
  if (rep.level > 20) throw std::invalid_argument("indistinguishability: level above 20");
  const std::size_t d = std::size_t{1} << rep.level;
  const double sd = std::sqrt(m / n);
  const double root = std::sqrt(rep.delta);

  std::vector<char> false_alarm(static_cast<std::size_t>(reps));
  std::vector<char> miss(static_cast<std::size_t>(reps));
  parallel_for(static_cast<std::size_t>(reps), threads, [&](std::size_t r) {
    std::vector<double> x(d);
    RandomStream null_rng(seed, 0, r, StreamRole::kHardInstance);
    for (double& v : x) v = sd * null_rng.normal();
    false_alarm[r] = log_likelihood_ratio(x, rep.delta, n, m) > 0.0;
    RandomStream alt_rng(seed, 1, r, StreamRole::kHardInstance);
    for (double& v : x) {
      const int beta = alt_rng.sign();
      v = beta * root + sd * alt_rng.normal();
    }
    miss[r] = !(log_likelihood_ratio(x, rep.delta, n, m) > 0.0);
  });
  rep.type1 = std::accumulate(false_alarm.begin(), false_alarm.end(), 0.0) / reps;
  rep.type2 = std::accumulate(miss.begin(), miss.end(), 0.0) / reps;
  return rep;
}

CalibrationRow calibrate_test(double alpha, double n, int m, double s1,
                              double s2, double L, int reps, std::uint64_t seed,
                              int threads) {
  const TestParams params{s1, s2, L, alpha, n, m};
  params.validate();
  if (reps < 1) throw std::invalid_argument("calibrate_test: reps >= 1");
  const int cap = params.level_cap();
  if (cap < 1) throw std::invalid_argument("calibrate_test: no tested level above 0");
  CalibrationRow row{alpha, n, m, s1, s2, 0.0, 0.0,
                     separation_radius(alpha, s1, L, n, m), reps, seed};
  const CoeffSeq null_f(cap);
  const CoeffSeq alt_f = add_separation(CoeffSeq(cap), s2, L, row.separation, 1);
  const ModelConfig cfg{n, m, cap, seed};

  std::vector<char> reject_null(static_cast<std::size_t>(reps));
  std::vector<char> accept_alt(static_cast<std::size_t>(reps));
  parallel_for(static_cast<std::size_t>(reps), threads, [&](std::size_t r) {
    const auto rr = static_cast<std::uint64_t>(r);
    const LocalSample a = simulate_machine(null_f, cfg, 0, rr);
    reject_null[r] = run_test(split(a, cfg).half1, params).reject;
    const LocalSample b = simulate_machine(alt_f, cfg, 0, rr + reps);
    accept_alt[r] = !run_test(split(b, cfg).half1, params).reject;
  });
  row.type1_hat = std::accumulate(reject_null.begin(), reject_null.end(), 0.0) / reps;
  row.type2_hat = std::accumulate(accept_alt.begin(), accept_alt.end(), 0.0) / reps;
  return row;
}

ConcentrationReport run_concentration(const CoeffSeq& f, double n, int j,
                                      double Delta, int reps, std::uint64_t seed,
                                      int threads) {
  if (j < 0 || j > f.j_max()) throw std::out_of_range("run_concentration: bad j");
  if (!(Delta > 0.0) || reps < 1) {
    throw std::invalid_argument("run_concentration: need Delta > 0, reps >= 1");
  }
  const std::vector<double> truth = level_energies(f, j);
  std::vector<double> dev(truth.size());
  for (int l = 0; l <= j; ++l) {
    dev[l] = 4.0 * std::sqrt((3.0 / Delta) *
                             (std::exp2((j + l) / 2.0) / (n * n) +
                              std::exp2(l / 4.0) * truth[l] / n));
  }
  const ModelConfig cfg{n, 1, f.j_max(), seed};
  std::vector<char> hit(static_cast<std::size_t>(reps));
  parallel_for(static_cast<std::size_t>(reps), threads, [&](std::size_t r) {
    const LocalSample s = simulate_machine(f, cfg, 0, r);
    bool any = false;
    for (int l = 0; l <= j && !any; ++l) {
      any = std::abs(test_statistic(s.obs, l, 1.0 / n) - truth[l]) >= dev[l];
    }
    hit[r] = any;
  });
  ConcentrationReport out;
  out.delta = Delta;
  out.reps = reps;
  out.frequency = std::accumulate(hit.begin(), hit.end(), 0.0) / reps;
  out.bound = 2.0 * std::exp(-std::sqrt(1.5) / std::sqrt(Delta));
  out.mc_sd = std::sqrt(out.frequency * (1.0 - out.frequency) / reps);
  return out;
}

std::string risk_report_csv(const RiskReport& report) {
  std::string out = "n,m,method,risk,risk_se,bits_mean,bits_max,slope,slope_se\n";
  const std::string slope = report.slope ? fmt_double(*report.slope) : "";
  const std::string slope_se = report.slope_se ? fmt_double(*report.slope_se) : "";
  for (const RiskRow& r : report.rows) {
    out += fmt_double(r.n) + "," + std::to_string(r.m) + "," + r.method + "," +
           fmt_double(r.risk) + "," + fmt_double(r.risk_se) + "," +
           fmt_double(r.bits_mean) + "," + fmt_double(r.bits_max) + "," + slope +
           "," + slope_se + "\n";
  }
  return out;
}

std::string calibration_csv(std::span<const CalibrationRow> rows) {
  std::string out = "alpha,n,m,s1,s2,type1_hat,type2_hat,separation,reps,seed\n";
  for (const CalibrationRow& r : rows) {
    out += fmt_double(r.alpha) + "," + fmt_double(r.n) + "," + std::to_string(r.m) +
           "," + fmt_double(r.s1) + "," + fmt_double(r.s2) + "," +
           fmt_double(r.type1_hat) + "," + fmt_double(r.type2_hat) + "," +
           fmt_double(r.separation) + "," + std::to_string(r.reps) + "," +
           std::to_string(r.seed) + "\n";
  }
  return out;
}

}  // namespace distest
