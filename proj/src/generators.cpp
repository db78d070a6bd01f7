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

#include "distest/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "distest/numeric.hpp"

namespace distest {

namespace {

constexpr double kFixedPointTol = 1e-12;
constexpr int kFixedPointMaxIter = 10000;

void check_sizes(double n, int m) {
  if (!(n >= 4.0)) throw std::invalid_argument("n must be >= 4");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
}

void check_budgets(std::span<const double> budgets, int m) {
  if (budgets.size() != static_cast<std::size_t>(m)) {
    throw std::invalid_argument("expected one budget per machine");
  }
  for (double b : budgets) {
    if (!(b > 0.0)) throw std::invalid_argument("budgets must be positive");
  }
}

// Root of delta - rhs(delta) for a decreasing rhs bounded by `upper`.
double decreasing_fixed_point(const std::function<double(double)>& rhs,
                              double upper) {
  return bisect_increasing([&](double d) { return d - rhs(d); }, 0.0, upper,
                           kFixedPointTol, kFixedPointMaxIter);
}

}  // namespace

CoeffSeq gen_besov_random(const BesovSpec& spec, double fill, int j_max,
                          RandomStream& rng) {
  spec.validate();
  if (!(fill > 0.0 && fill <= 1.0)) {
    throw std::invalid_argument("gen_besov_random: fill must lie in (0, 1]");
  }
  CoeffSeq f(j_max);
  f.father() = fill * spec.L * rng.sign();
  for (int j = 0; j <= j_max; ++j) {
    const double amp =
        spec.kind == BesovNorm::kBInfInf
            ? fill * spec.L * std::exp2(-j * (spec.s + 0.5))
            : fill * spec.L * std::exp2(-j * spec.s) / std::sqrt(std::exp2(j));
    for (double& v : f.level(j)) v = amp * rng.sign();
  }
  return f;
}

double solve_delta_n(double n, int m, std::span<const double> budgets, double s) {
  check_sizes(n, m);
  check_budgets(budgets, m);
  if (!(s > 0.0)) throw std::invalid_argument("solve_delta_n: s must be > 0");
  const double log_n = std::log2(n);
  const double first = m / (n * log_n);
  auto rhs = [&](double d) {
    const double scale = std::pow(d, 1.0 / (1.0 + 2.0 * s)) * log_n;
    double sum = 0.0;
    for (double b : budgets) sum += std::min(scale * b, 1.0);
    return sum > 0.0 ? std::min(first, m / (n * sum)) : first;
  };
  return decreasing_fixed_point(rhs, first);
}

int critical_level(double delta, double s) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::invalid_argument("critical_level: delta must lie in (0, 1)");
  }
  return static_cast<int>(safe_floor(std::log2(1.0 / delta) / (1.0 + 2.0 * s)));
}

HardInstance gen_hard_l2(double s, double L, double n, int m,
                         std::span<const double> budgets,
                         std::span<const int> signs, int j_max) {
  if (!(L > 0.0)) throw std::invalid_argument("gen_hard_l2: L must be > 0");
  HardInstance out{CoeffSeq(j_max), solve_delta_n(n, m, budgets, s), 0};
  out.level = critical_level(out.delta, s);
  if (out.level > j_max) {
    throw std::invalid_argument("gen_hard_l2: critical level " +
                                std::to_string(out.level) + " exceeds J_max " +
                                std::to_string(j_max));
  }
  auto lvl = out.f.level(out.level);
  if (signs.size() != lvl.size()) {
    throw std::invalid_argument("gen_hard_l2: need 2^{j_n} = " +
                                std::to_string(lvl.size()) + " signs");
  }
  const double amp = L * std::sqrt(out.delta);
  for (std::size_t k = 0; k < lvl.size(); ++k) {
    if (signs[k] != 1 && signs[k] != -1) {
      throw std::invalid_argument("gen_hard_l2: signs must be +1 or -1");
    }
    lvl[k] = amp * signs[k];
  }
  return out;
}

HardInstance gen_hard_l2(double s, double L, double n, int m,
                         std::span<const double> budgets, RandomStream& rng,
                         int j_max) {
  const int level = critical_level(solve_delta_n(n, m, budgets, s), s);
  if (level > j_max) {
    throw std::invalid_argument("gen_hard_l2: critical level exceeds J_max");
  }
  std::vector<int> signs(std::size_t{1} << level);
  for (int& b : signs) b = rng.sign();
  return gen_hard_l2(s, L, n, m, budgets, signs, j_max);
}

double solve_delta_bar(double n, int m, double budget, double s) {
  check_sizes(n, m);
  if (!(budget > 0.0)) throw std::invalid_argument("budget must be > 0");
  const double log_m = std::log2(std::max(m, 2));
  const double first = m / (n * log_m);
  auto rhs = [&](double d) {
    const double bracket =
        std::min(std::pow(d, 1.0 / (1.0 + 2.0 * s)) * budget, 1.0);
    return bracket > 0.0 ? std::min(first, 1.0 / (n * bracket * log_m)) : first;
  };
  return decreasing_fixed_point(rhs, first);
}

double tilde_delta_linf(double n, int m, std::span<const double> budgets,
                        double s) {
  check_budgets(budgets, m);
  const double b = *std::ranges::max_element(budgets);
  return std::min(solve_delta_bar(n, m, b, s), m / n);
}

double tilde_delta_l2(double n, int m, double budget, double s1, double eps3) {
  const double cap = std::pow(n / m, -(1.0 + 2.0 * s1) / (0.5 + 2.0 * s1)) *
                     std::pow(n, -eps3);
  return std::min(solve_delta_bar(n, m, budget, s1), cap);
}

HardInstance gen_hard_linf(double s, double n, int m,
                           std::span<const double> budgets, long k_choice,
                           int j_max) {
  HardInstance out{CoeffSeq(j_max), tilde_delta_linf(n, m, budgets, s), 0};
  out.level = critical_level(out.delta, s);
  if (out.level > j_max) {
    throw std::invalid_argument("gen_hard_linf: critical level " +
                                std::to_string(out.level) + " exceeds J_max");
  }
  out.f.at(out.level, k_choice) = std::sqrt(out.delta);
  return out;
}

CoeffSeq gen_self_similar(const SelfSimSpec& spec, int j_max, RandomStream& rng) {
  spec.validate();
  CoeffSeq f(j_max);
  f.father() = spec.L * rng.sign();
  for (int j = 0; j <= j_max; ++j) {
    const double amp = spec.L * std::exp2(-j * (spec.s + 0.5));
    auto lvl = f.level(j);
    const std::size_t spine = rng.below(lvl.size());
    for (std::size_t k = 0; k < lvl.size(); ++k) {
      lvl[k] = (k == spine ? spec.eps * amp : amp) * rng.sign();
    }
  }
  return f;
}

}  // namespace distest
