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

#include "distest/coeff_seq.hpp"
#include "distest/random.hpp"
#include "distest/wavelet.hpp"

namespace distest {

// Random member of a Besov ball with a deterministic amplitude profile and
// independent random signs:
//   B_{inf,inf}: |f_jk| = fill L 2^{-j(s+1/2)}
//   B_{2,inf}:   |f_jk| = fill L 2^{-js} / sqrt(2^j)  (level mass fill L 2^{-js})
// The father coefficient is fill L in both cases. fill must lie in (0, 1].
CoeffSeq gen_besov_random(const BesovSpec& spec, double fill, int j_max,
                          RandomStream& rng);

// Fixed point of
//   delta = min{ m / (n log n), m / (n sum_i [delta^{1/(1+2s)} B_i log n ^ 1]) }
// (base-2 logs). The right-hand side decreases in delta, so the root of
// delta - rhs(delta) is unique and is found by bisection to 1e-12 relative.
double solve_delta_n(double n, int m, std::span<const double> budgets, double s);

// Critical resolution level floor(log2(1/delta) / (1 + 2s)).
int critical_level(double delta, double s);

struct HardInstance {
  CoeffSeq f;
  double delta = 0.0;
  int level = 0;
};

// Sign-pattern instance at the critical level: f_{j_n,k} = L beta_k delta^{1/2}.
// signs must hold 2^{j_n} entries from {-1, +1}.
HardInstance gen_hard_l2(double s, double L, double n, int m,
                         std::span<const double> budgets,
                         std::span<const int> signs, int j_max);
HardInstance gen_hard_l2(double s, double L, double n, int m,
                         std::span<const double> budgets, RandomStream& rng,
                         int j_max);

// Fixed point of
//   d = min{ m / (n log m), 1 / (n [d^{1/(1+2s)} B ^ 1] log m) }
// with log m taken as log2(max(m, 2)).
double solve_delta_bar(double n, int m, double budget, double s);

// delta_bar ^ (m / n), with B the largest budget.
double tilde_delta_linf(double n, int m, std::span<const double> budgets,
                        double s);

// delta_bar ^ (n/m)^{-(1+2 s1)/(1/2 + 2 s1)} n^{-eps3}.
double tilde_delta_l2(double n, int m, double budget, double s1, double eps3);

// Single bump delta~^{1/2} psi_{j_n, k}; k is 1-based.
HardInstance gen_hard_linf(double s, double n, int m,
                           std::span<const double> budgets, long k_choice,
                           int j_max);

// Self-similar signal: at every level one "spine" coefficient of magnitude
// eps L 2^{-j(s+1/2)} at a random position, all other coefficients at
// L 2^{-j(s+1/2)} with random signs; father L with a random sign.
CoeffSeq gen_self_similar(const SelfSimSpec& spec, int j_max, RandomStream& rng);

}  // namespace distest
