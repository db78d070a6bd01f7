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
#include <vector>

#include "distest/coeff_seq.hpp"

namespace distest {

enum class BesovNorm { kB2Inf, kBInfInf };

// Besov ball B^s_{2,inf}(L) or B^s_{inf,inf}(L).
struct BesovSpec {
  double s = 1.0;
  double L = 1.0;
  BesovNorm kind = BesovNorm::kB2Inf;

  void validate() const;
};

// Self-similar class: every block of levels [j, rho*j], j >= j0, carries
// B^s_{inf,inf} norm at least eps * L.
struct SelfSimSpec {
  double s = 1.0;
  double L = 1.0;
  double eps = 0.5;
  int j0 = 2;
  double rho = 2.0;

  void validate() const;
};

// Parseval: squared L2 norm of the Haar expansion.
double l2_norm_sq(const CoeffSeq& f);

// sqrt(sup_j 2^{2js} sum_k f_jk^2). The father slot counts as its own level
// with weight 1.
double besov_2inf_norm(const CoeffSeq& f, double s);

// sup_{j,k} 2^{j(s+1/2)} |f_jk|, father included with weight 1.
double besov_infinf_norm(const CoeffSeq& f, double s);

double besov_norm(const CoeffSeq& f, const BesovSpec& spec);

// Closed-ball membership with a 1e-12 relative slack for rounding.
bool in_besov_ball(const CoeffSeq& f, const BesovSpec& spec);

// Keeps level l only; l = 0 keeps the father coefficient only.
CoeffSeq project_level(const CoeffSeq& f, int l);

// Keeps mother levels j1..j2 (father dropped).
CoeffSeq block(const CoeffSeq& f, int j1, int j2);

// Values of the Haar expansion on the 2^{J_max+1} dyadic cells of [0, 1),
// left to right.
std::vector<double> haar_cell_values(const CoeffSeq& f);

// Exact sup norm of the Haar expansion.
double haar_sup_norm(const CoeffSeq& f);

// L2 distance from f to the ball B^{s2}_{2,inf}(L). The ball constrains each
// level's Euclidean mass independently, so the metric projection shrinks
// each level radially onto its own radius L 2^{-j s2}.
double dist_to_b2inf_ball(const CoeffSeq& f, double s2, double L);

// The projection itself.
CoeffSeq project_onto_b2inf_ball(const CoeffSeq& f, double s2, double L);

struct SelfSimCheck {
  bool ok = false;
  bool in_ball = false;
  // First block start j whose block norm falls below eps * L.
  std::optional<int> violating_block;
  double violating_norm = 0.0;
};

// B^s_{inf,inf} norm of the block f_[j1, j2].
double block_infinf_norm(const CoeffSeq& f, double s, int j1, int j2);

// Checks blocks j0 <= j <= floor(J_max / rho). Throws if no block fits.
SelfSimCheck check_self_similar(const CoeffSeq& f, const SelfSimSpec& spec);
bool is_self_similar(const CoeffSeq& f, const SelfSimSpec& spec);

}  // namespace distest
