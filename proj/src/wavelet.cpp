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

#include "distest/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace distest {

void BesovSpec::validate() const {
  if (!(s > 0.0) || !(L > 0.0)) {
    throw std::invalid_argument("BesovSpec: s and L must be positive");
  }
}

void SelfSimSpec::validate() const {
  if (!(s > 0.0) || !(L > 0.0)) {
    throw std::invalid_argument("SelfSimSpec: s and L must be positive");
  }
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("SelfSimSpec: eps must lie in (0, 1)");
  }
  if (j0 < 0) throw std::invalid_argument("SelfSimSpec: j0 must be >= 0");
  if (!(rho > 1.0)) throw std::invalid_argument("SelfSimSpec: rho must be > 1");
}

namespace {

double level_mass_sq(const CoeffSeq& f, int j) {
  double acc = 0.0;
  for (double v : f.level(j)) acc += v * v;
  return acc;
}

}  // namespace

double l2_norm_sq(const CoeffSeq& f) {
  double acc = 0.0;
  for (double v : f.values()) acc += v * v;
  return acc;
}

double besov_2inf_norm(const CoeffSeq& f, double s) {
  double sup = f.father() * f.father();
  for (int j = 0; j <= f.j_max(); ++j) {
    sup = std::max(sup, std::exp2(2.0 * j * s) * level_mass_sq(f, j));
  }
  return std::sqrt(sup);
}

double besov_infinf_norm(const CoeffSeq& f, double s) {
  double sup = std::abs(f.father());
  for (int j = 0; j <= f.j_max(); ++j) {
    double level_max = 0.0;
    for (double v : f.level(j)) level_max = std::max(level_max, std::abs(v));
    sup = std::max(sup, std::exp2(j * (s + 0.5)) * level_max);
  }
  return sup;
}

double besov_norm(const CoeffSeq& f, const BesovSpec& spec) {
  return spec.kind == BesovNorm::kB2Inf ? besov_2inf_norm(f, spec.s)
                                        : besov_infinf_norm(f, spec.s);
}

bool in_besov_ball(const CoeffSeq& f, const BesovSpec& spec) {
  return besov_norm(f, spec) <= spec.L * (1.0 + 1e-12);
}

CoeffSeq project_level(const CoeffSeq& f, int l) {
  if (l < 0 || l > f.j_max()) {
    throw std::out_of_range("project_level: level out of range");
  }
  CoeffSeq out(f.j_max());
  if (l == 0) {
    out.father() = f.father();
    return out;
  }
  std::ranges::copy(f.level(l), out.level(l).begin());
  return out;
}

CoeffSeq block(const CoeffSeq& f, int j1, int j2) {
  if (j1 < 0 || j1 > j2 || j2 > f.j_max()) {
    throw std::out_of_range("block: need 0 <= j1 <= j2 <= J_max");
  }
  CoeffSeq out(f.j_max());
  for (int j = j1; j <= j2; ++j) {
    std::ranges::copy(f.level(j), out.level(j).begin());
  }
  return out;
}

std::vector<double> haar_cell_values(const CoeffSeq& f) {
  // Refine level by level: each cell splits into the +/- halves of psi_jk.
  std::vector<double> cur{f.father()};
  std::vector<double> next;
  for (int j = 0; j <= f.j_max(); ++j) {
    const double amp = std::exp2(0.5 * j);
    const auto coeffs = f.level(j);
    next.resize(cur.size() * 2);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      next[2 * i] = cur[i] + amp * coeffs[i];
      next[2 * i + 1] = cur[i] - amp * coeffs[i];
    }
    cur.swap(next);
  }
  return cur;
}

double haar_sup_norm(const CoeffSeq& f) {
  double sup = 0.0;
  for (double v : haar_cell_values(f)) sup = std::max(sup, std::abs(v));
  return sup;
}

double dist_to_b2inf_ball(const CoeffSeq& f, double s2, double L) {
  if (!(s2 > 0.0) || !(L > 0.0)) {
    throw std::invalid_argument("dist_to_b2inf_ball: s2 and L must be positive");
  }
  double acc = 0.0;
  const double father_excess = std::max(0.0, std::abs(f.father()) - L);
  acc += father_excess * father_excess;
  for (int j = 0; j <= f.j_max(); ++j) {
    const double excess =
        std::max(0.0, std::sqrt(level_mass_sq(f, j)) - L * std::exp2(-j * s2));
    acc += excess * excess;
  }
  return std::sqrt(acc);
}

CoeffSeq project_onto_b2inf_ball(const CoeffSeq& f, double s2, double L) {
  CoeffSeq out = f;
  if (std::abs(out.father()) > L) out.father() = std::copysign(L, out.father());
  for (int j = 0; j <= f.j_max(); ++j) {
    const double mass = std::sqrt(level_mass_sq(f, j));
    const double radius = L * std::exp2(-j * s2);
    if (mass > radius) {
      for (double& v : out.level(j)) v *= radius / mass;
    }
  }
  return out;
}

double block_infinf_norm(const CoeffSeq& f, double s, int j1, int j2) {
  double sup = 0.0;
  for (int j = j1; j <= std::min(j2, f.j_max()); ++j) {
    const double w = std::exp2(j * (s + 0.5));
    for (double v : f.level(j)) sup = std::max(sup, w * std::abs(v));
  }
  return sup;
}

SelfSimCheck check_self_similar(const CoeffSeq& f, const SelfSimSpec& spec) {
  spec.validate();
  const int last = static_cast<int>(std::floor(f.j_max() / spec.rho));
  if (last < spec.j0) {
    throw std::invalid_argument(
        "check_self_similar: J_max too small for a single block [j0, rho*j0]");
  }
  SelfSimCheck out;
  out.in_ball = besov_infinf_norm(f, spec.s) <= spec.L * (1.0 + 1e-12);
  const double floor_norm = spec.eps * spec.L;
  for (int j = spec.j0; j <= last; ++j) {
    const int top = static_cast<int>(std::floor(spec.rho * j + 1e-12));
    const double norm = block_infinf_norm(f, spec.s, j, top);
    if (norm < floor_norm * (1.0 - 1e-12)) {
      out.violating_block = j;
      out.violating_norm = norm;
      break;
    }
  }
  out.ok = out.in_ball && !out.violating_block.has_value();
  return out;
}

bool is_self_similar(const CoeffSeq& f, const SelfSimSpec& spec) {
  return check_self_similar(f, spec).ok;
}

}  // namespace distest
