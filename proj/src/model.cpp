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

#include "distest/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace distest {

double ModelConfig::noise_sd() const { return std::sqrt(m / n); }

void ModelConfig::validate() const {
  if (!(n >= 4.0) || !std::isfinite(n)) {
    throw std::invalid_argument("ModelConfig: n must be >= 4");
  }
  if (m < 1) throw std::invalid_argument("ModelConfig: m must be >= 1");
  if (m > n) throw std::invalid_argument("ModelConfig: m must not exceed n");
  if (j_max < 0 || j_max > kMaxLevel) {
    throw std::invalid_argument("ModelConfig: J_max out of range");
  }
  if (!(noise_scale >= 0.0)) {
    throw std::invalid_argument("ModelConfig: noise_scale must be >= 0");
  }
}

LocalSample simulate_machine(const CoeffSeq& f0, const ModelConfig& cfg,
                             int machine, std::uint64_t replicate) {
  cfg.validate();
  if (f0.j_max() != cfg.j_max) {
    throw std::invalid_argument("simulate: signal has J_max " +
                                std::to_string(f0.j_max()) + ", config has " +
                                std::to_string(cfg.j_max));
  }
  if (machine < 0 || machine >= cfg.m) {
    throw std::out_of_range("simulate: machine index out of range");
  }
  const double sd = cfg.noise_sd() * cfg.noise_scale;
  LocalSample out{machine, replicate, f0, sd};
  if (sd == 0.0) return out;
  RandomStream rng(cfg.seed, static_cast<std::uint64_t>(machine), replicate,
                   StreamRole::kNoise);
  for (double& v : out.obs.values()) v += sd * rng.normal();
  return out;
}

std::vector<LocalSample> simulate(const CoeffSeq& f0, const ModelConfig& cfg,
                                  std::uint64_t replicate) {
  std::vector<LocalSample> out;
  out.reserve(static_cast<std::size_t>(cfg.m));
  for (int i = 0; i < cfg.m; ++i) {
    out.push_back(simulate_machine(f0, cfg, i, replicate));
  }
  return out;
}

SplitSample split(const LocalSample& sample, RandomStream& rng) {
  SplitSample out{sample.obs, sample.obs, std::sqrt(2.0) * sample.noise_sd};
  auto a = out.half1.values();
  auto b = out.half2.values();
  for (std::size_t t = 0; t < a.size(); ++t) {
    const double z = sample.noise_sd * rng.normal();
    a[t] += z;
    b[t] -= z;
  }
  return out;
}

SplitSample split(const LocalSample& sample, const ModelConfig& cfg) {
  RandomStream rng(cfg.seed, static_cast<std::uint64_t>(sample.machine),
                   sample.replicate, StreamRole::kSplit);
  return split(sample, rng);
}

}  // namespace distest
