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

#include <cstdint>
#include <vector>

#include "distest/coeff_seq.hpp"
#include "distest/random.hpp"

namespace distest {

struct ModelConfig {
  double n = 1024.0;
  int m = 1;
  int j_max = 6;
  std::uint64_t seed = 1;
  // Multiplies the model noise. Tests set it to 0 to observe f0 exactly.
  double noise_scale = 1.0;

  // sqrt(m / n), before noise_scale.
  double noise_sd() const;
  void validate() const;
};

// X^{(i)}_{jk} = f0_{jk} + sqrt(m/n) Z^{(i)}_{jk} for one machine.
struct LocalSample {
  int machine = 0;
  std::uint64_t replicate = 0;
  CoeffSeq obs;
  // Effective sd, i.e. sqrt(m/n) times the config's noise_scale.
  double noise_sd = 0.0;
};

// obs + Zt and obs - Zt with Zt ~ N(0, m/n): two independent copies with noise
// sd sqrt(2m/n).
struct SplitSample {
  CoeffSeq half1;
  CoeffSeq half2;
  double noise_sd = 0.0;
};

LocalSample simulate_machine(const CoeffSeq& f0, const ModelConfig& cfg,
                             int machine, std::uint64_t replicate);

// All m machines, in machine order.
std::vector<LocalSample> simulate(const CoeffSeq& f0, const ModelConfig& cfg,
                                  std::uint64_t replicate);

SplitSample split(const LocalSample& sample, RandomStream& rng);
// Uses the machine's kSplit stream under cfg.seed.
SplitSample split(const LocalSample& sample, const ModelConfig& cfg);

}  // namespace distest
