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

#include <array>
#include <cstdint>

namespace distest {

// Philox4x32-10 counter-based block function (Salmon et al., SC'11).
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter block(Counter ctr, Key key);
};

// What a stream is used for. Distinct roles never share counters.
enum class StreamRole : std::uint8_t {
  kNoise = 1,
  kSplit = 2,
  kSignal = 3,
  kTest = 4,
  kHardInstance = 5,
  kAux = 6,
};

std::uint64_t splitmix64(std::uint64_t x);

// Standard normal quantile, accurate to a few ulps over (0, 1).
double normal_quantile(double p);

// Deterministic random stream keyed by (seed, machine, replicate, role).
//
// The key is derived from the seed; machine, replicate and role live in the
// counter, and the remaining 56 counter bits index blocks within the
// stream. Two streams with different tuples therefore never overlap, and a
// draw depends only on the tuple and its position, not on scheduling.
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t machine,
               std::uint64_t replicate, StreamRole role);

  std::uint64_t next_u64();
  // Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();
  // Standard normal by inversion of the uniform draw.
  double normal();
  // +1 or -1 with equal probability.
  int sign();
  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

 private:
  void refill();

  Philox4x32::Key key_{};
  std::uint32_t machine_ = 0;
  std::uint32_t replicate_ = 0;
  std::uint32_t role_ = 0;
  std::uint64_t block_ = 0;
  std::array<std::uint64_t, 2> buffer_{};
  int buffered_ = 0;
};

RandomStream rng_stream(std::uint64_t seed, std::uint64_t machine,
                        std::uint64_t replicate, StreamRole role);

}  // namespace distest
