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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace distest {

// Deepest resolution level a CoeffSeq may hold (2^31 coefficients).
inline constexpr int kMaxLevel = 30;

// Flat index of wavelet (j, k): t = 2^j + k, with k in 1..2^j. The father
// coefficient owns t = 1, so level j occupies t in (2^j, 2^{j+1}].
std::size_t flat_index(int j, long k);

// Inverse of flat_index for t >= 2. Returns (j, k).
std::pair<int, long> level_position(std::size_t t);

// Number of coefficients in a sequence of depth j_max (father included).
constexpr std::size_t coefficient_count(int j_max) {
  return std::size_t{1} << (j_max + 1);
}

// Wavelet coefficient table of a signal or an observation: one father
// (scaling) coefficient and levels j = 0..J_max with 2^j entries each.
//
// Storage is flat in the order of flat_index, so the first N coefficients of
// the signal are values()[0..N).
class CoeffSeq {
 public:
  CoeffSeq() : CoeffSeq(0) {}
  explicit CoeffSeq(int j_max);

  // Throws std::invalid_argument on ragged levels or non-finite values.
  static CoeffSeq from_levels(double father,
                              const std::vector<std::vector<double>>& levels);
  static CoeffSeq from_flat(int j_max, std::vector<double> values);

  int j_max() const { return j_max_; }
  std::size_t size() const { return values_.size(); }

  double father() const { return values_[0]; }
  double& father() { return values_[0]; }

  // k is 1-based, as in the wavelet notation.
  double at(int j, long k) const;
  double& at(int j, long k);

  std::span<const double> level(int j) const;
  std::span<double> level(int j);

  // 1-based flat access; t = 1 is the father.
  double flat(std::size_t t) const { return values_[t - 1]; }
  double& flat(std::size_t t) { return values_[t - 1]; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  bool all_finite() const;

  CoeffSeq& operator+=(const CoeffSeq& other);
  CoeffSeq& operator-=(const CoeffSeq& other);
  CoeffSeq& operator*=(double scale);

  friend CoeffSeq operator+(CoeffSeq a, const CoeffSeq& b) { return a += b; }
  friend CoeffSeq operator-(CoeffSeq a, const CoeffSeq& b) { return a -= b; }
  friend CoeffSeq operator*(CoeffSeq a, double c) { return a *= c; }
  friend CoeffSeq operator*(double c, CoeffSeq a) { return a *= c; }

  bool operator==(const CoeffSeq&) const = default;

 private:
  void check_level(int j) const;
  void check_same_shape(const CoeffSeq& other) const;

  int j_max_ = 0;
  std::vector<double> values_;
};

}  // namespace distest
