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

#include "distest/coeff_seq.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace distest {

std::size_t flat_index(int j, long k) {
  if (j < 0 || j > kMaxLevel) {
    throw std::out_of_range("flat_index: level " + std::to_string(j) +
                            " out of range");
  }
  const long width = 1L << j;
  if (k < 1 || k > width) {
    throw std::out_of_range("flat_index: position " + std::to_string(k) +
                            " out of range for level " + std::to_string(j));
  }
  return static_cast<std::size_t>(width + k);
}

std::pair<int, long> level_position(std::size_t t) {
  if (t < 2) {
    throw std::out_of_range("level_position: t = 1 is the father coefficient");
  }
  // Level j holds t in (2^j, 2^{j+1}], i.e. t - 1 in [2^j, 2^{j+1}).
  const int j = std::bit_width(t - 1) - 1;
  if (j > kMaxLevel) throw std::out_of_range("level_position: t too large");
  return {j, static_cast<long>(t - (std::size_t{1} << j))};
}

CoeffSeq::CoeffSeq(int j_max) : j_max_(j_max) {
  if (j_max < 0 || j_max > kMaxLevel) {
    throw std::invalid_argument("CoeffSeq: J_max " + std::to_string(j_max) +
                                " out of range");
  }
  values_.assign(coefficient_count(j_max), 0.0);
}

CoeffSeq CoeffSeq::from_levels(double father,
                               const std::vector<std::vector<double>>& levels) {
  if (levels.empty()) {
    throw std::invalid_argument("CoeffSeq: at least one level is required");
  }
  CoeffSeq f(static_cast<int>(levels.size()) - 1);
  f.father() = father;
  for (int j = 0; j <= f.j_max(); ++j) {
    const auto& src = levels[static_cast<std::size_t>(j)];
    if (src.size() != (std::size_t{1} << j)) {
      throw std::invalid_argument("CoeffSeq: level " + std::to_string(j) +
                                  " must hold " +
                                  std::to_string(std::size_t{1} << j) +
                                  " entries, got " + std::to_string(src.size()));
    }
    std::copy(src.begin(), src.end(), f.level(j).begin());
  }
  if (!f.all_finite()) {
    throw std::invalid_argument("CoeffSeq: non-finite coefficient");
  }
  return f;
}

CoeffSeq CoeffSeq::from_flat(int j_max, std::vector<double> values) {
  CoeffSeq f(j_max);
  if (values.size() != f.size()) {
    throw std::invalid_argument("CoeffSeq: flat size mismatch");
  }
  f.values_ = std::move(values);
  if (!f.all_finite()) {
    throw std::invalid_argument("CoeffSeq: non-finite coefficient");
  }
  return f;
}

void CoeffSeq::check_level(int j) const {
  if (j < 0 || j > j_max_) {
    throw std::out_of_range("CoeffSeq: level " + std::to_string(j) +
                            " outside 0.." + std::to_string(j_max_));
  }
}

void CoeffSeq::check_same_shape(const CoeffSeq& other) const {
  if (other.j_max_ != j_max_) {
    throw std::invalid_argument("CoeffSeq: J_max mismatch (" +
                                std::to_string(j_max_) + " vs " +
                                std::to_string(other.j_max_) + ")");
  }
}

double CoeffSeq::at(int j, long k) const {
  check_level(j);
  return values_[flat_index(j, k) - 1];
}

double& CoeffSeq::at(int j, long k) {
  check_level(j);
  return values_[flat_index(j, k) - 1];
}

std::span<const double> CoeffSeq::level(int j) const {
  check_level(j);
  const std::size_t width = std::size_t{1} << j;
  return std::span<const double>(values_).subspan(width, width);
}

std::span<double> CoeffSeq::level(int j) {
  check_level(j);
  const std::size_t width = std::size_t{1} << j;
  return std::span<double>(values_).subspan(width, width);
}

bool CoeffSeq::all_finite() const {
  for (double v : values_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

CoeffSeq& CoeffSeq::operator+=(const CoeffSeq& other) {
  check_same_shape(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

CoeffSeq& CoeffSeq::operator-=(const CoeffSeq& other) {
  check_same_shape(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

CoeffSeq& CoeffSeq::operator*=(double scale) {
  for (double& v : values_) v *= scale;
  return *this;
}

}  // namespace distest
