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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace distest {

// Finite-precision transmission of one real number.
//
// Wire format, MSB first:
//   [1][sign][integer part: int_bits][fraction: frac_bits]   if |x| < sqrt(n)
//   [0]                                                       otherwise
// with int_bits = ceil(log2(n) / 2) and frac_bits = floor(D log2(n)). The
// sign bit is 1 for non-negative values; the magnitude is truncated toward
// zero at 2^{-frac_bits}.
struct EncoderConfig {
  double n = 16.0;
  double D = 0.5;

  int int_bits() const;
  int frac_bits() const;
  double clip_level() const;
  // Longest possible message, header included.
  int max_length() const;
  // Bits the payload digits take, header excluded.
  int digit_bits() const { return int_bits() + frac_bits(); }

  void validate() const;
};

class BitMessage {
 public:
  BitMessage() = default;
  // Parses a string of '0'/'1' characters.
  static BitMessage from_string(std::string_view bits);
  static BitMessage from_word(std::uint64_t word, int length);

  int length() const { return length_; }
  // i = 0 is the first bit on the wire.
  bool bit(int i) const;
  std::uint64_t word() const { return word_; }
  std::string to_string() const;

  void push_back(bool b);

  bool operator==(const BitMessage&) const = default;

 private:
  std::uint64_t word_ = 0;
  int length_ = 0;
};

BitMessage encode_value(double x, const EncoderConfig& cfg);
double decode_value(const BitMessage& msg, const EncoderConfig& cfg);

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-machine cumulative count of transmitted bits, optionally hard-capped.
// Distinct machine slots may be updated concurrently.
class BudgetLedger {
 public:
  BudgetLedger() = default;
  explicit BudgetLedger(std::size_t machines,
                        std::optional<std::uint64_t> cap = std::nullopt);

  // Throws BudgetExceeded (leaving the slot untouched) if the cap would be
  // passed.
  void record(std::size_t machine, const BitMessage& msg);
  void record_bits(std::size_t machine, std::uint64_t bits);

  std::size_t machines() const { return totals_.size(); }
  std::uint64_t bits(std::size_t machine) const;
  std::span<const std::uint64_t> totals() const { return totals_; }
  std::optional<std::uint64_t> cap() const { return cap_; }

  std::uint64_t max_bits() const;
  double mean_bits() const;

 private:
  std::vector<std::uint64_t> totals_;
  std::optional<std::uint64_t> cap_;
};

}  // namespace distest
