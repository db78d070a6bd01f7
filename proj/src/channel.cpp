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

#include "distest/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "distest/numeric.hpp"

namespace distest {

int EncoderConfig::int_bits() const {
  return static_cast<int>(safe_ceil(0.5 * std::log2(n)));
}

int EncoderConfig::frac_bits() const {
  return static_cast<int>(safe_floor(D * std::log2(n)));
}

double EncoderConfig::clip_level() const { return std::sqrt(n); }

int EncoderConfig::max_length() const { return 2 + int_bits() + frac_bits(); }

void EncoderConfig::validate() const {
  if (!(n >= 4.0) || !std::isfinite(n)) {
    throw std::invalid_argument("EncoderConfig: n must be >= 4");
  }
  if (!(D > 0.0)) throw std::invalid_argument("EncoderConfig: D must be > 0");
  if (frac_bits() < 1) {
    throw std::invalid_argument("EncoderConfig: floor(D log2 n) must be >= 1");
  }
  if (max_length() > 64) {
    throw std::invalid_argument("EncoderConfig: messages longer than 64 bits");
  }
}

BitMessage BitMessage::from_string(std::string_view bits) {
  BitMessage msg;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("BitMessage: expected '0' or '1'");
    }
    msg.push_back(c == '1');
  }
  return msg;
}

BitMessage BitMessage::from_word(std::uint64_t word, int length) {
  if (length < 0 || length > 64) {
    throw std::invalid_argument("BitMessage: length must be in 0..64");
  }
  if (length < 64 && (word >> length) != 0) {
    throw std::invalid_argument("BitMessage: word has bits beyond length");
  }
  BitMessage msg;
  msg.word_ = word;
  msg.length_ = length;
  return msg;
}

bool BitMessage::bit(int i) const {
  if (i < 0 || i >= length_) throw std::out_of_range("BitMessage::bit");
  return (word_ >> (length_ - 1 - i)) & 1u;
}

std::string BitMessage::to_string() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(length_));
  for (int i = 0; i < length_; ++i) out.push_back(bit(i) ? '1' : '0');
  return out;
}

void BitMessage::push_back(bool b) {
  if (length_ == 64) throw std::length_error("BitMessage: 64-bit limit");
  word_ = (word_ << 1) | (b ? 1u : 0u);
  ++length_;
}

BitMessage encode_value(double x, const EncoderConfig& cfg) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("encode_value: non-finite input");
  }
  const double magnitude = std::abs(x);
  if (magnitude >= cfg.clip_level()) return BitMessage::from_word(0, 1);

  const int ib = cfg.int_bits();
  const int fb = cfg.frac_bits();
  // |x| < sqrt(n) <= 2^ib, so q fits in ib + fb bits.
  const auto q = static_cast<std::uint64_t>(std::floor(std::ldexp(magnitude, fb)));
  const std::uint64_t sign = std::signbit(x) ? 0u : 1u;
  const int digits = ib + fb;
  const std::uint64_t word = (std::uint64_t{1} << (digits + 1)) |
                             (sign << digits) | q;
  return BitMessage::from_word(word, digits + 2);
}

double decode_value(const BitMessage& msg, const EncoderConfig& cfg) {
  if (msg.length() == 0) throw std::invalid_argument("decode_value: empty message");
  if (!msg.bit(0)) {
    if (msg.length() != 1) {
      throw std::invalid_argument("decode_value: clip message must be 1 bit");
    }
    return 0.0;
  }
  const int digits = cfg.int_bits() + cfg.frac_bits();
  if (msg.length() != digits + 2) {
    throw std::invalid_argument("decode_value: expected " +
                                std::to_string(digits + 2) + " bits, got " +
                                std::to_string(msg.length()));
  }
  const std::uint64_t mask = (std::uint64_t{1} << digits) - 1;
  const double magnitude =
      std::ldexp(static_cast<double>(msg.word() & mask), -cfg.frac_bits());
  return msg.bit(1) ? magnitude : -magnitude;
}

BudgetLedger::BudgetLedger(std::size_t machines, std::optional<std::uint64_t> cap)
    : totals_(machines, 0), cap_(cap) {}

void BudgetLedger::record(std::size_t machine, const BitMessage& msg) {
  record_bits(machine, static_cast<std::uint64_t>(msg.length()));
}

void BudgetLedger::record_bits(std::size_t machine, std::uint64_t bits) {
  if (machine >= totals_.size()) {
    throw std::out_of_range("BudgetLedger: machine " + std::to_string(machine) +
                            " out of range");
  }
  const std::uint64_t next = totals_[machine] + bits;
  if (cap_ && next > *cap_) {
    throw BudgetExceeded("machine " + std::to_string(machine) + " would send " +
                         std::to_string(next) + " bits, cap is " +
                         std::to_string(*cap_));
  }
  totals_[machine] = next;
}

std::uint64_t BudgetLedger::bits(std::size_t machine) const {
  if (machine >= totals_.size()) throw std::out_of_range("BudgetLedger::bits");
  return totals_[machine];
}

std::uint64_t BudgetLedger::max_bits() const {
  return totals_.empty() ? 0 : *std::ranges::max_element(totals_);
}

double BudgetLedger::mean_bits() const {
  if (totals_.empty()) return 0.0;
  const double sum = std::accumulate(totals_.begin(), totals_.end(), 0.0);
  return sum / static_cast<double>(totals_.size());
}

}  // namespace distest
