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

#include <limits>
#include <stdexcept>

#include "gtest/gtest.h"

namespace distest {
namespace {

TEST(FlatIndexTest, Examples) {
  EXPECT_EQ(flat_index(0, 1), 2u);
  EXPECT_EQ(flat_index(1, 2), 4u);
  EXPECT_EQ(flat_index(3, 5), 13u);
}

TEST(FlatIndexTest, RejectsOutOfRange) {
  EXPECT_THROW(flat_index(-1, 1), std::out_of_range);
  EXPECT_THROW(flat_index(2, 0), std::out_of_range);
  EXPECT_THROW(flat_index(2, 5), std::out_of_range);
}

TEST(FlatIndexTest, InverseOnEveryIndex) {
  for (std::size_t t = 2; t <= 4096; ++t) {
    const auto [j, k] = level_position(t);
    EXPECT_EQ(flat_index(j, k), t);
  }
  EXPECT_THROW(level_position(1), std::out_of_range);
}

TEST(CoeffSeqTest, ShapeAndCount) {
  const CoeffSeq f(4);
  EXPECT_EQ(f.size(), coefficient_count(4));
  EXPECT_EQ(f.size(), 32u);
  for (int j = 0; j <= 4; ++j) EXPECT_EQ(f.level(j).size(), 1u << j);
}

TEST(CoeffSeqTest, FlatAndLevelViewsAgree) {
  CoeffSeq f(3);
  f.at(2, 3) = 1.5;
  f.father() = -2.0;
  EXPECT_EQ(f.flat(flat_index(2, 3)), 1.5);
  EXPECT_EQ(f.flat(1), -2.0);
  EXPECT_EQ(f.level(2)[2], 1.5);
}

TEST(CoeffSeqTest, FromLevelsValidates) {
  EXPECT_THROW(CoeffSeq::from_levels(0.0, {{1.0}, {1.0}}), std::invalid_argument);
  EXPECT_THROW(CoeffSeq::from_levels(0.0, {{1.0}, {1.0, std::numeric_limits<double>::quiet_NaN()}}),
               std::invalid_argument);
  const CoeffSeq f = CoeffSeq::from_levels(1.0, {{2.0}, {3.0, 4.0}});
  EXPECT_EQ(f.j_max(), 1);
  EXPECT_EQ(f.at(1, 2), 4.0);
}

TEST(CoeffSeqTest, ArithmeticAndShapeChecks) {
  CoeffSeq a = CoeffSeq::from_levels(1.0, {{2.0}});
  const CoeffSeq b = CoeffSeq::from_levels(0.5, {{-1.0}});
  const CoeffSeq c = 2.0 * (a - b);
  EXPECT_EQ(c.father(), 1.0);
  EXPECT_EQ(c.at(0, 1), 6.0);
  EXPECT_THROW(a += CoeffSeq(2), std::invalid_argument);
}

}  // namespace
}  // namespace distest
