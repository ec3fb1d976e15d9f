// Copyright 2026 The diffbasis Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "diffbasis/group.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "diffbasis/errors.hpp"
#include "support/oracle.hpp"

namespace diffbasis {
namespace {

TEST(GroupSpec, FactoriesValidateParameters) {
  EXPECT_THROW(GroupSpec::cyclic(0), InputError);
  EXPECT_THROW(GroupSpec::vector(4, 2), InputError);
  EXPECT_THROW(GroupSpec::vector(3, 0), InputError);
  EXPECT_NO_THROW(GroupSpec::cyclic(1));
  EXPECT_EQ(GroupSpec::vector(3, 2).order(), 9);
  EXPECT_EQ(GroupSpec::cyclic(13).order(), 13);
  EXPECT_THROW(GroupSpec::integers().order(), InputError);
  EXPECT_THROW(GroupSpec::vector(2, 61), Error);
}

TEST(GroupSpec, Describe) {
  EXPECT_EQ(GroupSpec::integers().describe(), "Z");
  EXPECT_EQ(GroupSpec::cyclic(7).describe(), "Z/7");
  EXPECT_EQ(GroupSpec::vector(5, 3).describe(), "F_5^3");
}

TEST(GroupSpec, ElementValidity) {
  const auto c = GroupSpec::cyclic(7);
  EXPECT_TRUE(c.valid(0));
  EXPECT_TRUE(c.valid(6));
  EXPECT_FALSE(c.valid(7));
  EXPECT_FALSE(c.valid(-1));
  EXPECT_THROW(c.check(9), InputError);
  const auto v = GroupSpec::vector(3, 2);
  EXPECT_TRUE(v.valid(8));
  EXPECT_FALSE(v.valid(9));
  EXPECT_TRUE(GroupSpec::integers().valid(-123456789));
  EXPECT_FALSE(GroupSpec::integers().valid(kMaxIntegerMagnitude + 1));
}

TEST(GroupSpec, CyclicArithmetic) {
  const auto c = GroupSpec::cyclic(7);
  EXPECT_EQ(c.add(5, 4), 2);
  EXPECT_EQ(c.sub(1, 4), 4);
  EXPECT_EQ(c.neg(0), 0);
  EXPECT_EQ(c.neg(3), 4);
}

TEST(GroupSpec, VectorArithmeticMatchesDigitwiseOracle) {
  std::mt19937_64 rng(11);
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int n : {1, 2, 3, 4}) {
      const auto v = GroupSpec::vector(p, n);
      std::uniform_int_distribution<std::int64_t> pick(0, v.order() - 1);
      for (int t = 0; t < 200; ++t) {
        const std::int64_t a = pick(rng);
        const std::int64_t b = pick(rng);
        ASSERT_EQ(v.sub(a, b), oracle::vec_sub(a, b, p, n));
        ASSERT_EQ(v.add(v.sub(a, b), b), a);
        ASSERT_EQ(v.add(a, v.neg(a)), 0);
        ASSERT_EQ(v.digits(a), oracle::digits(a, p, n));
        const auto d = v.digits(a);
        ASSERT_EQ(v.from_digits(d), a);
      }
    }
  }
}

TEST(GroupSpec, FromDigitsRejectsBadInput) {
  const auto v = GroupSpec::vector(3, 2);
  std::vector<std::int64_t> too_short{1};
  std::vector<std::int64_t> bad_digit{1, 3};
  EXPECT_THROW(v.from_digits(too_short), InputError);
  EXPECT_THROW(v.from_digits(bad_digit), InputError);
}

TEST(GroupedSet, SortsAndMergesDuplicates) {
  GroupedSet s(GroupSpec::integers(), {5, -1, 3, 5});
  EXPECT_EQ(s.vec(), (std::vector<Element>{-1, 3, 5}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(4));
}

TEST(GroupedSet, DistinctRejectsDuplicates) {
  EXPECT_THROW(GroupedSet::distinct(GroupSpec::integers(), {1, 1}), InputError);
  EXPECT_NO_THROW(GroupedSet::distinct(GroupSpec::integers(), {1, 2}));
}

TEST(GroupedSet, RejectsInvalidElements) {
  EXPECT_THROW(GroupedSet(GroupSpec::cyclic(5), {1, 5}), InputError);
  EXPECT_THROW(GroupedSet(GroupSpec::vector(3, 1), {3}), InputError);
}

TEST(GroupedSet, VectorOrderIsNumericCodeOrder) {
  const auto v = GroupSpec::vector(3, 2);
  GroupedSet s(v, {v.from_digits(std::vector<std::int64_t>{0, 1}),
                   v.from_digits(std::vector<std::int64_t>{2, 0}),
                   v.from_digits(std::vector<std::int64_t>{1, 0})});
  EXPECT_EQ(s.vec(), (std::vector<Element>{1, 2, 3}));
}

TEST(GroupedSet, TranslateWrapsInFiniteGroups) {
  GroupedSet s(GroupSpec::cyclic(7), {1, 2, 4});
  EXPECT_EQ(s.translate(3).vec(), (std::vector<Element>{0, 4, 5}));
  GroupedSet z(GroupSpec::integers(), {0, 1, 3});
  EXPECT_EQ(z.translate(-2).vec(), (std::vector<Element>{-2, -1, 1}));
}

TEST(ProblemInstance, RequiresPositiveParameters) {
  EXPECT_THROW(ProblemInstance::make(0, 1), InputError);
  EXPECT_THROW(ProblemInstance::make(1, 0), InputError);
  const auto i = ProblemInstance::make(5, 2);
  EXPECT_EQ(i.n, 5);
  EXPECT_EQ(i.g, 2);
}

TEST(LexLess, ComparesSequences) {
  std::vector<Element> a{0, 1, 4, 6};
  std::vector<Element> b{0, 2, 3, 6};
  std::vector<Element> prefix{0, 1};
  EXPECT_TRUE(lex_less(a, b));
  EXPECT_FALSE(lex_less(b, a));
  EXPECT_FALSE(lex_less(a, a));
  EXPECT_TRUE(lex_less(prefix, a));
}

}  // namespace
}  // namespace diffbasis
