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

#include "diffbasis/profile.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <vector>

#include "diffbasis/errors.hpp"
#include "support/oracle.hpp"

namespace diffbasis {
namespace {

GroupedSet ints(std::vector<Element> xs) {
  return GroupedSet(GroupSpec::integers(), std::move(xs));
}

TEST(DiffProfile, SmallIntegerSets) {
  auto p = diff_profile(ints({0, 1, 3}), Domain::interval(1, 3));
  EXPECT_EQ(p.counts, (std::vector<std::uint64_t>{1, 1, 1}));
  EXPECT_EQ(diff_profile(ints({0, 1, 2}), Domain::list({1})).count(1), 2u);
}

TEST(DiffProfile, SingerSetModSeven) {
  const auto spec = GroupSpec::cyclic(7);
  auto p = diff_profile(GroupedSet(spec, {1, 2, 4}), Domain::full(spec));
  EXPECT_EQ(p.count(0), 3u);
  for (Element x = 1; x < 7; ++x) EXPECT_EQ(p.count(x), 1u) << x;
}

TEST(DiffProfile, NegativeTargetsOverIntegers) {
  auto p = diff_profile(ints({0, 1, 3}), Domain::interval(-3, 3));
  EXPECT_EQ(p.count(-3), 1u);
  EXPECT_EQ(p.count(0), 3u);
  EXPECT_EQ(p.count(2), 1u);
}

TEST(DiffProfile, CountOutsideDomainThrows) {
  auto p = diff_profile(ints({0, 1}), Domain::interval(1, 2));
  EXPECT_THROW(p.count(5), InputError);
}

TEST(DiffProfile, RejectsInvalidDomain) {
  EXPECT_THROW(
      diff_profile(GroupedSet(GroupSpec::cyclic(5), {0}), Domain::interval(0, 5)),
      InputError);
  EXPECT_THROW(Domain::full(GroupSpec::integers()), InputError);
}

TEST(SumProfile, SmallIntegerSets) {
  auto p = sum_profile(ints({0, 1}), Domain::interval(0, 2));
  EXPECT_EQ(p.counts, (std::vector<std::uint64_t>{1, 2, 1}));
  EXPECT_EQ(sum_profile(ints({0, 1, 3}), Domain::list({4})).count(4), 2u);
}

TEST(SumProfile, SingerSetIsSidon) {
  const auto spec = GroupSpec::cyclic(7);
  auto p = sum_profile(GroupedSet(spec, {1, 2, 4}), Domain::full(spec));
  std::uint64_t mx = 0;
  for (Element x = 1; x < 7; ++x) mx = std::max(mx, p.count(x));
  EXPECT_EQ(mx, 2u);
}

TEST(IsGDiffBasis, Examples) {
  EXPECT_TRUE(is_g_diff_basis(ints({1, 2, 3, 6, 9, 12}), Domain::interval(1, 5), 1).ok);
  auto fail = is_g_diff_basis(ints({0, 1}), Domain::interval(1, 2), 1);
  EXPECT_FALSE(fail.ok);
  ASSERT_TRUE(fail.witness);
  EXPECT_EQ(*fail.witness, 2);
  EXPECT_EQ(fail.witness_count, 0u);
  EXPECT_TRUE(is_g_diff_basis(ints({0, 1, 2, 3, 4}), Domain::interval(1, 3), 2).ok);
}

TEST(IsGDiffBasis, ReportsSmallestFailure) {
  auto c = is_g_diff_basis(ints({0, 1, 2, 3, 4}), Domain::interval(1, 4), 2);
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(*c.witness, 4);
  EXPECT_EQ(c.witness_count, 1u);
  EXPECT_EQ(c.max_count, 4u);
  EXPECT_EQ(c.min_count, 1u);
}

TEST(IsGDiffBasis, EmptyTargetsThrow) {
  EXPECT_THROW(is_g_diff_basis(ints({0, 1}), Domain::interval(1, 0), 1), InputError);
}

TEST(IsGDiffBasis, StreamsLargeIntervals) {
  // Covers more than one block of targets.
  const std::int64_t n = 3'000'000;
  std::int64_t k = 1;
  while (k * k < n) ++k;
  std::vector<Element> xs;
  for (std::int64_t i = 1; i < k; ++i) xs.push_back(i);
  for (std::int64_t i = 1; i <= k + 1; ++i) xs.push_back(i * k);
  auto a = ints(xs);
  EXPECT_TRUE(is_g_diff_basis(a, Domain::interval(1, n), 1).ok);
  auto c = is_g_diff_basis(a, Domain::interval(1, (k + 1) * k), 1);
  EXPECT_FALSE(c.ok);
}

TEST(IsGBounded, Examples) {
  EXPECT_TRUE(is_g_bounded(ints({1, 2, 5, 7}), 1).ok);
  EXPECT_TRUE(is_g_bounded(ints({1, 2, 3}), 2).ok);
  auto c = is_g_bounded(ints({0, 1, 2}), 1);
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(*c.witness, 1);
  EXPECT_EQ(c.witness_count, 2u);
}

TEST(IsGBounded, CyclicAndVector) {
  EXPECT_TRUE(is_g_bounded(GroupedSet(GroupSpec::cyclic(7), {1, 2, 4}), 1).ok);
  EXPECT_FALSE(is_g_bounded(GroupedSet(GroupSpec::cyclic(8), {0, 2, 4}), 1).ok);
  const auto v = GroupSpec::vector(3, 2);
  EXPECT_FALSE(is_g_bounded(GroupedSet(v, {0, 1, 2}), 1).ok);
}

TEST(IsGBounded, SpreadOutIntegers) {
  EXPECT_TRUE(is_g_bounded(ints({0, 1, std::int64_t{1} << 40}), 1).ok);
  EXPECT_FALSE(is_g_bounded(ints({0, std::int64_t{1} << 40,
                                  std::int64_t{1} << 41}), 1).ok);
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(ints({5, 6, 8})).vec(), (std::vector<Element>{0, 1, 3}));
  EXPECT_EQ(normalize(ints({0, 1, 3})).vec(), (std::vector<Element>{0, 1, 3}));
  EXPECT_EQ(normalize(ints({-2, 0, 4})).vec(), (std::vector<Element>{0, 2, 6}));
  EXPECT_THROW(normalize(ints({})), InputError);
  EXPECT_THROW(normalize(GroupedSet(GroupSpec::cyclic(3), {1})), InputError);
}

// ---------------------------------------------------------------------------
// Properties on random sets, each compared with the double-loop oracle.

TEST(ProfileProperties, IntegerProfilesMatchOracle) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 400; ++t) {
    auto xs = oracle::random_subset(rng, -50, 50, 64);
    auto a = ints(xs);
    auto dp = diff_profile(a, Domain::interval(-101, 101));
    auto sp = sum_profile(a, Domain::interval(-101, 101));
    for (Element x = -101; x <= 101; ++x) {
      ASSERT_EQ(dp.count(x), static_cast<std::uint64_t>(oracle::diff_count(xs, x)));
      ASSERT_EQ(sp.count(x), static_cast<std::uint64_t>(oracle::sum_count(xs, x)));
      ASSERT_EQ(dp.count(x), dp.count(-x));
    }
  }
}

TEST(ProfileProperties, CyclicProfilesMatchOracleAndMass) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<std::int64_t> mod(1, 90);
  for (int t = 0; t < 300; ++t) {
    const std::int64_t m = mod(rng);
    auto xs = oracle::random_subset(rng, 0, m - 1, 64);
    const auto spec = GroupSpec::cyclic(m);
    auto a = GroupedSet(spec, xs);
    auto dp = diff_profile(a, Domain::full(spec));
    auto sp = sum_profile(a, Domain::full(spec));
    std::uint64_t mass = 0;
    for (Element x = 0; x < m; ++x) {
      ASSERT_EQ(dp.count(x), static_cast<std::uint64_t>(oracle::diff_count(xs, x, m)));
      ASSERT_EQ(sp.count(x), static_cast<std::uint64_t>(oracle::sum_count(xs, x, m)));
      ASSERT_EQ(dp.count(x), dp.count(spec.neg(x)));
      mass += dp.count(x);
    }
    ASSERT_EQ(mass, a.size() * a.size());
    ASSERT_EQ(dp.count(0), a.size());
  }
}

TEST(ProfileProperties, VectorProfilesMatchOracle) {
  std::mt19937_64 rng(3);
  const std::vector<std::pair<std::int64_t, int>> groups{{2, 5}, {3, 3}, {5, 2}, {7, 2}};
  for (int t = 0; t < 200; ++t) {
    auto [p, n] = groups[t % groups.size()];
    const auto spec = GroupSpec::vector(p, n);
    auto xs = oracle::random_subset(rng, 0, spec.order() - 1, 40);
    auto a = GroupedSet(spec, xs);
    auto dp = diff_profile(a, Domain::full(spec));
    auto ref = oracle::vec_diff_profile(xs, p, n);
    for (Element x = 0; x < spec.order(); ++x) {
      ASSERT_EQ(dp.count(x), static_cast<std::uint64_t>(ref[x]));
    }
  }
}

TEST(ProfileProperties, TranslationInvariance) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<std::int64_t> shift(-1000, 1000);
  for (int t = 0; t < 300; ++t) {
    auto a = ints(oracle::random_subset(rng, 0, 40, 20));
    auto b = a.translate(shift(rng));
    auto d = Domain::interval(1, 40);
    ASSERT_EQ(diff_profile(a, d).counts, diff_profile(b, d).counts);
    for (std::uint64_t g : {1u, 2u, 3u}) {
      ASSERT_EQ(is_g_bounded(a, g).ok, is_g_bounded(b, g).ok);
      ASSERT_EQ(is_g_diff_basis(a, Domain::interval(1, 10), g).ok,
                is_g_diff_basis(b, Domain::interval(1, 10), g).ok);
    }
  }
  const auto spec = GroupSpec::cyclic(31);
  for (int t = 0; t < 200; ++t) {
    auto a = GroupedSet(spec, oracle::random_subset(rng, 0, 30, 12));
    auto b = a.translate(oracle::mod(shift(rng), 31));
    ASSERT_EQ(diff_profile(a, Domain::nonzero(spec)).counts,
              diff_profile(b, Domain::nonzero(spec)).counts);
  }
}

TEST(ProfileProperties, SidonEquivalence) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 1000; ++t) {
    auto xs = oracle::random_subset(rng, 0, 60, 8);
    auto a = ints(xs);
    auto sp = sum_profile(a, Domain::interval(0, 120));
    std::uint64_t mx = 0;
    for (auto c : sp.counts) mx = std::max(mx, c);
    ASSERT_EQ(is_g_bounded(a, 1).ok, mx <= 2) << ::testing::PrintToString(xs);
    ASSERT_EQ(is_g_bounded(a, 1).ok, oracle::bounded(xs, 1));
  }
}

TEST(ProfileProperties, BoundedMatchesOracle) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 500; ++t) {
    auto xs = oracle::random_subset(rng, 0, 40, 14);
    for (std::uint64_t g : {1u, 2u, 3u}) {
      ASSERT_EQ(is_g_bounded(ints(xs), g).ok,
                oracle::bounded(xs, static_cast<std::int64_t>(g)));
    }
    const std::int64_t m = 41;
    ASSERT_EQ(is_g_bounded(GroupedSet(GroupSpec::cyclic(m), xs), 2).ok,
              oracle::bounded(xs, 2, m));
  }
}

TEST(ProfileProperties, BasisVerdictMatchesOracle) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    auto xs = oracle::random_subset(rng, 0, 12, 9);
    for (std::int64_t g : {1, 2}) {
      for (std::int64_t n : {3, 6, 9}) {
        auto c = is_g_diff_basis(ints(xs), Domain::interval(1, n),
                                 static_cast<std::uint64_t>(g));
        ASSERT_EQ(c.ok, oracle::int_basis(xs, n, g));
        if (!c.ok) {
          Element first = 1;
          while (oracle::diff_count(xs, first) >= g) ++first;
          ASSERT_EQ(*c.witness, first);
        }
      }
    }
  }
}

}  // namespace
}  // namespace diffbasis
