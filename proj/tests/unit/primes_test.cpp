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

#include "diffbasis/primes.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "diffbasis/errors.hpp"
#include "support/oracle.hpp"

namespace diffbasis {
namespace {

TEST(Primes, IsPrimeMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) {
    ASSERT_EQ(is_prime(n), oracle::is_prime(static_cast<std::int64_t>(n))) << n;
  }
  EXPECT_TRUE(is_prime(18446744073709551557ull));
  EXPECT_FALSE(is_prime(18446744073709551559ull));
  EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to 2, 3, 5, 7
  EXPECT_TRUE(is_prime(4294967291ull));
}

TEST(Primes, PrimePower) {
  auto pp = prime_power(9);
  ASSERT_TRUE(pp);
  EXPECT_EQ(pp->prime, 3u);
  EXPECT_EQ(pp->exponent, 2);
  EXPECT_EQ(prime_power(16)->exponent, 4);
  EXPECT_EQ(prime_power(13)->exponent, 1);
  EXPECT_FALSE(prime_power(12));
  EXPECT_FALSE(prime_power(1));
  EXPECT_FALSE(prime_power(0));
}

TEST(Primes, Factorize) {
  auto f = factorize(360);
  EXPECT_EQ(f, (std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_TRUE(factorize(1).empty());
  EXPECT_EQ(factorize(4294967291ull).size(), 1u);
}

TEST(Primes, SegmentedSieveMatchesTrialDivision) {
  auto ps = primes_between(1'000'000, 1'300'000);
  std::vector<std::uint64_t> ref;
  for (std::uint64_t n = 1'000'000; n <= 1'300'000; ++n) {
    if (is_prime(n)) ref.push_back(n);
  }
  EXPECT_EQ(ps, ref);
  EXPECT_EQ(primes_between(0, 20), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19}));
  EXPECT_THROW(primes_between(0, 100, 50), CapacityError);
}

TEST(PrimeInInterval, Examples) {
  EXPECT_EQ(prime_in_interval(10, 12), 11u);
  EXPECT_EQ(prime_in_interval(std::sqrt(21.0), std::sqrt(21.0) * 1.1), 5u);
  EXPECT_FALSE(prime_in_interval(24, 28));
  EXPECT_THROW(prime_in_interval(5, 4), InputError);
  EXPECT_THROW(prime_in_interval(1, 1e12, 1u << 20), CapacityError);
  EXPECT_EQ(prime_in_interval(2, 2), 2u);
  EXPECT_FALSE(prime_in_interval(0, 1.5));
}

TEST(PrimeInInterval, RandomIntervals) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> lo(0, 100000);
  std::uniform_real_distribution<double> width(0, 80);
  for (int t = 0; t < 2000; ++t) {
    const double a = lo(rng);
    const double b = a + width(rng);
    auto q = prime_in_interval(a, b);
    std::optional<std::uint64_t> ref;
    for (auto n = static_cast<std::int64_t>(std::ceil(a));
         n <= static_cast<std::int64_t>(std::floor(b)); ++n) {
      if (oracle::is_prime(n)) {
        ref = static_cast<std::uint64_t>(n);
        break;
      }
    }
    ASSERT_EQ(q, ref) << a << " " << b;
  }
}

TEST(NextPrimeCong, Examples) {
  EXPECT_EQ(next_prime_cong(4, 2), 5u);
  EXPECT_EQ(next_prime_cong(3, 8), 13u);
  EXPECT_EQ(next_prime_cong(1, 14), 17u);
  EXPECT_EQ(next_prime_cong(1, 0), 2u);
  EXPECT_EQ(next_prime_cong(10, 12), 31u);
  EXPECT_THROW(next_prime_cong(0, 5), InputError);
  EXPECT_THROW(next_prime_cong(1, 1000, 100), CapacityError);
}

TEST(Sqrt, ExactRoots) {
  for (std::uint64_t n = 0; n < 5000; ++n) {
    const std::uint64_t r = isqrt(n);
    ASSERT_LE(r * r, n);
    ASSERT_GT((r + 1) * (r + 1), n);
    const std::uint64_t c = ceil_sqrt(n);
    ASSERT_GE(c * c, n);
    if (c > 0) {
      ASSERT_LT((c - 1) * (c - 1), n);
    }
  }
  EXPECT_EQ(isqrt(~0ull), 4294967295ull);
  EXPECT_EQ(ceil_sqrt(~0ull), 4294967296ull);
}

}  // namespace
}  // namespace diffbasis
