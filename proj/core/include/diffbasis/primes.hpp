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

#ifndef DIFFBASIS_PRIMES_HPP_
#define DIFFBASIS_PRIMES_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace diffbasis {

inline constexpr std::uint64_t kDefaultSieveCap = std::uint64_t{1} << 32;

// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  int exponent;
};

// q = p^j with j >= 1, or nullopt.
std::optional<PrimePower> prime_power(std::uint64_t q);

// Prime factorization by trial division, smallest prime first.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);

// Primes in [lo, hi] by a segmented sieve of Eratosthenes.
std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi,
                                          std::uint64_t cap = kDefaultSieveCap);

// Smallest prime p with lo <= p <= hi, or nullopt if there is none.
// Throws InputError if lo > hi and CapacityError if hi exceeds the cap.
std::optional<std::uint64_t> prime_in_interval(
    double lo, double hi, std::uint64_t cap = kDefaultSieveCap);

// Smallest prime q >= min with q = 1 (mod g).
std::uint64_t next_prime_cong(std::uint64_t g, std::uint64_t min,
                              std::uint64_t cap = kDefaultSieveCap);

// floor(sqrt(n)) and ceil(sqrt(n)), exact for all 64-bit n.
std::uint64_t isqrt(std::uint64_t n);
std::uint64_t ceil_sqrt(std::uint64_t n);

}  // namespace diffbasis

#endif  // DIFFBASIS_PRIMES_HPP_
