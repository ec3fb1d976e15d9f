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

#include <algorithm>
#include <cmath>
#include <string>

#include "diffbasis/errors.hpp"

namespace diffbasis {
namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

constexpr std::uint64_t kSegment = std::uint64_t{1} << 18;

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

// Calls visit(p) for each prime in [lo, hi] in increasing order until visit
// returns true.
template <typename Visit>
bool sieve_segments(std::uint64_t lo, std::uint64_t hi, Visit&& visit) {
  if (hi < 2 || lo > hi) return false;
  lo = std::max<std::uint64_t>(lo, 2);
  const auto base = small_primes(isqrt(hi));
  std::vector<bool> composite;
  for (std::uint64_t seg = lo; seg <= hi;) {
    std::uint64_t end = std::min(hi, seg + kSegment - 1);
    composite.assign(end - seg + 1, false);
    for (std::uint64_t p : base) {
      if (p * p > end) break;
      std::uint64_t start = std::max(p * p, (seg + p - 1) / p * p);
      for (std::uint64_t j = start; j <= end; j += p) composite[j - seg] = true;
    }
    for (std::uint64_t x = seg; x <= end; ++x) {
      if (!composite[x - seg] && visit(x)) return true;
    }
    if (end == hi) break;
    seg = end + 1;
  }
  return false;
}

}  // namespace

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::uint64_t ceil_sqrt(std::uint64_t n) {
  std::uint64_t r = isqrt(n);
  return r * r == n ? r : r + 1;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<PrimePower> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f[0].first, f[0].second};
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi,
                                          std::uint64_t cap) {
  if (hi > cap) {
    throw CapacityError("sieve limit " + std::to_string(hi) +
                        " exceeds cap " + std::to_string(cap));
  }
  std::vector<std::uint64_t> out;
  sieve_segments(lo, hi, [&](std::uint64_t p) {
    out.push_back(p);
    return false;
  });
  return out;
}

std::optional<std::uint64_t> prime_in_interval(double lo, double hi,
                                               std::uint64_t cap) {
  if (!(lo <= hi)) throw InputError("prime_in_interval needs lo <= hi");
  if (hi > static_cast<double>(cap)) {
    throw CapacityError("interval upper end exceeds sieve cap");
  }
  if (hi < 2) return std::nullopt;
  auto a = static_cast<std::uint64_t>(std::ceil(std::max(lo, 0.0)));
  auto b = static_cast<std::uint64_t>(std::floor(hi));
  std::optional<std::uint64_t> found;
  sieve_segments(a, b, [&](std::uint64_t p) {
    found = p;
    return true;
  });
  return found;
}

std::uint64_t next_prime_cong(std::uint64_t g, std::uint64_t min,
                              std::uint64_t cap) {
  if (g == 0) throw InputError("modulus g must be positive");
  std::optional<std::uint64_t> found;
  for (std::uint64_t lo = min; lo <= cap;) {
    std::uint64_t hi = std::min(cap, lo + (std::uint64_t{1} << 20));
    if (sieve_segments(lo, hi, [&](std::uint64_t p) {
          if (p % g == 1 % g) {
            found = p;
            return true;
          }
          return false;
        })) {
      return *found;
    }
    if (hi == cap) break;
    lo = hi + 1;
  }
  throw CapacityError("no prime = 1 mod " + std::to_string(g) +
                      " below the sieve cap");
}

}  // namespace diffbasis
