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

#ifndef DIFFBASIS_BOUNDS_HPP_
#define DIFFBASIS_BOUNDS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "diffbasis/group.hpp"

namespace diffbasis {

// ceil(sqrt(2 g n)): C(|A|, 2) pairs must cover n targets g times each.
// Never below 2, the size of the smallest set with a nonzero difference.
std::int64_t eta_lower(std::int64_t n, std::int64_t g);

// 2 ceil(sqrt(n)) g, the size of g translates of the grid basis.
std::int64_t eta_upper_grid(std::int64_t n, std::int64_t g);

// (eta_1, g eta_1) for a certified eta_1(n).
std::pair<std::int64_t, std::int64_t> eta_sandwich(std::int64_t n,
                                                   std::int64_t g,
                                                   std::int64_t eta1);

// Upper bound on alpha_g(n) from summing the l smallest gaps: the best
// admissible integer below sqrt(gn) sqrt(1+1/l) + (l+1)/2 + g/l over l >= 1.
// An l is admissible only when l <= (k-1)/2 and kl - C(l+1, 2) > g hold for
// the size k the bound would exclude. Falls back to n.
std::int64_t alpha_upper(std::int64_t n, std::int64_t g);

struct AlphaWitness {
  GroupedSet witness;   // integer set inside [1, n]
  bool fallback = false;  // true when no admissible prime existed
  std::int64_t q = 0;        // prime used, 0 on fallback
  std::int64_t modulus = 0;  // (q^2-1)/g, 0 on fallback
  std::int64_t size() const { return static_cast<std::int64_t>(witness.size()); }
};

// Largest prime q = 1 (mod g) with (q^2-1)/g <= n, quotient construction,
// residues lifted to [1, N]. Without such a prime: {1, ..., min(n, g+1)}.
AlphaWitness alpha_lower_construct(std::int64_t n, std::int64_t g);

enum class BoundKind { kLower, kUpper };

struct BoundEntry {
  std::string name;
  std::string quantity;  // "eta" or "alpha"
  std::int64_t value = 0;
  BoundKind kind = BoundKind::kLower;
  std::string provenance;
};

struct BoundReport {
  ProblemInstance instance;
  std::vector<BoundEntry> entries;
};

// All closed-form bounds and constructive sizes for (n, g). Throws
// InternalError if a lower entry exceeds an upper entry of the same quantity.
BoundReport bound_report(std::int64_t n, std::int64_t g);

nlohmann::ordered_json to_json(const BoundReport& report);

}  // namespace diffbasis

#endif  // DIFFBASIS_BOUNDS_HPP_
