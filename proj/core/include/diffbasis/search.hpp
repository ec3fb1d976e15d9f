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

#ifndef DIFFBASIS_SEARCH_HPP_
#define DIFFBASIS_SEARCH_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "diffbasis/group.hpp"

namespace diffbasis {

enum class SearchStatus {
  kOptimal,
  // Optimal among sets inside the declared window [0, W]; the integers
  // themselves were not exhausted.
  kOptimalWithinWindow,
  kBudgetExhausted,
};

std::string to_string(SearchStatus s);

struct SearchOptions {
  // Explored nodes across the whole search.
  std::uint64_t budget = 100'000'000;
  // Workers for the first branching level. Results do not depend on it.
  unsigned threads = 1;
};

struct SearchResult {
  std::string kind;  // "eta", "alpha" or "eta_vs"
  ProblemInstance instance;
  GroupSpec group = GroupSpec::integers();
  // Best verified size; equal to witness.size().
  std::int64_t optimum = 0;
  GroupedSet witness{GroupSpec::integers(), {}};
  SearchStatus status = SearchStatus::kOptimal;
  std::uint64_t nodes = 0;
  std::int64_t window = 0;  // integer eta only
  // Set when a confirmation run with a wider window was requested.
  std::optional<bool> window_stable;
};

// max(2n, span of the normalized grid construction), so the grid set always
// fits and serves as an incumbent.
std::int64_t default_eta_window(std::int64_t n, std::int64_t g);

// Minimum |A| with 0 in A subset [0, window] and r_{A-A}(x) >= g on [1, n].
// Iterative deepening on |A| from eta_lower; the first witness found at the
// optimal size is the lexicographically smallest. Reported as kOptimal when
// the optimum meets eta_lower (no window can do better), otherwise as
// kOptimalWithinWindow. window = 0 selects default_eta_window(n, g).
SearchResult eta_exact(std::int64_t n, std::int64_t g, std::int64_t window = 0,
                       const SearchOptions& opts = {});

// Re-runs eta_exact with window 3n and records whether the optimum moved.
SearchResult eta_exact_confirmed(std::int64_t n, std::int64_t g,
                                 std::int64_t window = 0,
                                 const SearchOptions& opts = {});

// Maximum |A| with A subset [1, n] and r_{A-A}(x) <= g for x != 0. Exact
// values for every shorter interval are computed first and used as
// residual bounds.
SearchResult alpha_exact(std::int64_t n, std::int64_t g,
                         const SearchOptions& opts = {});

inline constexpr std::int64_t kDefaultVectorSearchCap = 256;

// Minimum |A| with 0 in A subset F_p^k and r_{A-A}(x) >= g for x != 0.
SearchResult eta_vs_exact(std::int64_t p, int k, std::int64_t g,
                          const SearchOptions& opts = {},
                          std::int64_t group_cap = kDefaultVectorSearchCap);

enum class OracleKind { kEta, kAlpha, kEtaVs };

struct OracleParams {
  OracleKind kind = OracleKind::kEta;
  std::int64_t n = 1;
  std::int64_t g = 1;
  std::int64_t window = 0;  // eta; 0 selects default_eta_window
  std::int64_t p = 3;       // eta_vs
  int k = 1;                // eta_vs
};

inline constexpr int kOracleUniverseCap = 24;

// Plain subset enumeration, sizes in order, subsets of one size in
// lexicographic order, checked with is_g_diff_basis / is_g_bounded. The
// universe of free elements is capped at 24 (CapacityError beyond).
SearchResult brute_force_oracle(const OracleParams& params);

nlohmann::ordered_json to_json(const SearchResult& result);

}  // namespace diffbasis

#endif  // DIFFBASIS_SEARCH_HPP_
