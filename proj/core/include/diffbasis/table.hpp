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

#ifndef DIFFBASIS_TABLE_HPP_
#define DIFFBASIS_TABLE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "diffbasis/constructions.hpp"
#include "diffbasis/group.hpp"
#include "diffbasis/primes.hpp"
#include "diffbasis/search.hpp"

namespace diffbasis {

enum class Quantity { kEta, kAlpha };
enum class TableMethod { kGrid, kProduct, kQuotient, kExact };

std::string to_string(Quantity q);
std::string to_string(TableMethod m);
Quantity parse_quantity(const std::string& s);
TableMethod parse_table_method(const std::string& s);

// Largest n accepted by the exact method.
inline constexpr std::int64_t kTableExactEtaMax = 40;
inline constexpr std::int64_t kTableExactAlphaMax = 80;

struct ProductOptions {
  std::int64_t v = 6;
  // Prime search interval is [sqrt(n/v), (1 + stretch) sqrt(n/v)], widened
  // by doubling the stretch until a prime turns up.
  double stretch = 0.05;
  std::uint64_t sieve_cap = kDefaultSieveCap;
  std::uint64_t field_cap = kDefaultSingerFieldCap;
  SearchOptions search;
};

struct ProductPipeline {
  std::int64_t q = 0;
  std::int64_t v = 0;
  GroupedSet basis{GroupSpec::integers(), {}};  // optimal g-basis of [v]
  SingerSet singer;
  GroupedSet set{GroupSpec::integers(), {}};   // covers [1, (q^2+q+1) v]
};

// Singer set times an exact small basis, sized so that it covers [n].
ProductPipeline product_pipeline(std::int64_t n, std::int64_t g,
                                 const ProductOptions& opts = {});

struct TableOptions {
  ProductOptions product;
  SearchOptions search;
};

struct TableRow {
  std::int64_t n = 0;
  std::int64_t g = 0;
  TableMethod method = TableMethod::kGrid;
  std::int64_t lower = 0;
  std::int64_t size = 0;
  std::optional<std::int64_t> exact;
  // size / sqrt(n) for eta, size / sqrt(g n) for alpha.
  double ratio = 0.0;
  bool exhausted = false;
};

// One row per n, in input order. Each constructive set is verified before
// its size is reported.
std::vector<TableRow> ratio_table(Quantity quantity,
                                  const std::vector<std::int64_t>& n_values,
                                  std::int64_t g, TableMethod method,
                                  const TableOptions& opts = {});

// Header n,g,method,lower,size,exact,ratio; ratios with six decimals, an
// empty exact cell when none was computed.
std::string table_to_csv(const std::vector<TableRow>& rows);

}  // namespace diffbasis

#endif  // DIFFBASIS_TABLE_HPP_
