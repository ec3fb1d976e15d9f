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

#include "diffbasis/table.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "diffbasis/errors.hpp"
#include "support/oracle.hpp"

namespace diffbasis {
namespace {

TEST(RatioTable, GridRow) {
  auto rows = ratio_table(Quantity::kEta, {10000}, 1, TableMethod::kGrid);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].size, 200);
  EXPECT_EQ(rows[0].lower, 142);
  EXPECT_DOUBLE_EQ(rows[0].ratio, 2.0);
  EXPECT_FALSE(rows[0].exact);
}

TEST(RatioTable, GridRatioWithinTranslateBound) {
  for (std::int64_t g : {1, 2, 3}) {
    std::vector<std::int64_t> ns;
    for (std::int64_t n = 2; n <= 3000; n += 37) ns.push_back(n);
    for (const auto& r : ratio_table(Quantity::kEta, ns, g, TableMethod::kGrid)) {
      const double rn = std::sqrt(static_cast<double>(r.n));
      const double formula = 2.0 * std::ceil(rn) * static_cast<double>(g) / rn;
      ASSERT_LE(r.ratio, formula + 1e-12);
      ASSERT_LE(formula, 2.0 * g * (1.0 + 1.0 / rn) + 1e-12);
      ASSERT_GT(formula, 2.0 * g - 1e-12);
    }
  }
}

TEST(RatioTable, ProductRowMillion) {
  auto rows = ratio_table(Quantity::kEta, {1000000}, 1, TableMethod::kProduct);
  EXPECT_EQ(rows[0].size, 1640);  // (409 + 1) * 4
  EXPECT_NEAR(rows[0].ratio, 1.64, 1e-9);
}

TEST(RatioTable, ProductRatiosDecrease) {
  auto rows = ratio_table(Quantity::kEta, {10000, 100000, 1000000}, 1,
                          TableMethod::kProduct);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].n, 10000);
  EXPECT_EQ(rows[2].n, 1000000);
  EXPECT_GT(rows[0].ratio, rows[1].ratio);
  EXPECT_GT(rows[1].ratio, rows[2].ratio);
}

TEST(RatioTable, QuotientRow) {
  auto rows = ratio_table(Quantity::kAlpha, {12}, 2, TableMethod::kQuotient);
  EXPECT_EQ(rows[0].size, 5);
  EXPECT_NEAR(rows[0].ratio, 5.0 / std::sqrt(24.0), 1e-12);
}

TEST(RatioTable, ExactRows) {
  auto eta = ratio_table(Quantity::kEta, {6, 3}, 1, TableMethod::kExact);
  EXPECT_EQ(eta[0].n, 6);
  EXPECT_EQ(eta[0].exact, 4);
  EXPECT_EQ(eta[1].exact, 3);
  auto alpha = ratio_table(Quantity::kAlpha, {7}, 1, TableMethod::kExact);
  EXPECT_EQ(alpha[0].exact, 4);
}

TEST(RatioTable, Mismatches) {
  EXPECT_THROW(ratio_table(Quantity::kAlpha, {10}, 1, TableMethod::kGrid), InputError);
  EXPECT_THROW(ratio_table(Quantity::kAlpha, {10}, 1, TableMethod::kProduct), InputError);
  EXPECT_THROW(ratio_table(Quantity::kEta, {10}, 1, TableMethod::kQuotient), InputError);
  EXPECT_THROW(ratio_table(Quantity::kEta, {1000}, 1, TableMethod::kExact), InputError);
  EXPECT_THROW(ratio_table(Quantity::kEta, {}, 1, TableMethod::kGrid), InputError);
  EXPECT_THROW(ratio_table(Quantity::kEta, {0}, 1, TableMethod::kGrid), InputError);
  EXPECT_THROW(parse_table_method("best"), InputError);
  EXPECT_THROW(parse_quantity("beta"), InputError);
}

TEST(RatioTable, Csv) {
  auto rows = ratio_table(Quantity::kEta, {6, 10000}, 1, TableMethod::kGrid);
  rows.push_back(ratio_table(Quantity::kEta, {6}, 1, TableMethod::kExact)[0]);
  EXPECT_EQ(table_to_csv(rows),
            "n,g,method,lower,size,exact,ratio\n"
            "6,1,grid,4,6,,2.449490\n"
            "10000,1,grid,142,200,,2.000000\n"
            "6,1,exact,4,4,4,1.632993\n");
}

TEST(ProductPipeline, CoversTargetAndRecordsParameters) {
  for (std::int64_t n : {21, 100, 5000}) {
    for (std::int64_t g : {1, 2}) {
      ProductOptions o;
      o.v = 3;
      auto p = product_pipeline(n, g, o);
      ASSERT_GE(p.singer.m * 3, n);
      ASSERT_EQ(p.set.size(), static_cast<std::size_t>(p.q + 1) * p.basis.size());
      if (n <= 100) {
        ASSERT_TRUE(oracle::int_basis(p.set.vec(), p.singer.m * 3, g));
      }
    }
  }
  ProductOptions bad;
  bad.v = 0;
  EXPECT_THROW(product_pipeline(100, 1, bad), InputError);
}

TEST(ProductPipeline, WidensWhenNoPrimeInInterval) {
  // sqrt(n/v) = 24.5 and [24.5, 25.7] holds no prime.
  ProductOptions o;
  o.v = 1;
  o.stretch = 0.05;
  auto p = product_pipeline(600, 1, o);
  EXPECT_EQ(p.q, 29);
}

}  // namespace
}  // namespace diffbasis
