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

#include <cmath>
#include <cstdio>
#include <sstream>

#include "diffbasis/bounds.hpp"
#include "diffbasis/errors.hpp"
#include "diffbasis/primes.hpp"
#include "diffbasis/profile.hpp"

namespace diffbasis {

std::string to_string(Quantity q) {
  return q == Quantity::kEta ? "eta" : "alpha";
}

std::string to_string(TableMethod m) {
  switch (m) {
    case TableMethod::kGrid:
      return "grid";
    case TableMethod::kProduct:
      return "product";
    case TableMethod::kQuotient:
      return "quotient";
    case TableMethod::kExact:
      return "exact";
  }
  return "unknown";
}

Quantity parse_quantity(const std::string& s) {
  if (s == "eta") return Quantity::kEta;
  if (s == "alpha") return Quantity::kAlpha;
  throw InputError("unknown quantity '" + s + "'");
}

TableMethod parse_table_method(const std::string& s) {
  if (s == "grid") return TableMethod::kGrid;
  if (s == "product") return TableMethod::kProduct;
  if (s == "quotient") return TableMethod::kQuotient;
  if (s == "exact") return TableMethod::kExact;
  throw InputError("unknown method '" + s + "'");
}

ProductPipeline product_pipeline(std::int64_t n, std::int64_t g,
                                 const ProductOptions& opts) {
  ProblemInstance::make(n, g);
  if (opts.v < 1) throw InputError("v must be >= 1");
  if (!(opts.stretch > 0.0)) throw InputError("stretch must be positive");

  ProductPipeline out;
  out.v = opts.v;
  SearchResult small = eta_exact(opts.v, g, 0, opts.search);
  if (small.status == SearchStatus::kBudgetExhausted) {
    throw CapacityError("search budget too small for the base basis");
  }
  out.basis = small.witness;

  const double base = std::sqrt(static_cast<double>(n) /
                                static_cast<double>(opts.v));
  double stretch = opts.stretch;
  std::optional<std::uint64_t> q;
  for (;;) {
    q = prime_in_interval(base, base * (1.0 + stretch), opts.sieve_cap);
    if (q) break;
    stretch *= 2.0;
  }
  out.q = static_cast<std::int64_t>(*q);
  out.singer = singer_set(out.q, opts.field_cap);
  out.set = product_basis(out.singer, out.basis, opts.v, g);
  if (out.singer.m * opts.v < n) {
    throw InternalError("product basis does not reach n");
  }
  return out;
}

namespace {

double eta_ratio(std::int64_t size, std::int64_t n) {
  return static_cast<double>(size) / std::sqrt(static_cast<double>(n));
}

double alpha_ratio(std::int64_t size, std::int64_t n, std::int64_t g) {
  return static_cast<double>(size) /
         std::sqrt(static_cast<double>(g) * static_cast<double>(n));
}

TableRow eta_row(std::int64_t n, std::int64_t g, TableMethod method,
                 const TableOptions& opts) {
  TableRow row;
  row.n = n;
  row.g = g;
  row.method = method;
  row.lower = eta_lower(n, g);
  const Domain targets = Domain::interval(1, n);
  switch (method) {
    case TableMethod::kGrid: {
      GroupedSet s = translate_union(lemma2_basis(n), g);
      if (!is_g_diff_basis(s, targets, static_cast<std::uint64_t>(g)).ok) {
        throw InternalError("grid basis failed verification");
      }
      row.size = static_cast<std::int64_t>(s.size());
      break;
    }
    case TableMethod::kProduct: {
      ProductPipeline p = product_pipeline(n, g, opts.product);
      row.size = static_cast<std::int64_t>(p.set.size());
      break;
    }
    case TableMethod::kExact: {
      if (n > kTableExactEtaMax) {
        throw InputError("exact eta rows are limited to n <= " +
                         std::to_string(kTableExactEtaMax));
      }
      SearchResult r = eta_exact(n, g, 0, opts.search);
      row.size = r.optimum;
      row.exhausted = r.status == SearchStatus::kBudgetExhausted;
      if (!row.exhausted) row.exact = r.optimum;
      break;
    }
    case TableMethod::kQuotient:
      throw InputError("method quotient applies to alpha only");
  }
  row.ratio = eta_ratio(row.size, n);
  return row;
}

TableRow alpha_row(std::int64_t n, std::int64_t g, TableMethod method,
                   const TableOptions& opts) {
  TableRow row;
  row.n = n;
  row.g = g;
  row.method = method;
  AlphaWitness construct = alpha_lower_construct(n, g);
  row.lower = construct.size();
  switch (method) {
    case TableMethod::kQuotient:
      row.size = construct.size();
      break;
    case TableMethod::kExact: {
      if (n > kTableExactAlphaMax) {
        throw InputError("exact alpha rows are limited to n <= " +
                         std::to_string(kTableExactAlphaMax));
      }
      SearchResult r = alpha_exact(n, g, opts.search);
      row.size = r.optimum;
      row.exhausted = r.status == SearchStatus::kBudgetExhausted;
      if (!row.exhausted) row.exact = r.optimum;
      break;
    }
    case TableMethod::kGrid:
    case TableMethod::kProduct:
      throw InputError("method " + to_string(method) + " applies to eta only");
  }
  row.ratio = alpha_ratio(row.size, n, g);
  return row;
}

}  // namespace

std::vector<TableRow> ratio_table(Quantity quantity,
                                  const std::vector<std::int64_t>& n_values,
                                  std::int64_t g, TableMethod method,
                                  const TableOptions& opts) {
  if (n_values.empty()) throw InputError("no n values given");
  for (std::int64_t n : n_values) ProblemInstance::make(n, g);
  std::vector<TableRow> rows;
  rows.reserve(n_values.size());
  for (std::int64_t n : n_values) {
    rows.push_back(quantity == Quantity::kEta ? eta_row(n, g, method, opts)
                                              : alpha_row(n, g, method, opts));
  }
  return rows;
}

std::string table_to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  out << "n,g,method,lower,size,exact,ratio\n";
  for (const TableRow& r : rows) {
    char ratio[64];
    std::snprintf(ratio, sizeof ratio, "%.6f", r.ratio);
    out << r.n << ',' << r.g << ',' << to_string(r.method) << ',' << r.lower
        << ',' << r.size << ',';
    if (r.exact) out << *r.exact;
    out << ',' << ratio << '\n';
  }
  return out.str();
}

}  // namespace diffbasis
