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

#include "diffbasis/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "diffbasis/constructions.hpp"
#include "diffbasis/errors.hpp"
#include "diffbasis/primes.hpp"
#include "diffbasis/profile.hpp"

namespace diffbasis {

std::int64_t eta_lower(std::int64_t n, std::int64_t g) {
  ProblemInstance::make(n, g);
  auto b = static_cast<std::int64_t>(
      ceil_sqrt(2 * static_cast<std::uint64_t>(g) * static_cast<std::uint64_t>(n)));
  return std::max<std::int64_t>(2, b);
}

std::int64_t eta_upper_grid(std::int64_t n, std::int64_t g) {
  ProblemInstance::make(n, g);
  return 2 * static_cast<std::int64_t>(ceil_sqrt(static_cast<std::uint64_t>(n))) * g;
}

std::pair<std::int64_t, std::int64_t> eta_sandwich(std::int64_t n,
                                                   std::int64_t g,
                                                   std::int64_t eta1) {
  ProblemInstance::make(n, g);
  if (eta1 < 2) throw InputError("eta_1(n) is at least 2");
  return {eta1, g * eta1};
}

namespace {

__extension__ typedef __int128 i128;

// k < sqrt(g n (1 + 1/l)) + (l+1)/2 + g/l, decided in integers: with
// d = 2lk - l(l+1) - 2g the inequality reads d < 2 sqrt(l(l+1) g n).
bool below_rhs(std::int64_t k, std::int64_t l, std::int64_t n, std::int64_t g) {
  const i128 d = i128{2} * l * k - i128{l} * (l + 1) - i128{2} * g;
  if (d < 0) return true;
  return d * d < i128{4} * l * (l + 1) * g * n;
}

}  // namespace

std::int64_t alpha_upper(std::int64_t n, std::int64_t g) {
  ProblemInstance::make(n, g);
  const double root = std::sqrt(static_cast<double>(g) * static_cast<double>(n));
  std::int64_t best = n;
  // Beyond l = n the (l+1)/2 term alone exceeds n.
  for (std::int64_t l = 1; l <= n; ++l) {
    const double ld = static_cast<double>(l);
    const double rhs = root * std::sqrt(1.0 + 1.0 / ld) + (ld + 1.0) / 2.0 +
                       static_cast<double>(g) / ld;
    // Largest integer strictly below rhs: a floating estimate, then exact
    // correction.
    auto k = static_cast<std::int64_t>(std::ceil(rhs)) - 1;
    while (k > 0 && !below_rhs(k, l, n, g)) --k;
    while (below_rhs(k + 1, l, n, g)) ++k;
    // The inequality is applied to a hypothetical set of size k + 1.
    const std::int64_t excluded = k + 1;
    const bool short_enough = 2 * l <= excluded - 1;
    const std::int64_t s = excluded * l - l * (l + 1) / 2;
    if (short_enough && s > g) best = std::min(best, k);
  }
  return best;
}

AlphaWitness alpha_lower_construct(std::int64_t n, std::int64_t g) {
  ProblemInstance::make(n, g);
  const auto qmax = static_cast<std::int64_t>(
      isqrt(static_cast<std::uint64_t>(g) * static_cast<std::uint64_t>(n) + 1));
  for (std::int64_t q = qmax; q >= 2; --q) {
    if ((q - 1) % g != 0 || !is_prime(static_cast<std::uint64_t>(q))) continue;
    const QuotientSet qs = quotient_g_bounded(q, g);
    std::vector<Element> lifted;
    lifted.reserve(qs.set.size());
    for (Element a : qs.set) lifted.push_back(a == 0 ? qs.modulus : a);
    AlphaWitness out{GroupedSet(GroupSpec::integers(), std::move(lifted)),
                     false, q, qs.modulus};
    if (!is_g_bounded(out.witness, static_cast<std::uint64_t>(g)).ok) {
      throw InternalError("lifted quotient set is not g-bounded");
    }
    return out;
  }
  std::vector<Element> run;
  for (std::int64_t x = 1; x <= std::min(n, g + 1); ++x) run.push_back(x);
  return {GroupedSet(GroupSpec::integers(), std::move(run)), true, 0, 0};
}

BoundReport bound_report(std::int64_t n, std::int64_t g) {
  BoundReport r{ProblemInstance::make(n, g), {}};
  r.entries.push_back({"eta_lower", "eta", eta_lower(n, g), BoundKind::kLower,
                       "pair count: C(|A|,2) >= g n"});
  r.entries.push_back({"eta_upper_grid", "eta", eta_upper_grid(n, g),
                       BoundKind::kUpper,
                       "g translates of the 2ceil(sqrt n) grid basis"});
  const AlphaWitness aw = alpha_lower_construct(n, g);
  r.entries.push_back({"alpha_lower_construct", "alpha", aw.size(),
                       BoundKind::kLower,
                       aw.fallback ? "interval {1..g+1}"
                                   : "Bose-Chowla set modulo order-g subgroup"});
  r.entries.push_back({"alpha_upper", "alpha", alpha_upper(n, g),
                       BoundKind::kUpper, "sum of l smallest gap classes"});

  for (const auto& lo : r.entries) {
    if (lo.kind != BoundKind::kLower) continue;
    for (const auto& hi : r.entries) {
      if (hi.kind == BoundKind::kUpper && hi.quantity == lo.quantity &&
          lo.value > hi.value) {
        throw InternalError(lo.name + " exceeds " + hi.name);
      }
    }
  }
  return r;
}

nlohmann::ordered_json to_json(const BoundReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.instance.n;
  j["g"] = report.instance.g;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json row;
    row["name"] = e.name;
    row["quantity"] = e.quantity;
    row["kind"] = e.kind == BoundKind::kLower ? "lower" : "upper";
    row["value"] = e.value;
    row["provenance"] = e.provenance;
    arr.push_back(std::move(row));
  }
  j["entries"] = std::move(arr);
  return j;
}

}  // namespace diffbasis
