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

#include "diffbasis/constructions.hpp"

#include <string>

#include "diffbasis/errors.hpp"
#include "diffbasis/primes.hpp"
#include "diffbasis/profile.hpp"

namespace diffbasis {
namespace {

PrimePower require_prime_power(std::int64_t q) {
  auto pp = q >= 2 ? prime_power(static_cast<std::uint64_t>(q)) : std::nullopt;
  if (!pp) {
    throw InputError(std::to_string(q) + " is not a prime power");
  }
  return *pp;
}

// F_{q^d} as a degree-d extension of F_q (itself one level over F_p unless
// q is prime).
FieldCtx extension_of(std::int64_t q, int d, const FieldOptions& opts) {
  PrimePower pp = require_prime_power(q);
  std::vector<int> tower;
  if (pp.exponent > 1) tower.push_back(pp.exponent);
  tower.push_back(d);
  return build_field(pp.prime, tower, opts);
}

void require_basis(const GroupedSet& s, const Domain& targets, std::int64_t g,
                   const std::string& what) {
  auto check = is_g_diff_basis(s, targets, static_cast<std::uint64_t>(g));
  if (!check.ok) {
    throw InputError(what + " is not a " + std::to_string(g) +
                     "-difference basis (fails at " +
                     std::to_string(*check.witness) + ")");
  }
}

void verify_basis(const GroupedSet& s, const Domain& targets, std::int64_t g,
                  const std::string& what) {
  auto check = is_g_diff_basis(s, targets, static_cast<std::uint64_t>(g));
  if (!check.ok) {
    throw InternalError(what + " failed verification at " +
                        std::to_string(*check.witness));
  }
}

void check_cap(std::int64_t order, std::int64_t cap) {
  if (order > cap) {
    throw CapacityError("group order " + std::to_string(order) +
                        " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

GroupedSet lemma2_basis(std::int64_t n) {
  if (n < 1) throw InputError("n must be >= 1");
  const auto k = static_cast<std::int64_t>(ceil_sqrt(static_cast<std::uint64_t>(n)));
  std::vector<Element> xs;
  xs.reserve(static_cast<std::size_t>(2 * k));
  for (std::int64_t i = 1; i < k; ++i) xs.push_back(i);
  for (std::int64_t j = 1; j <= k + 1; ++j) xs.push_back(j * k);
  GroupedSet out(GroupSpec::integers(), std::move(xs));
  verify_basis(out, Domain::interval(1, n), 1, "grid basis");
  return out;
}

GroupedSet translate_union(const GroupedSet& s, std::int64_t g) {
  if (g < 1) throw InputError("g must be >= 1");
  if (s.empty()) throw InputError("translate_union needs a nonempty set");
  if (s.spec().kind() != GroupKind::kIntegers) {
    throw InputError("translate_union applies to integer sets");
  }
  std::vector<Element> xs;
  xs.reserve(s.size() * static_cast<std::size_t>(g));
  for (std::int64_t t = 0; t < g; ++t) {
    for (Element b : s) xs.push_back(b + t);
  }
  GroupedSet out(s.spec(), std::move(xs));
  if (out.size() > s.size() * static_cast<std::size_t>(g)) {
    throw InternalError("translate union larger than g|S|");
  }
  return out;
}

SingerSet singer_set(std::int64_t q, std::uint64_t field_cap) {
  require_prime_power(q);
  FieldOptions opts;
  opts.order_cap = field_cap;
  opts.build_logs = false;
  const FieldCtx ctx = extension_of(q, 3, opts);

  const std::int64_t m = q * q + q + 1;
  // Coordinates over F_q are code = c0 + c1 q + c2 q^2; the plane c2 = 0 is
  // exactly the codes below q^2.
  const auto plane = static_cast<std::uint64_t>(q * q);
  std::vector<Element> xs;
  FieldElem cur = ctx.one();
  for (std::int64_t i = 0; i < m; ++i) {
    if (cur.code < plane) xs.push_back(i);
    cur = ctx.mul(cur, ctx.primitive());
  }
  SingerSet out{q, m, GroupedSet(GroupSpec::cyclic(m), std::move(xs))};
  if (out.set.size() != static_cast<std::size_t>(q + 1)) {
    throw InternalError("Singer set has wrong size");
  }
  auto check = is_g_diff_basis(out.set, Domain::nonzero(out.set.spec()), 1);
  if (!check.ok || check.max_count != 1) {
    throw InternalError("Singer set is not a perfect difference set");
  }
  return out;
}

GroupedSet product_basis(const SingerSet& singer, const GroupedSet& basis,
                         std::int64_t v, std::int64_t g) {
  if (v < 1 || g < 1) throw InputError("v and g must be >= 1");
  if (basis.spec().kind() != GroupKind::kIntegers) {
    throw InputError("product basis needs an integer basis");
  }
  if (singer.set.spec() != GroupSpec::cyclic(singer.m) ||
      singer.set.size() != static_cast<std::size_t>(singer.q + 1)) {
    throw InputError("malformed Singer set");
  }
  require_basis(basis, Domain::interval(1, v), g, "basis");

  const std::int64_t m = singer.m;
  std::vector<Element> xs;
  xs.reserve(singer.set.size() * basis.size());
  for (Element a : singer.set) {
    for (Element b : basis) xs.push_back(a + m * b);
  }
  GroupedSet out(GroupSpec::integers(), std::move(xs));
  if (out.size() != singer.set.size() * basis.size()) {
    throw InternalError("product basis elements collided");
  }
  verify_basis(out, Domain::interval(1, m * v), g, "product basis");
  return out;
}

GroupedSet bose_chowla(std::int64_t q, std::uint64_t field_cap) {
  require_prime_power(q);
  FieldOptions opts;
  opts.order_cap = field_cap;
  opts.build_logs = false;
  const FieldCtx ctx = extension_of(q, 2, opts);

  const std::int64_t modulus = q * q - 1;
  const FieldElem theta = ctx.primitive();
  std::vector<Element> xs;
  FieldElem cur = ctx.one();
  for (std::int64_t a = 0; a < modulus; ++a) {
    // F_q sits inside F_{q^2} as the codes below q.
    if (ctx.sub(cur, theta).code < static_cast<std::uint64_t>(q)) {
      xs.push_back(a);
    }
    cur = ctx.mul(cur, theta);
  }
  GroupedSet out(GroupSpec::cyclic(modulus), std::move(xs));
  if (out.size() != static_cast<std::size_t>(q)) {
    throw InternalError("Bose-Chowla set has wrong size");
  }
  if (!is_g_bounded(out, 1).ok) {
    throw InternalError("Bose-Chowla set is not Sidon");
  }
  return out;
}

QuotientSet quotient_g_bounded(std::int64_t q, std::int64_t g) {
  if (g < 1) throw InputError("g must be >= 1");
  require_prime_power(q);
  if ((q - 1) % g != 0) {
    throw InputError("quotient construction needs q = 1 (mod g)");
  }
  const GroupedSet b = bose_chowla(q);
  const std::int64_t modulus = (q * q - 1) / g;
  std::vector<Element> xs;
  for (Element a : b) xs.push_back(a % modulus);
  QuotientSet out{q, g, modulus,
                  GroupedSet(GroupSpec::cyclic(modulus), std::move(xs))};
  if (out.set.size() != static_cast<std::size_t>(q)) {
    throw InternalError("quotient map is not injective on the Sidon set");
  }
  if (!is_g_bounded(out.set, static_cast<std::uint64_t>(g)).ok) {
    throw InternalError("quotient set exceeds g representations");
  }
  return out;
}

GroupedSet parabola_basis(const FieldCtx& qctx, const GroupedSet& basis,
                          std::int64_t group_cap) {
  const auto p = static_cast<std::int64_t>(qctx.characteristic());
  if (p == 2) throw InputError("parabola construction needs odd q");
  const auto q = static_cast<std::int64_t>(qctx.order());
  const int k = qctx.degree();
  if (basis.spec() != GroupSpec::vector(p, k)) {
    throw InputError("basis must live in " +
                     GroupSpec::vector(p, k).describe());
  }
  check_cap(q * q, group_cap);
  require_basis(basis, Domain::nonzero(basis.spec()), 1, "basis");

  std::vector<Element> xs;
  xs.reserve(static_cast<std::size_t>(q) + basis.size());
  for (std::int64_t x = 0; x < q; ++x) {
    FieldElem e{static_cast<std::uint64_t>(x)};
    xs.push_back(x + static_cast<std::int64_t>(qctx.mul(e, e).code) * q);
  }
  for (Element b : basis) xs.push_back(b * q);
  GroupedSet out(GroupSpec::vector(p, 2 * k), std::move(xs));
  verify_basis(out, Domain::nonzero(out.spec()), 1, "parabola basis");
  return out;
}

GroupedSet product_basis_vs(const GroupedSet& a, std::int64_t g1,
                            const GroupedSet& b, std::int64_t g2,
                            std::int64_t group_cap) {
  if (g1 < 1 || g2 < 1) throw InputError("multiplicities must be >= 1");
  const GroupSpec trivial = GroupSpec::cyclic(1);
  if (b.spec() == trivial || a.spec() == trivial) {
    const GroupedSet& other = b.spec() == trivial ? a : b;
    const std::int64_t g = b.spec() == trivial ? g1 : g2;
    if (other.spec() != trivial) {
      require_basis(other, Domain::nonzero(other.spec()), g, "factor");
    }
    return other;
  }
  if (a.spec().kind() != GroupKind::kVector ||
      b.spec().kind() != GroupKind::kVector) {
    throw InputError("product_basis_vs needs vector groups");
  }
  const std::int64_t p = a.spec().prime();
  if (b.spec().prime() != p) {
    throw InputError("factors are over different primes");
  }
  const std::int64_t order_a = a.spec().order();
  if (b.spec().order() > group_cap / order_a) {
    throw CapacityError("product group exceeds cap");
  }
  require_basis(a, Domain::nonzero(a.spec()), g1, "first factor");
  require_basis(b, Domain::nonzero(b.spec()), g2, "second factor");

  std::vector<Element> xs;
  xs.reserve(a.size() * b.size());
  for (Element y : b) {
    for (Element x : a) xs.push_back(x + y * order_a);
  }
  GroupedSet out(GroupSpec::vector(p, a.spec().dimension() +
                                           b.spec().dimension()),
                 std::move(xs));
  verify_basis(out, Domain::nonzero(out.spec()), g1 * g2, "product basis");
  return out;
}

GroupedSet vs_basis(std::int64_t p, int n, std::int64_t group_cap) {
  if (n < 1) throw InputError("dimension must be >= 1");
  if (p == 2) {
    throw InputError("vector-space basis construction needs odd p");
  }
  const GroupSpec spec = GroupSpec::vector(p, n);
  check_cap(spec.order(), group_cap);

  if (n == 1) {
    std::vector<Element> xs;
    for (Element x : lemma2_basis(p)) xs.push_back(x % p);
    GroupedSet out(spec, std::move(xs));
    verify_basis(out, Domain::nonzero(spec), 1, "F_p basis");
    return out;
  }
  if (n % 2 == 0) {
    const int k = n / 2;
    FieldOptions opts;
    opts.build_logs = false;
    const FieldCtx field = build_field(static_cast<std::uint64_t>(p), {k}, opts);
    return parabola_basis(field, vs_basis(p, k, group_cap), group_cap);
  }
  return product_basis_vs(vs_basis(p, 1, group_cap), 1,
                          vs_basis(p, n - 1, group_cap), 1, group_cap);
}

GroupedSet vs_g_basis(std::int64_t p, int n, std::int64_t g,
                      std::int64_t group_cap) {
  if (g < 1) throw InputError("g must be >= 1");
  const GroupedSet base = vs_basis(p, n, group_cap);
  const GroupSpec& spec = base.spec();
  if (g > spec.order()) throw InputError("g exceeds the group order");
  std::vector<Element> xs;
  xs.reserve(base.size() * static_cast<std::size_t>(g));
  for (std::int64_t t = 0; t < g; ++t) {
    for (Element a : base) xs.push_back(spec.add(a, t));
  }
  GroupedSet out(spec, std::move(xs));
  verify_basis(out, Domain::nonzero(spec), g, "translated basis");
  return out;
}

}  // namespace diffbasis
