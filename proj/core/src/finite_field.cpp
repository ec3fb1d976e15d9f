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

#include "diffbasis/finite_field.hpp"

#include <array>
#include <limits>
#include <string>

#include "diffbasis/errors.hpp"
#include "diffbasis/primes.hpp"

namespace diffbasis {
namespace {

// Degree of any level over its ground is below this, since p^d <= 2^64.
constexpr int kMaxLevelDegree = 64;

}  // namespace

std::uint64_t FieldCtx::level_order(std::size_t level) const {
  if (level >= levels_.size()) throw InputError("no such tower level");
  return levels_[level].order;
}

const std::vector<std::uint64_t>& FieldCtx::ext_poly(std::size_t level) const {
  if (level == 0 || level >= levels_.size()) {
    throw InputError("extension polynomials exist for levels 1.." +
                     std::to_string(levels_.size() - 1));
  }
  return levels_[level].poly;
}

FieldElem FieldCtx::from_code(std::uint64_t code) const {
  if (code >= order()) {
    throw InputError("field code " + std::to_string(code) +
                     " out of range for order " + std::to_string(order()));
  }
  return {code};
}

std::vector<FieldElem> FieldCtx::coefficients(FieldElem e) const {
  from_code(e.code);
  const std::size_t top = levels_.size() - 1;
  if (top == 0) return {e};
  const std::uint64_t base = levels_[top - 1].order;
  std::vector<FieldElem> out(static_cast<std::size_t>(levels_[top].degree));
  std::uint64_t c = e.code;
  for (auto& x : out) {
    x.code = c % base;
    c /= base;
  }
  return out;
}

FieldElem FieldCtx::from_coefficients(std::span<const FieldElem> coeffs) const {
  const std::size_t top = levels_.size() - 1;
  const std::size_t d = top == 0 ? 1 : static_cast<std::size_t>(levels_[top].degree);
  const std::uint64_t base = top == 0 ? order() : levels_[top - 1].order;
  if (coeffs.size() != d) throw InputError("wrong number of coefficients");
  std::uint64_t code = 0;
  for (std::size_t i = d; i-- > 0;) {
    if (coeffs[i].code >= base) throw InputError("coefficient out of range");
    code = code * base + coeffs[i].code;
  }
  return {code};
}

std::uint64_t FieldCtx::add_at(std::size_t lv, std::uint64_t a,
                               std::uint64_t b) const {
  if (lv == 0) {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < levels_[lv].total_degree; ++i) {
    std::uint64_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    out += d * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint64_t FieldCtx::sub_at(std::size_t lv, std::uint64_t a,
                               std::uint64_t b) const {
  if (lv == 0) return a >= b ? a - b : a + p_ - b;
  std::uint64_t out = 0;
  std::uint64_t place = 1;
  for (int i = 0; i < levels_[lv].total_degree; ++i) {
    std::uint64_t x = a % p_;
    std::uint64_t y = b % p_;
    out += (x >= y ? x - y : x + p_ - y) * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

std::uint64_t FieldCtx::mul_at(std::size_t lv, std::uint64_t a,
                               std::uint64_t b) const {
  if (lv == 0) return a * b % p_;
  const Level& level = levels_[lv];
  const int d = level.degree;
  if (d == 1) return mul_at(lv - 1, a, b);
  const std::uint64_t base = levels_[lv - 1].order;

  std::array<std::uint64_t, kMaxLevelDegree> da{};
  std::array<std::uint64_t, kMaxLevelDegree> db{};
  for (int i = 0; i < d; ++i) {
    da[i] = a % base;
    a /= base;
    db[i] = b % base;
    b /= base;
  }
  std::array<std::uint64_t, 2 * kMaxLevelDegree> prod{};
  for (int i = 0; i < d; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (db[j] == 0) continue;
      prod[i + j] = add_at(lv - 1, prod[i + j], mul_at(lv - 1, da[i], db[j]));
    }
  }
  // Reduce modulo the monic extension polynomial, highest term first.
  for (int k = 2 * d - 2; k >= d; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (int j = 0; j < d; ++j) {
      prod[k - d + j] =
          sub_at(lv - 1, prod[k - d + j], mul_at(lv - 1, c, level.poly[j]));
    }
    prod[k] = 0;
  }
  std::uint64_t out = 0;
  for (int i = d; i-- > 0;) out = out * base + prod[i];
  return out;
}

std::uint64_t FieldCtx::pow_at(std::size_t lv, std::uint64_t a,
                               std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_at(lv, r, a);
    a = mul_at(lv, a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t FieldCtx::inv_at(std::size_t lv, std::uint64_t a) const {
  if (a == 0) throw DomainError("zero has no multiplicative inverse");
  return pow_at(lv, a, levels_[lv].order - 2);
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
  return {add_at(levels_.size() - 1, from_code(a.code).code,
                 from_code(b.code).code)};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const {
  return {sub_at(levels_.size() - 1, from_code(a.code).code,
                 from_code(b.code).code)};
}

FieldElem FieldCtx::neg(FieldElem a) const { return sub(zero(), a); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
  return {mul_at(levels_.size() - 1, from_code(a.code).code,
                 from_code(b.code).code)};
}

FieldElem FieldCtx::inv(FieldElem a) const {
  return {inv_at(levels_.size() - 1, from_code(a.code).code)};
}

FieldElem FieldCtx::pow(FieldElem a, std::uint64_t e) const {
  return {pow_at(levels_.size() - 1, from_code(a.code).code, e)};
}

std::uint64_t FieldCtx::dlog(FieldElem e) const {
  from_code(e.code);
  if (e.code == 0) throw DomainError("discrete log of zero is undefined");
  if (!has_logs()) throw StateError("field has no discrete-log table");
  return log_[e.code];
}

FieldElem FieldCtx::exp(std::uint64_t i) const {
  const std::uint64_t group = order() - 1;
  if (!exp_.empty()) return {exp_[i % group]};
  return pow(theta_, i % group);
}

bool FieldCtx::is_in_subfield(FieldElem e, std::uint64_t q_sub) const {
  auto pp = prime_power(q_sub);
  if (!pp || pp->prime != p_ || degree() % pp->exponent != 0) {
    throw InputError(std::to_string(q_sub) + " is not a subfield order of F_" +
                     std::to_string(order()));
  }
  return pow(e, q_sub) == e;
}

nlohmann::ordered_json FieldCtx::to_json() const {
  nlohmann::ordered_json j;
  j["p"] = p_;
  j["tower"] = tower_;
  j["order"] = order();
  auto polys = nlohmann::ordered_json::array();
  for (std::size_t lv = 1; lv < levels_.size(); ++lv) {
    polys.push_back(levels_[lv].poly);
  }
  j["ext_polys"] = std::move(polys);
  j["primitive"] = theta_.code;
  return j;
}

void FieldCtx::trim(Poly& a) const {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FieldCtx::Poly FieldCtx::poly_mod(std::size_t lv, Poly a, const Poly& f) const {
  trim(a);
  const std::uint64_t lead_inv = inv_at(lv, f.back());
  while (a.size() >= f.size()) {
    const std::uint64_t c = mul_at(lv, a.back(), lead_inv);
    const std::size_t shift = a.size() - f.size();
    for (std::size_t j = 0; j < f.size(); ++j) {
      a[shift + j] = sub_at(lv, a[shift + j], mul_at(lv, c, f[j]));
    }
    trim(a);
  }
  return a;
}

FieldCtx::Poly FieldCtx::poly_mulmod(std::size_t lv, const Poly& a,
                                     const Poly& b, const Poly& f) const {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = add_at(lv, prod[i + j], mul_at(lv, a[i], b[j]));
    }
  }
  return poly_mod(lv, std::move(prod), f);
}

FieldCtx::Poly FieldCtx::poly_gcd(std::size_t lv, Poly a, Poly b) const {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(lv, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: a monic f of degree d over F_Q is irreducible iff
// gcd(x^{Q^i} - x, f) = 1 for i = 1..d/2.
bool FieldCtx::irreducible(std::size_t lv, const Poly& f) const {
  const std::size_t d = f.size() - 1;
  if (d <= 1) return d == 1;
  const std::uint64_t q = levels_[lv].order;
  Poly h{0, 1};
  for (std::size_t i = 1; i <= d / 2; ++i) {
    Poly r{1};
    Poly b = h;
    for (std::uint64_t e = q; e; e >>= 1) {
      if (e & 1) r = poly_mulmod(lv, r, b, f);
      b = poly_mulmod(lv, b, b, f);
    }
    h = r;
    Poly t = h;
    if (t.size() < 2) t.resize(2, 0);
    t[1] = sub_at(lv, t[1], 1);
    Poly g = poly_gcd(lv, t, f);
    if (g.size() > 1) return false;
  }
  return true;
}

FieldCtx build_field(std::uint64_t p, const std::vector<int>& tower,
                     const FieldOptions& options) {
  if (p > (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw InputError("field characteristic must be a prime below 2^31, got " +
                     std::to_string(p));
  }
  std::uint64_t order = p;
  for (int d : tower) {
    if (d < 1) throw InputError("tower degrees must be >= 1");
    const std::uint64_t ground = order;
    for (int i = 1; i < d; ++i) {
      if (order > options.order_cap / ground) {
        throw CapacityError("field order exceeds cap " +
                            std::to_string(options.order_cap));
      }
      order *= ground;
    }
  }
  if (order > options.order_cap) {
    throw CapacityError("field order exceeds cap " +
                        std::to_string(options.order_cap));
  }

  FieldCtx ctx;
  ctx.p_ = p;
  ctx.tower_ = tower;
  ctx.levels_.push_back({p, 1, 1, {}});

  for (int d : tower) {
    const std::size_t ground = ctx.levels_.size() - 1;
    const std::uint64_t q = ctx.levels_[ground].order;
    FieldCtx::Level level;
    level.degree = d;
    level.total_degree = ctx.levels_[ground].total_degree * d;
    level.order = 1;
    for (int i = 0; i < d; ++i) level.order *= q;

    // Candidates in lexicographic order of (c_0, c_1, ..., c_{d-1}).
    std::vector<std::uint64_t> c(static_cast<std::size_t>(d), 0);
    for (;;) {
      FieldCtx::Poly f(c.begin(), c.end());
      f.push_back(1);
      if (ctx.irreducible(ground, f)) {
        level.poly = std::move(f);
        break;
      }
      int i = d - 1;
      while (i >= 0 && ++c[static_cast<std::size_t>(i)] == q) {
        c[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) {
        throw InternalError("no irreducible polynomial of degree " +
                            std::to_string(d));
      }
    }
    ctx.levels_.push_back(std::move(level));
  }

  const std::size_t top = ctx.levels_.size() - 1;
  const std::uint64_t group = order - 1;
  const auto factors = factorize(group);
  bool found = false;
  for (std::uint64_t code = 1; code < order && !found; ++code) {
    bool full = true;
    for (auto [r, e] : factors) {
      if (ctx.pow_at(top, code, group / r) == 1) {
        full = false;
        break;
      }
    }
    if (full) {
      ctx.theta_ = {code};
      found = true;
    }
  }
  if (!found) throw InternalError("no primitive element found");

  if (options.build_logs && order <= options.log_cap) {
    constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
    ctx.log_.assign(order, kUnset);
    ctx.exp_.resize(group);
    std::uint64_t cur = 1;
    for (std::uint64_t i = 0; i < group; ++i) {
      if (ctx.log_[cur] != kUnset) {
        throw InternalError("primitive element has short order");
      }
      ctx.exp_[i] = static_cast<std::uint32_t>(cur);
      ctx.log_[cur] = static_cast<std::uint32_t>(i);
      cur = ctx.mul_at(top, cur, ctx.theta_.code);
    }
    if (cur != 1) throw InternalError("primitive element order mismatch");
  }
  return ctx;
}

FieldCtx field_from_json(const nlohmann::json& j, const FieldOptions& options) {
  FieldCtx ctx = [&] {
    try {
      return build_field(j.at("p").get<std::uint64_t>(),
                         j.at("tower").get<std::vector<int>>(), options);
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("malformed field context: ") + e.what());
    }
  }();
  if (nlohmann::json::parse(ctx.to_json().dump()) != j) {
    throw InputError("field context does not match the canonical tower");
  }
  return ctx;
}

}  // namespace diffbasis
