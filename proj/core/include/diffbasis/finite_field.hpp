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

#ifndef DIFFBASIS_FINITE_FIELD_HPP_
#define DIFFBASIS_FINITE_FIELD_HPP_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

namespace diffbasis {

inline constexpr std::uint64_t kDefaultFieldOrderCap = std::uint64_t{1} << 26;

// An element of a FieldCtx, identified by its code: the coefficient vector
// over F_p (ground levels first, low degree first) read as a radix-p
// integer. Codes of a subfield level are exactly [0, order of that level).
struct FieldElem {
  std::uint64_t code = 0;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

struct FieldOptions {
  std::uint64_t order_cap = kDefaultFieldOrderCap;
  // Discrete-log tables are built eagerly when the order is at most
  // log_cap; above that dlog() throws StateError.
  bool build_logs = true;
  std::uint64_t log_cap = kDefaultFieldOrderCap;
};

// An explicit finite field F_p -> F_{p^d1} -> F_{p^(d1 d2)} -> ... Each level
// adjoins a root of the lexicographically smallest monic irreducible
// polynomial over the level below (coefficients compared constant term
// first). The primitive element is the smallest code of full order.
class FieldCtx {
 public:
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t order() const { return levels_.back().order; }
  // Degree over the prime field.
  int degree() const { return levels_.back().total_degree; }
  const std::vector<int>& tower() const { return tower_; }

  // Level 0 is F_p itself; level i >= 1 is the i-th extension.
  std::size_t num_levels() const { return levels_.size(); }
  std::uint64_t level_order(std::size_t level) const;
  // Monic extension polynomial of level >= 1, coefficient codes in the
  // level below, constant term first.
  const std::vector<std::uint64_t>& ext_poly(std::size_t level) const;

  FieldElem zero() const { return {0}; }
  FieldElem one() const { return {1}; }
  FieldElem primitive() const { return theta_; }
  // Throws InputError for codes >= order().
  FieldElem from_code(std::uint64_t code) const;

  // Coefficients of e over the ground of the top level, low degree first.
  std::vector<FieldElem> coefficients(FieldElem e) const;
  FieldElem from_coefficients(std::span<const FieldElem> coeffs) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  // Throws DomainError for zero.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const;

  bool has_logs() const { return !log_.empty(); }
  // Exponent i in [0, q-1) with primitive()^i == e. DomainError for zero,
  // StateError without a table.
  std::uint64_t dlog(FieldElem e) const;
  // primitive()^i.
  FieldElem exp(std::uint64_t i) const;

  // e^{q_sub} == e. q_sub must be p^d with d dividing degree().
  bool is_in_subfield(FieldElem e, std::uint64_t q_sub) const;

  // p, tower degrees, extension polynomials and primitive element.
  nlohmann::ordered_json to_json() const;

 private:
  friend FieldCtx build_field(std::uint64_t, const std::vector<int>&,
                              const FieldOptions&);

  struct Level {
    std::uint64_t order = 0;
    int degree = 1;        // over the level below
    int total_degree = 1;  // over F_p
    std::vector<std::uint64_t> poly;
  };

  using Poly = std::vector<std::uint64_t>;

  std::uint64_t add_at(std::size_t lv, std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub_at(std::size_t lv, std::uint64_t a, std::uint64_t b) const;
  std::uint64_t mul_at(std::size_t lv, std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow_at(std::size_t lv, std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv_at(std::size_t lv, std::uint64_t a) const;

  // Polynomials over level lv.
  void trim(Poly& a) const;
  Poly poly_mulmod(std::size_t lv, const Poly& a, const Poly& b,
                   const Poly& f) const;
  Poly poly_mod(std::size_t lv, Poly a, const Poly& f) const;
  Poly poly_gcd(std::size_t lv, Poly a, Poly b) const;
  bool irreducible(std::size_t lv, const Poly& f) const;

  std::uint64_t p_ = 0;
  std::vector<int> tower_;
  std::vector<Level> levels_;
  FieldElem theta_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
};

// Deterministic field F_{p^(d1 d2 ...)} with the given tower degrees (an
// empty tower gives F_p). InputError if p is not prime or a degree is < 1;
// CapacityError if the order exceeds options.order_cap.
FieldCtx build_field(std::uint64_t p, const std::vector<int>& tower,
                     const FieldOptions& options = {});

// Rebuilds a context serialized by FieldCtx::to_json and checks that the
// stored polynomials and primitive element match.
FieldCtx field_from_json(const nlohmann::json& j,
                         const FieldOptions& options = {});

}  // namespace diffbasis

#endif  // DIFFBASIS_FINITE_FIELD_HPP_
