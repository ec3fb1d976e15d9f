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

#ifndef DIFFBASIS_CONSTRUCTIONS_HPP_
#define DIFFBASIS_CONSTRUCTIONS_HPP_

#include <cstdint>

#include "diffbasis/finite_field.hpp"
#include "diffbasis/group.hpp"

namespace diffbasis {

// Every function here checks its own output with the profile predicates
// and throws InternalError if that check fails.

inline constexpr std::int64_t kDefaultVectorGroupCap = std::int64_t{1} << 20;
// Singer sets only walk m = q^2+q+1 powers and never need a log table, so
// their field may be larger than the general cap.
inline constexpr std::uint64_t kDefaultSingerFieldCap = std::uint64_t{1} << 32;

// {1, ..., k-1} u {k, 2k, ..., k^2, (k+1)k} with k = ceil(sqrt(n)); a
// difference basis for [n] of size 2k.
GroupedSet lemma2_basis(std::int64_t n);

// {t + b : 0 <= t < g, b in s}. Turns a difference basis for [n] into a
// g-difference basis for [n] of size at most g|s|.
GroupedSet translate_union(const GroupedSet& s, std::int64_t g);

// Perfect difference set of size q+1 in Z/(q^2+q+1).
struct SingerSet {
  std::int64_t q = 0;
  std::int64_t m = 0;
  GroupedSet set{GroupSpec::integers(), {}};
};

// Exponents i in [0, m) for which theta^i lies in the plane spanned by the
// two lowest coordinates of F_{q^3} over F_q.
SingerSet singer_set(std::int64_t q,
                     std::uint64_t field_cap = kDefaultSingerFieldCap);

// {a + m b : a in singer, b in basis}. basis must be a g-difference basis
// for [v]; the result is one for [m v] with exactly (q+1)|basis| elements.
GroupedSet product_basis(const SingerSet& singer, const GroupedSet& basis,
                         std::int64_t v, std::int64_t g);

// {a in [0, q^2-1) : theta^a - theta in F_q}, a Sidon set of size q in
// Z/(q^2-1).
GroupedSet bose_chowla(std::int64_t q,
                       std::uint64_t field_cap = kDefaultFieldOrderCap);

struct QuotientSet {
  std::int64_t q = 0;
  std::int64_t g = 0;
  std::int64_t modulus = 0;  // (q^2-1)/g
  GroupedSet set{GroupSpec::integers(), {}};
};

// Bose-Chowla set reduced modulo (q^2-1)/g, i.e. modulo the order-g
// subgroup. Needs q = 1 (mod g); the image has q elements and every
// nonzero difference at most g representations.
QuotientSet quotient_g_bounded(std::int64_t q, std::int64_t g);

// {(x, x^2) : x in F_q} u {(0, b) : b in basis} inside F_q x F_q, encoded
// as a vector group over F_p of twice the degree. q must be odd and basis a
// difference basis of (F_q, +), given over the coefficient identification.
GroupedSet parabola_basis(const FieldCtx& qctx, const GroupedSet& basis,
                          std::int64_t group_cap = kDefaultVectorGroupCap);

// a x b for a g1-basis a and a g2-basis b of vector groups over the same
// prime; the result is a (g1 g2)-basis of the direct product, with a's
// coordinates first. The trivial group Z/1 acts as an identity factor.
GroupedSet product_basis_vs(const GroupedSet& a, std::int64_t g1,
                            const GroupedSet& b, std::int64_t g2,
                            std::int64_t group_cap = kDefaultVectorGroupCap);

// Recursive difference basis of F_p^n for odd p: reduced grid basis at
// n = 1, parabola over F_{p^k} at n = 2k, product with F_p at n = 2k+1.
GroupedSet vs_basis(std::int64_t p, int n,
                    std::int64_t group_cap = kDefaultVectorGroupCap);

// Union of the translates of vs_basis(p, n) by the elements with codes
// 0..g-1 (t e_1 while g <= p); a g-difference basis of F_p^n.
GroupedSet vs_g_basis(std::int64_t p, int n, std::int64_t g,
                      std::int64_t group_cap = kDefaultVectorGroupCap);

}  // namespace diffbasis

#endif  // DIFFBASIS_CONSTRUCTIONS_HPP_
