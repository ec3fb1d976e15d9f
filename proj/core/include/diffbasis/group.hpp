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

#ifndef DIFFBASIS_GROUP_HPP_
#define DIFFBASIS_GROUP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace diffbasis {

// Group elements are stored as a single signed integer. Integers are stored
// verbatim, residues of Z/m as their representative in [0, m), and vectors of
// F_p^n as the radix-p integer whose i-th digit (least significant first) is
// coordinate i.
using Element = std::int64_t;

enum class GroupKind { kIntegers, kCyclic, kVector };

// Largest magnitude accepted for an element of the integers, chosen so that
// sums and differences of two elements never overflow.
inline constexpr Element kMaxIntegerMagnitude = Element{1} << 60;

class GroupSpec {
 public:
  static GroupSpec integers();
  static GroupSpec cyclic(std::int64_t modulus);
  static GroupSpec vector(std::int64_t prime, int dimension);

  GroupKind kind() const { return kind_; }
  bool finite() const { return kind_ != GroupKind::kIntegers; }

  // Cyclic only.
  std::int64_t modulus() const;
  // Vector only.
  std::int64_t prime() const;
  int dimension() const;

  // Number of elements; throws InputError for the integers.
  std::int64_t order() const;

  bool valid(Element x) const;
  // Throws InputError when !valid(x).
  void check(Element x) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;

  // Vector only: digits of x, coordinate 0 first.
  std::vector<std::int64_t> digits(Element x) const;
  Element from_digits(std::span<const std::int64_t> digits) const;

  std::string describe() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

 private:
  GroupSpec(GroupKind kind, std::int64_t modulus, std::int64_t prime,
            int dimension, std::int64_t order)
      : kind_(kind), modulus_(modulus), prime_(prime), dimension_(dimension),
        order_(order) {}

  GroupKind kind_;
  std::int64_t modulus_;
  std::int64_t prime_;
  int dimension_;
  std::int64_t order_;
};

// A finite set of distinct elements of one group, kept in ascending
// element-code order.
class GroupedSet {
 public:
  // Validates every element, sorts and merges duplicates.
  GroupedSet(GroupSpec spec, std::vector<Element> elements);

  // Same as the constructor but rejects duplicate elements with InputError.
  static GroupedSet distinct(GroupSpec spec, std::vector<Element> elements);

  const GroupSpec& spec() const { return spec_; }
  std::span<const Element> elements() const { return elements_; }
  const std::vector<Element>& vec() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(Element x) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  // {a + t : a in this}.
  GroupedSet translate(Element t) const;

  friend bool operator==(const GroupedSet&, const GroupedSet&) = default;

 private:
  GroupSpec spec_;
  std::vector<Element> elements_;
};

// An (n, g) pair: target interval [n] (or a group-size parameter) and the
// required multiplicity.
struct ProblemInstance {
  std::int64_t n = 1;
  std::int64_t g = 1;

  // Throws InputError unless n >= 1 and g >= 1.
  static ProblemInstance make(std::int64_t n, std::int64_t g);

  friend bool operator==(const ProblemInstance&,
                         const ProblemInstance&) = default;
};

// Lexicographic comparison of canonical element sequences; used for
// tie-breaking among equally good witnesses.
bool lex_less(std::span<const Element> a, std::span<const Element> b);

}  // namespace diffbasis

#endif  // DIFFBASIS_GROUP_HPP_
