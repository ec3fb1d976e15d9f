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

#include "diffbasis/group.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "diffbasis/errors.hpp"

namespace diffbasis {
namespace {

bool small_is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

GroupSpec GroupSpec::integers() {
  return GroupSpec(GroupKind::kIntegers, 0, 0, 0, 0);
}

GroupSpec GroupSpec::cyclic(std::int64_t modulus) {
  if (modulus < 1) throw InputError("cyclic group needs modulus >= 1");
  if (modulus > kMaxIntegerMagnitude) {
    throw CapacityError("cyclic modulus too large");
  }
  return GroupSpec(GroupKind::kCyclic, modulus, 0, 0, modulus);
}

GroupSpec GroupSpec::vector(std::int64_t prime, int dimension) {
  if (dimension < 1) throw InputError("vector group needs dimension >= 1");
  if (prime > (std::int64_t{1} << 31) || !small_is_prime(prime)) {
    throw InputError("vector group needs a prime modulus, got " +
                     std::to_string(prime));
  }
  std::int64_t order = 1;
  for (int i = 0; i < dimension; ++i) {
    if (order > kMaxIntegerMagnitude / prime) {
      throw CapacityError("vector group order p^n exceeds 2^60");
    }
    order *= prime;
  }
  return GroupSpec(GroupKind::kVector, 0, prime, dimension, order);
}

std::int64_t GroupSpec::modulus() const {
  if (kind_ != GroupKind::kCyclic) throw InputError("not a cyclic group");
  return modulus_;
}

std::int64_t GroupSpec::prime() const {
  if (kind_ != GroupKind::kVector) throw InputError("not a vector group");
  return prime_;
}

int GroupSpec::dimension() const {
  if (kind_ != GroupKind::kVector) throw InputError("not a vector group");
  return dimension_;
}

std::int64_t GroupSpec::order() const {
  if (kind_ == GroupKind::kIntegers) {
    throw InputError("the integers have no finite order");
  }
  return order_;
}

bool GroupSpec::valid(Element x) const {
  if (kind_ == GroupKind::kIntegers) {
    return x >= -kMaxIntegerMagnitude && x <= kMaxIntegerMagnitude;
  }
  return x >= 0 && x < order_;
}

void GroupSpec::check(Element x) const {
  if (!valid(x)) {
    throw InputError("element " + std::to_string(x) + " is not valid in " +
                     describe());
  }
}

Element GroupSpec::add(Element a, Element b) const {
  switch (kind_) {
    case GroupKind::kIntegers:
      return a + b;
    case GroupKind::kCyclic: {
      Element s = a + b;
      return s >= modulus_ ? s - modulus_ : s;
    }
    case GroupKind::kVector: {
      Element out = 0;
      Element place = 1;
      for (int i = 0; i < dimension_; ++i) {
        Element d = a % prime_ + b % prime_;
        if (d >= prime_) d -= prime_;
        out += d * place;
        place *= prime_;
        a /= prime_;
        b /= prime_;
      }
      return out;
    }
  }
  return 0;
}

Element GroupSpec::sub(Element a, Element b) const {
  switch (kind_) {
    case GroupKind::kIntegers:
      return a - b;
    case GroupKind::kCyclic: {
      Element s = a - b;
      return s < 0 ? s + modulus_ : s;
    }
    case GroupKind::kVector: {
      Element out = 0;
      Element place = 1;
      for (int i = 0; i < dimension_; ++i) {
        Element d = a % prime_ - b % prime_;
        if (d < 0) d += prime_;
        out += d * place;
        place *= prime_;
        a /= prime_;
        b /= prime_;
      }
      return out;
    }
  }
  return 0;
}

Element GroupSpec::neg(Element a) const { return sub(0, a); }

std::vector<std::int64_t> GroupSpec::digits(Element x) const {
  if (kind_ != GroupKind::kVector) throw InputError("not a vector group");
  std::vector<std::int64_t> out(static_cast<std::size_t>(dimension_));
  for (auto& d : out) {
    d = x % prime_;
    x /= prime_;
  }
  return out;
}

Element GroupSpec::from_digits(std::span<const std::int64_t> digits) const {
  if (kind_ != GroupKind::kVector) throw InputError("not a vector group");
  if (digits.size() != static_cast<std::size_t>(dimension_)) {
    throw InputError("vector element needs " + std::to_string(dimension_) +
                     " digits, got " + std::to_string(digits.size()));
  }
  Element out = 0;
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (digits[i] < 0 || digits[i] >= prime_) {
      throw InputError("digit " + std::to_string(digits[i]) +
                       " outside [0, " + std::to_string(prime_) + ")");
    }
    out = out * prime_ + digits[i];
  }
  return out;
}

std::string GroupSpec::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case GroupKind::kIntegers:
      os << "Z";
      break;
    case GroupKind::kCyclic:
      os << "Z/" << modulus_;
      break;
    case GroupKind::kVector:
      os << "F_" << prime_ << "^" << dimension_;
      break;
  }
  return os.str();
}

GroupedSet::GroupedSet(GroupSpec spec, std::vector<Element> elements)
    : spec_(spec), elements_(std::move(elements)) {
  for (Element x : elements_) spec_.check(x);
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

GroupedSet GroupedSet::distinct(GroupSpec spec, std::vector<Element> elements) {
  std::size_t before = elements.size();
  GroupedSet set(spec, std::move(elements));
  if (set.size() != before) {
    throw InputError("set contains duplicate elements");
  }
  return set;
}

bool GroupedSet::contains(Element x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

GroupedSet GroupedSet::translate(Element t) const {
  std::vector<Element> moved;
  moved.reserve(elements_.size());
  for (Element a : elements_) moved.push_back(spec_.add(a, t));
  return GroupedSet(spec_, std::move(moved));
}

ProblemInstance ProblemInstance::make(std::int64_t n, std::int64_t g) {
  if (n < 1) throw InputError("n must be >= 1");
  if (g < 1) throw InputError("g must be >= 1");
  return {n, g};
}

bool lex_less(std::span<const Element> a, std::span<const Element> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace diffbasis
