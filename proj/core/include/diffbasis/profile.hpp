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

#ifndef DIFFBASIS_PROFILE_HPP_
#define DIFFBASIS_PROFILE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "diffbasis/group.hpp"

namespace diffbasis {

// A set of group elements on which a representation function is evaluated.
// Either a contiguous run of element codes [lo, hi] or an explicit sorted
// list.
class Domain {
 public:
  static Domain interval(Element lo, Element hi);
  static Domain list(std::vector<Element> xs);
  // Every element of a finite group. Refused for the integers, whose
  // profiles have unbounded support.
  static Domain full(const GroupSpec& spec);
  // Every nonzero element of a finite group.
  static Domain nonzero(const GroupSpec& spec);

  bool is_interval() const { return is_interval_; }
  Element lo() const { return lo_; }
  Element hi() const { return hi_; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  Element at(std::size_t i) const;
  std::optional<std::size_t> index_of(Element x) const;

  // Throws InputError if any element is invalid for spec.
  void check(const GroupSpec& spec) const;

 private:
  bool is_interval_ = true;
  Element lo_ = 0;
  Element hi_ = -1;
  std::vector<Element> xs_;
};

enum class ProfileMode { kDifference, kSum };

// x -> r(x) over a recorded domain; counts[i] belongs to domain.at(i).
struct RepProfile {
  GroupSpec spec;
  ProfileMode mode;
  Domain domain;
  std::vector<std::uint64_t> counts;

  // Count at x; throws InputError if x is outside the domain.
  std::uint64_t count(Element x) const;
};

// r_{A-A}(x) = #{(a, a') in A x A : a - a' = x} for every x in the domain.
RepProfile diff_profile(const GroupedSet& a, const Domain& domain);
// r_{A+A}(x) = #{(a, a') in A x A : a + a' = x}.
RepProfile sum_profile(const GroupedSet& a, const Domain& domain);

struct BasisCheck {
  bool ok = true;
  // Smallest element of the target range whose count is below g.
  std::optional<Element> witness;
  std::uint64_t witness_count = 0;
  std::uint64_t min_count = 0;
  std::uint64_t max_count = 0;
};

// True iff r_{A-A}(x) >= g for every x in targets. Large interval targets
// are streamed in blocks so memory stays bounded.
BasisCheck is_g_diff_basis(const GroupedSet& a, const Domain& targets,
                           std::uint64_t g);

struct BoundedCheck {
  bool ok = true;
  // Smallest offending nonzero element (smallest positive one over Z).
  std::optional<Element> witness;
  std::uint64_t witness_count = 0;
  std::uint64_t max_count = 0;  // over nonzero elements
  std::uint64_t min_count = 0;  // over attained nonzero differences
};

// True iff r_{A-A}(x) <= g for every nonzero x. Over the integers only the
// attained differences are inspected.
BoundedCheck is_g_bounded(const GroupedSet& a, std::uint64_t g);

// Integer sets only: translate so that the minimum is 0.
GroupedSet normalize(const GroupedSet& a);

}  // namespace diffbasis

#endif  // DIFFBASIS_PROFILE_HPP_
