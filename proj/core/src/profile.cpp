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

#include "diffbasis/profile.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <unordered_map>

#include "diffbasis/errors.hpp"

namespace diffbasis {
namespace {

// Dense count arrays are used for finite groups up to this order.
constexpr std::int64_t kDenseOrderCap = std::int64_t{1} << 26;
// Integer interval domains are processed in blocks of this many targets.
constexpr std::int64_t kBlock = std::int64_t{1} << 20;

using CountFn = std::function<void(Element, std::uint64_t)>;

double log2_size(std::size_t n) {
  return std::max(1.0, std::log2(static_cast<double>(n) + 1.0));
}

// Number of a' in A with a - a' = x (difference) or a + a' = x (sum), for
// every a in A. A is sorted; the group is the integers or finite.
std::uint64_t count_at(const GroupedSet& a, ProfileMode mode, Element x) {
  const GroupSpec& spec = a.spec();
  std::uint64_t c = 0;
  for (Element ai : a) {
    Element partner = mode == ProfileMode::kDifference ? spec.sub(ai, x)
                                                        : spec.sub(x, ai);
    if (spec.kind() == GroupKind::kIntegers && !spec.valid(partner)) continue;
    if (a.contains(partner)) ++c;
  }
  return c;
}

// Integer-group counts on [lo, hi] via a sorted two-index sweep: for each a_i
// the admissible partners form a contiguous run of the sorted array.
void integer_interval(const GroupedSet& a, ProfileMode mode, Element lo,
                      Element hi, std::vector<std::uint64_t>& out) {
  out.assign(static_cast<std::size_t>(hi - lo + 1), 0);
  const auto& v = a.vec();
  for (Element ai : v) {
    Element want_lo = mode == ProfileMode::kDifference ? ai - hi : lo - ai;
    Element want_hi = mode == ProfileMode::kDifference ? ai - lo : hi - ai;
    auto first = std::lower_bound(v.begin(), v.end(), want_lo);
    auto last = std::upper_bound(first, v.end(), want_hi);
    for (auto it = first; it != last; ++it) {
      Element x = mode == ProfileMode::kDifference ? ai - *it : ai + *it;
      ++out[static_cast<std::size_t>(x - lo)];
    }
  }
}

// Full pair enumeration for a finite group into a dense array of its order.
std::vector<std::uint32_t> finite_dense(const GroupedSet& a, ProfileMode mode) {
  const GroupSpec& spec = a.spec();
  std::vector<std::uint32_t> counts(static_cast<std::size_t>(spec.order()), 0);
  const auto& v = a.vec();
  if (spec.kind() == GroupKind::kVector) {
    // Pre-split digits so the pair loop stays cheap.
    const std::int64_t p = spec.prime();
    const int n = spec.dimension();
    std::vector<std::int64_t> digs(v.size() * static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < v.size(); ++i) {
      Element x = v[i];
      for (int d = 0; d < n; ++d) {
        digs[i * n + d] = x % p;
        x /= p;
      }
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        Element code = 0;
        for (int d = n; d-- > 0;) {
          std::int64_t t = mode == ProfileMode::kDifference
                               ? digs[i * n + d] - digs[j * n + d]
                               : digs[i * n + d] + digs[j * n + d];
          t %= p;
          if (t < 0) t += p;
          code = code * p + t;
        }
        ++counts[static_cast<std::size_t>(code)];
      }
    }
  } else {
    for (Element ai : v) {
      for (Element aj : v) {
        Element x = mode == ProfileMode::kDifference ? spec.sub(ai, aj)
                                                      : spec.add(ai, aj);
        ++counts[static_cast<std::size_t>(x)];
      }
    }
  }
  return counts;
}

std::unordered_map<Element, std::uint64_t> finite_sparse(const GroupedSet& a,
                                                         ProfileMode mode) {
  const GroupSpec& spec = a.spec();
  std::unordered_map<Element, std::uint64_t> counts;
  counts.reserve(a.size() * a.size());
  for (Element ai : a) {
    for (Element aj : a) {
      Element x = mode == ProfileMode::kDifference ? spec.sub(ai, aj)
                                                    : spec.add(ai, aj);
      ++counts[x];
    }
  }
  return counts;
}

// Visits (x, r(x)) for every x of the domain in domain order.
void for_each_count(const GroupedSet& a, ProfileMode mode, const Domain& dom,
                    const CountFn& fn) {
  const GroupSpec& spec = a.spec();
  dom.check(spec);
  if (dom.empty()) return;
  const double pairs = static_cast<double>(a.size()) * a.size();
  const double per_x_cost = static_cast<double>(dom.size()) *
                            static_cast<double>(a.size()) *
                            log2_size(a.size());

  if (spec.kind() == GroupKind::kIntegers) {
    if (dom.is_interval()) {
      std::vector<std::uint64_t> block;
      for (Element lo = dom.lo(); lo <= dom.hi();) {
        Element hi = std::min(dom.hi(), lo + kBlock - 1);
        integer_interval(a, mode, lo, hi, block);
        for (Element x = lo; x <= hi; ++x) {
          fn(x, block[static_cast<std::size_t>(x - lo)]);
        }
        if (hi == dom.hi()) break;
        lo = hi + 1;
      }
      return;
    }
    Element lo = dom.at(0);
    Element hi = dom.at(dom.size() - 1);
    if (hi - lo < kDenseOrderCap &&
        pairs + static_cast<double>(hi - lo) < per_x_cost) {
      std::vector<std::uint64_t> hull;
      integer_interval(a, mode, lo, hi, hull);
      for (std::size_t i = 0; i < dom.size(); ++i) {
        fn(dom.at(i), hull[static_cast<std::size_t>(dom.at(i) - lo)]);
      }
      return;
    }
    for (std::size_t i = 0; i < dom.size(); ++i) {
      fn(dom.at(i), count_at(a, mode, dom.at(i)));
    }
    return;
  }

  const std::int64_t order = spec.order();
  const double full_cost = pairs + static_cast<double>(order);
  if (per_x_cost <= full_cost) {
    for (std::size_t i = 0; i < dom.size(); ++i) {
      fn(dom.at(i), count_at(a, mode, dom.at(i)));
    }
    return;
  }
  if (order <= kDenseOrderCap) {
    auto dense = finite_dense(a, mode);
    for (std::size_t i = 0; i < dom.size(); ++i) {
      fn(dom.at(i), dense[static_cast<std::size_t>(dom.at(i))]);
    }
    return;
  }
  auto sparse = finite_sparse(a, mode);
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto it = sparse.find(dom.at(i));
    fn(dom.at(i), it == sparse.end() ? 0 : it->second);
  }
}

RepProfile make_profile(const GroupedSet& a, const Domain& domain,
                        ProfileMode mode) {
  RepProfile prof{a.spec(), mode, domain, {}};
  prof.counts.reserve(domain.size());
  for_each_count(a, mode, domain,
                 [&](Element, std::uint64_t c) { prof.counts.push_back(c); });
  return prof;
}

}  // namespace

Domain Domain::interval(Element lo, Element hi) {
  if (hi < lo) throw InputError("empty interval domain");
  Domain d;
  d.is_interval_ = true;
  d.lo_ = lo;
  d.hi_ = hi;
  return d;
}

Domain Domain::list(std::vector<Element> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Domain d;
  d.is_interval_ = false;
  d.xs_ = std::move(xs);
  return d;
}

Domain Domain::full(const GroupSpec& spec) {
  if (!spec.finite()) {
    throw InputError("full-line profiles over the integers are refused; "
                     "request an explicit range");
  }
  return interval(0, spec.order() - 1);
}

Domain Domain::nonzero(const GroupSpec& spec) {
  if (!spec.finite()) {
    throw InputError("nonzero domain needs a finite group");
  }
  if (spec.order() < 2) return list({});
  return interval(1, spec.order() - 1);
}

std::size_t Domain::size() const {
  if (is_interval_) {
    return hi_ < lo_ ? 0 : static_cast<std::size_t>(hi_ - lo_ + 1);
  }
  return xs_.size();
}

Element Domain::at(std::size_t i) const {
  return is_interval_ ? lo_ + static_cast<Element>(i) : xs_[i];
}

std::optional<std::size_t> Domain::index_of(Element x) const {
  if (is_interval_) {
    if (x < lo_ || x > hi_) return std::nullopt;
    return static_cast<std::size_t>(x - lo_);
  }
  auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
  if (it == xs_.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - xs_.begin());
}

void Domain::check(const GroupSpec& spec) const {
  if (is_interval_) {
    if (hi_ < lo_) return;
    spec.check(lo_);
    spec.check(hi_);
    return;
  }
  for (Element x : xs_) spec.check(x);
}

std::uint64_t RepProfile::count(Element x) const {
  auto i = domain.index_of(x);
  if (!i) {
    throw InputError("element " + std::to_string(x) +
                     " is outside the profile domain");
  }
  return counts[*i];
}

RepProfile diff_profile(const GroupedSet& a, const Domain& domain) {
  return make_profile(a, domain, ProfileMode::kDifference);
}

RepProfile sum_profile(const GroupedSet& a, const Domain& domain) {
  return make_profile(a, domain, ProfileMode::kSum);
}

BasisCheck is_g_diff_basis(const GroupedSet& a, const Domain& targets,
                           std::uint64_t g) {
  if (targets.empty()) throw InputError("empty target set");
  BasisCheck res;
  res.min_count = std::numeric_limits<std::uint64_t>::max();
  for_each_count(a, ProfileMode::kDifference, targets,
                 [&](Element x, std::uint64_t c) {
                   res.min_count = std::min(res.min_count, c);
                   res.max_count = std::max(res.max_count, c);
                   if (c < g && !res.witness) {
                     res.ok = false;
                     res.witness = x;
                     res.witness_count = c;
                   }
                 });
  return res;
}

BoundedCheck is_g_bounded(const GroupedSet& a, std::uint64_t g) {
  const GroupSpec& spec = a.spec();
  BoundedCheck res;
  std::uint64_t min_attained = std::numeric_limits<std::uint64_t>::max();
  auto visit = [&](Element x, std::uint64_t c) {
    if (c == 0) return;
    min_attained = std::min(min_attained, c);
    res.max_count = std::max(res.max_count, c);
    if (c > g && !res.witness) {
      res.ok = false;
      res.witness = x;
      res.witness_count = c;
    }
  };

  if (spec.kind() == GroupKind::kIntegers) {
    const auto& v = a.vec();
    if (v.size() >= 2) {
      Element span = v.back() - v.front();
      if (span < kDenseOrderCap) {
        std::vector<std::uint32_t> counts(static_cast<std::size_t>(span) + 1,
                                          0);
        for (std::size_t i = 0; i < v.size(); ++i) {
          for (std::size_t j = 0; j < i; ++j) {
            ++counts[static_cast<std::size_t>(v[i] - v[j])];
          }
        }
        for (Element x = 1; x <= span; ++x) {
          visit(x, counts[static_cast<std::size_t>(x)]);
        }
      } else {
        std::vector<Element> diffs;
        diffs.reserve(v.size() * (v.size() - 1) / 2);
        for (std::size_t i = 0; i < v.size(); ++i) {
          for (std::size_t j = 0; j < i; ++j) diffs.push_back(v[i] - v[j]);
        }
        std::sort(diffs.begin(), diffs.end());
        for (std::size_t i = 0; i < diffs.size();) {
          std::size_t j = i;
          while (j < diffs.size() && diffs[j] == diffs[i]) ++j;
          visit(diffs[i], j - i);
          i = j;
        }
      }
    }
  } else if (spec.order() <= kDenseOrderCap) {
    auto dense = finite_dense(a, ProfileMode::kDifference);
    for (std::size_t x = 1; x < dense.size(); ++x) {
      visit(static_cast<Element>(x), dense[x]);
    }
  } else {
    auto sparse = finite_sparse(a, ProfileMode::kDifference);
    std::vector<std::pair<Element, std::uint64_t>> sorted(sparse.begin(),
                                                          sparse.end());
    std::sort(sorted.begin(), sorted.end());
    for (auto [x, c] : sorted) {
      if (x != 0) visit(x, c);
    }
  }
  res.min_count = res.max_count == 0 ? 0 : min_attained;
  return res;
}

GroupedSet normalize(const GroupedSet& a) {
  if (a.spec().kind() != GroupKind::kIntegers) {
    throw InputError("normalize applies to integer sets only");
  }
  if (a.empty()) throw InputError("cannot normalize an empty set");
  return a.translate(-a.vec().front());
}

}  // namespace diffbasis
