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

#include "diffbasis/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <limits>
#include <span>
#include <thread>
#include <vector>

#include "diffbasis/bounds.hpp"
#include "diffbasis/constructions.hpp"
#include "diffbasis/errors.hpp"
#include "diffbasis/profile.hpp"
#include "diffbasis/set_io.hpp"

namespace diffbasis {
namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Shared by the workers of one level: smallest subtree index that found a
// witness or ran out of nodes. Subtrees beyond it are irrelevant.
struct LevelControl {
  std::atomic<std::size_t> terminal{kNone};

  void settle(std::size_t i) {
    std::size_t cur = terminal.load();
    while (i < cur && !terminal.compare_exchange_weak(cur, i)) {
    }
  }
};

struct SubtreeOutcome {
  bool found = false;
  bool truncated = false;
  bool aborted = false;
  std::uint64_t nodes = 0;
  std::vector<Element> witness;
};

struct LevelOutcome {
  bool found = false;
  bool exhausted = false;
  std::uint64_t nodes = 0;
  std::vector<Element> witness;
};

// Bookkeeping common to every depth-first searcher: node cap, cooperative
// abort, and the stop flag they raise.
class DfsBase {
 public:
  DfsBase(std::uint64_t cap, const LevelControl* control, std::size_t index)
      : cap_(cap), control_(control), index_(index) {}

  SubtreeOutcome outcome(bool found, std::vector<Element> witness) const {
    SubtreeOutcome o;
    o.found = found;
    o.truncated = truncated_;
    o.aborted = aborted_;
    o.nodes = nodes_;
    if (found) o.witness = std::move(witness);
    return o;
  }

 protected:
  // Counts a node; false once the search has to stop.
  bool enter() {
    ++nodes_;
    if (nodes_ > cap_) {
      truncated_ = true;
      return false;
    }
    if (control_ != nullptr && (nodes_ & 1023) == 0 &&
        control_->terminal.load(std::memory_order_relaxed) < index_) {
      aborted_ = true;
      return false;
    }
    return true;
  }
  bool stopped() const { return truncated_ || aborted_; }

 private:
  std::uint64_t cap_;
  const LevelControl* control_;
  std::size_t index_;
  std::uint64_t nodes_ = 0;
  bool truncated_ = false;
  bool aborted_ = false;
};

using SubtreeTask = std::function<SubtreeOutcome(
    std::size_t index, std::uint64_t cap, const LevelControl* control)>;

// Runs subtrees 0..count-1 (lexicographic order of the first branch) and
// merges them as a sequential search would: the first subtree holding a
// witness wins, and node totals only include subtrees up to that one, so
// results do not depend on the worker count.
LevelOutcome run_level(std::size_t count, const SubtreeTask& task,
                       std::uint64_t remaining, unsigned threads) {
  LevelOutcome level;
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      SubtreeOutcome o = task(i, remaining - level.nodes, nullptr);
      if (o.truncated) {
        level.exhausted = true;
        level.nodes = remaining;
        return level;
      }
      level.nodes += o.nodes;
      if (o.found) {
        level.found = true;
        level.witness = std::move(o.witness);
        return level;
      }
    }
    return level;
  }

  std::vector<SubtreeOutcome> results(count);
  std::vector<char> done(count, 0);
  LevelControl control;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count || i > control.terminal.load()) return;
      SubtreeOutcome o = task(i, remaining, &control);
      if (o.found || o.truncated) control.settle(i);
      results[i] = std::move(o);
      done[i] = 1;
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(count));
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < count; ++i) {
    if (!done[i] || results[i].aborted) {
      throw InternalError("parallel search skipped an undecided subtree");
    }
    SubtreeOutcome& o = results[i];
    if (o.truncated || level.nodes + o.nodes > remaining) {
      level.exhausted = true;
      level.nodes = remaining;
      return level;
    }
    level.nodes += o.nodes;
    if (o.found) {
      level.found = true;
      level.witness = std::move(o.witness);
      return level;
    }
  }
  return level;
}

// ---------------------------------------------------------------------------
// g-difference bases of [n] inside [0, W], 0 fixed, exactly k elements.

class EtaDfs : public DfsBase {
 public:
  EtaDfs(std::int64_t n, std::int64_t g, std::int64_t window, std::int64_t k,
         std::uint64_t cap, const LevelControl* control, std::size_t index)
      : DfsBase(cap, control, index), n_(n), g_(g), w_(window), k_(k),
        cnt_(static_cast<std::size_t>(n + 1), 0), deficit_(n * g) {}

  // Searches below the fixed prefix 0 < prefix[0] < prefix[1] < ...
  SubtreeOutcome run(std::span<const std::int64_t> prefix) {
    place(0);
    bool alive = true;
    for (std::size_t i = 0; i < prefix.size() && alive; ++i) {
      if (i > 0) alive = enter() && viable();
      if (alive) place(prefix[i]);
    }
    bool found = alive && dfs();
    return outcome(found, chosen_);
  }

 private:
  void place(std::int64_t y) {
    for (std::int64_t c : chosen_) {
      std::int64_t d = y - c;
      if (d > n_) continue;
      if (cnt_[d] < g_) --deficit_;
      ++cnt_[d];
    }
    chosen_.push_back(y);
  }

  void unplace() {
    std::int64_t y = chosen_.back();
    chosen_.pop_back();
    for (std::int64_t c : chosen_) {
      std::int64_t d = y - c;
      if (d > n_) continue;
      --cnt_[d];
      if (cnt_[d] < g_) ++deficit_;
    }
  }

  // Upper bound on new representations of every deficient target: each new
  // pair has a future element as its larger end, a future y pairs with a
  // current c only when y = c + x lies in (last, W], and pairs of two future
  // elements need x < W - last.
  bool coverable(std::int64_t remaining) const {
    const std::int64_t last = chosen_.back();
    for (std::int64_t x = 1; x <= n_; ++x) {
      const std::int64_t have = cnt_[x];
      if (have >= g_) continue;
      auto lo = std::upper_bound(chosen_.begin(), chosen_.end(), last - x);
      auto hi = std::upper_bound(lo, chosen_.end(), w_ - x);
      std::int64_t with_current = hi - lo;
      std::int64_t both_future = x < w_ - last ? remaining - 1 : 0;
      if (have + std::min(remaining, with_current + both_future) < g_) {
        return false;
      }
    }
    return true;
  }

  bool viable() const {
    const auto j = static_cast<std::int64_t>(chosen_.size());
    const std::int64_t r = k_ - j;
    // A future element only reaches [1, n] from current elements above
    // last - n.
    const std::int64_t last = chosen_.back();
    const auto near = static_cast<std::int64_t>(
        chosen_.end() -
        std::upper_bound(chosen_.begin(), chosen_.end(), last - n_));
    if (r * near + r * (r - 1) / 2 < deficit_) return false;
    return coverable(r);
  }

  bool dfs() {
    if (!enter()) return false;
    const std::int64_t r = k_ - static_cast<std::int64_t>(chosen_.size());
    if (r == 0) return deficit_ == 0;
    if (!viable()) return false;
    for (std::int64_t y = chosen_.back() + 1; y <= w_ - (r - 1); ++y) {
      place(y);
      if (dfs()) return true;
      unplace();
      if (stopped()) return false;
    }
    return false;
  }

  std::int64_t n_, g_, w_, k_;
  std::vector<std::int64_t> cnt_;
  std::int64_t deficit_;
  std::vector<std::int64_t> chosen_;
};

// ---------------------------------------------------------------------------
// g-bounded subsets of [1, L] with exactly s elements, 1 fixed.

class AlphaDfs : public DfsBase {
 public:
  AlphaDfs(std::int64_t length, std::int64_t g, std::int64_t s,
           const std::vector<std::int64_t>& best, std::uint64_t cap,
           const LevelControl* control, std::size_t index)
      : DfsBase(cap, control, index), len_(length), g_(g), s_(s),
        best_(best), cnt_(static_cast<std::size_t>(length + 1), 0) {}

  SubtreeOutcome run(std::int64_t second) {
    place(1);
    bool found = place(second) && dfs();
    return outcome(found, chosen_);
  }

 private:
  bool place(std::int64_t y) {
    for (std::int64_t c : chosen_) {
      if (cnt_[y - c] >= g_) return false;
    }
    for (std::int64_t c : chosen_) ++cnt_[y - c];
    chosen_.push_back(y);
    return true;
  }

  void unplace() {
    std::int64_t y = chosen_.back();
    chosen_.pop_back();
    for (std::int64_t c : chosen_) --cnt_[y - c];
  }

  bool dfs() {
    if (!enter()) return false;
    const std::int64_t r = s_ - static_cast<std::int64_t>(chosen_.size());
    if (r == 0) return true;
    const std::int64_t last = chosen_.back();
    // The remaining elements form a g-bounded set in (last, L].
    if (r > best_[static_cast<std::size_t>(len_ - last)]) return false;
    for (std::int64_t y = last + 1; y <= len_ - (r - 1); ++y) {
      if (r - 1 > best_[static_cast<std::size_t>(len_ - y)]) break;
      if (!place(y)) continue;
      if (dfs()) return true;
      unplace();
      if (stopped()) return false;
    }
    return false;
  }

  std::int64_t len_, g_, s_;
  const std::vector<std::int64_t>& best_;
  std::vector<std::int64_t> cnt_;
  std::vector<std::int64_t> chosen_;
};

// ---------------------------------------------------------------------------
// g-difference bases of F_p^k with exactly s elements, 0 fixed.

class VsDfs : public DfsBase {
 public:
  VsDfs(const std::vector<std::int64_t>& sub, std::int64_t order,
        std::int64_t g, std::int64_t s, std::uint64_t cap,
        const LevelControl* control, std::size_t index)
      : DfsBase(cap, control, index), sub_(sub), q_(order), g_(g), s_(s),
        cnt_(static_cast<std::size_t>(order), 0), deficit_((order - 1) * g) {}

  SubtreeOutcome run(std::int64_t second) {
    place(0);
    place(second);
    bool found = dfs();
    return outcome(found, chosen_);
  }

 private:
  void bump(std::int64_t x, int delta) {
    if (delta > 0) {
      if (cnt_[x] < g_) --deficit_;
      ++cnt_[x];
    } else {
      --cnt_[x];
      if (cnt_[x] < g_) ++deficit_;
    }
  }

  void place(std::int64_t y) {
    for (std::int64_t c : chosen_) {
      bump(sub_[y * q_ + c], 1);
      bump(sub_[c * q_ + y], 1);
    }
    chosen_.push_back(y);
  }

  void unplace() {
    std::int64_t y = chosen_.back();
    chosen_.pop_back();
    for (std::int64_t c : chosen_) {
      bump(sub_[y * q_ + c], -1);
      bump(sub_[c * q_ + y], -1);
    }
  }

  bool dfs() {
    if (!enter()) return false;
    const auto j = static_cast<std::int64_t>(chosen_.size());
    const std::int64_t r = s_ - j;
    if (r == 0) return deficit_ == 0;
    if (2 * (r * j + r * (r - 1) / 2) < deficit_) return false;
    // A future element is the first entry of at most one ordered pair with
    // difference x and the second entry of at most one.
    for (std::int64_t x = 1; x < q_; ++x) {
      if (cnt_[x] + 2 * r < g_) return false;
    }
    for (std::int64_t y = chosen_.back() + 1; y <= q_ - 1 - (r - 1); ++y) {
      place(y);
      if (dfs()) return true;
      unplace();
      if (stopped()) return false;
    }
    return false;
  }

  const std::vector<std::int64_t>& sub_;
  std::int64_t q_, g_, s_;
  std::vector<std::int64_t> cnt_;
  std::int64_t deficit_;
  std::vector<std::int64_t> chosen_;
};

std::uint64_t remaining_budget(const SearchOptions& opts, std::uint64_t used) {
  return used >= opts.budget ? 0 : opts.budget - used;
}

GroupedSet eta_incumbent(std::int64_t n, std::int64_t g, std::int64_t window) {
  GroupedSet grid = normalize(translate_union(lemma2_basis(n), g));
  if (grid.vec().back() <= window) return grid;
  std::vector<Element> all;
  for (std::int64_t x = 0; x <= window; ++x) all.push_back(x);
  GroupedSet full(GroupSpec::integers(), std::move(all));
  if (is_g_diff_basis(full, Domain::interval(1, n),
                      static_cast<std::uint64_t>(g)).ok) {
    return full;
  }
  return GroupedSet(GroupSpec::integers(), {});
}

// Lexicographic k-subsets of an index range, as the oracle enumerates them.
class Combinations {
 public:
  Combinations(int n, int k) : n_(n), idx_(static_cast<std::size_t>(k)) {
    for (int i = 0; i < k; ++i) idx_[i] = i;
    valid_ = k <= n;
  }
  bool valid() const { return valid_; }
  const std::vector<int>& get() const { return idx_; }
  void next() {
    const int k = static_cast<int>(idx_.size());
    int i = k - 1;
    while (i >= 0 && idx_[i] == n_ - k + i) --i;
    if (i < 0) {
      valid_ = false;
      return;
    }
    ++idx_[i];
    for (int j = i + 1; j < k; ++j) idx_[j] = idx_[j - 1] + 1;
  }

 private:
  int n_;
  std::vector<int> idx_;
  bool valid_ = true;
};

}  // namespace

std::int64_t default_eta_window(std::int64_t n, std::int64_t g) {
  ProblemInstance::make(n, g);
  const GroupedSet grid = normalize(translate_union(lemma2_basis(n), g));
  return std::max(2 * n, grid.vec().back());
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kOptimal:
      return "optimal";
    case SearchStatus::kOptimalWithinWindow:
      return "optimal-within-window";
    case SearchStatus::kBudgetExhausted:
      return "budget-exhausted";
  }
  return "unknown";
}

SearchResult eta_exact(std::int64_t n, std::int64_t g, std::int64_t window,
                       const SearchOptions& opts) {
  SearchResult res;
  res.kind = "eta";
  res.instance = ProblemInstance::make(n, g);
  const std::int64_t w = window == 0 ? default_eta_window(n, g) : window;
  if (w < n) throw InputError("window must be >= n");
  res.window = w;

  const std::int64_t lower = eta_lower(n, g);
  const Domain targets = Domain::interval(1, n);
  for (std::int64_t k = lower; k <= w + 1; ++k) {
    if (k * (k - 1) / 2 < g * n) continue;
    const std::uint64_t remaining = remaining_budget(opts, res.nodes);
    // Subtrees are the lexicographically ordered prefixes of the second and
    // third elements (just the second when k = 2).
    std::vector<std::array<std::int64_t, 2>> prefixes;
    const std::int64_t depth = k >= 3 ? 2 : 1;
    for (std::int64_t a = 1; a <= w - k + 2; ++a) {
      if (depth == 1) {
        prefixes.push_back({a, 0});
        continue;
      }
      for (std::int64_t b = a + 1; b <= w - k + 3; ++b) prefixes.push_back({a, b});
    }
    LevelOutcome level = run_level(
        prefixes.size(),
        [&](std::size_t i, std::uint64_t cap, const LevelControl* control) {
          EtaDfs dfs(n, g, w, k, cap, control, i);
          return dfs.run(std::span<const std::int64_t>(
              prefixes[i].data(), static_cast<std::size_t>(depth)));
        },
        remaining, opts.threads);
    res.nodes += level.nodes;
    if (level.exhausted || (remaining == 0 && !level.found)) {
      res.status = SearchStatus::kBudgetExhausted;
      res.witness = eta_incumbent(n, g, w);
      res.optimum = static_cast<std::int64_t>(res.witness.size());
      return res;
    }
    if (level.found) {
      res.witness = GroupedSet(GroupSpec::integers(), std::move(level.witness));
      if (!is_g_diff_basis(res.witness, targets,
                           static_cast<std::uint64_t>(g)).ok) {
        throw InternalError("search witness failed verification");
      }
      res.optimum = k;
      res.status = k == lower ? SearchStatus::kOptimal
                              : SearchStatus::kOptimalWithinWindow;
      return res;
    }
  }
  throw InputError("no " + std::to_string(g) + "-difference basis for [" +
                   std::to_string(n) + "] fits in [0, " + std::to_string(w) +
                   "]");
}

SearchResult eta_exact_confirmed(std::int64_t n, std::int64_t g,
                                 std::int64_t window,
                                 const SearchOptions& opts) {
  SearchResult res = eta_exact(n, g, window, opts);
  if (res.status == SearchStatus::kBudgetExhausted) return res;
  const std::int64_t wider = std::max(3 * n, res.window);
  SearchResult wide = eta_exact(n, g, wider, opts);
  if (wide.status != SearchStatus::kBudgetExhausted) {
    res.window_stable = wide.optimum == res.optimum;
  }
  return res;
}

SearchResult alpha_exact(std::int64_t n, std::int64_t g,
                         const SearchOptions& opts) {
  SearchResult res;
  res.kind = "alpha";
  res.instance = ProblemInstance::make(n, g);
  res.status = SearchStatus::kOptimal;

  // best[L] = alpha_g(L) for the lengths settled so far.
  std::vector<std::int64_t> best(static_cast<std::size_t>(n + 1), 0);
  best[1] = 1;
  std::vector<Element> witness{1};

  auto search = [&](std::int64_t length, std::int64_t s,
                    LevelOutcome& out) -> bool {
    if (s == 1) {
      out.found = true;
      out.witness = {1};
      return true;
    }
    const std::uint64_t remaining = remaining_budget(opts, res.nodes);
    const auto count = static_cast<std::size_t>(length - 1);
    out = run_level(
        count,
        [&](std::size_t i, std::uint64_t cap, const LevelControl* control) {
          AlphaDfs dfs(length, g, s, best, cap, control, i);
          return dfs.run(static_cast<std::int64_t>(i) + 2);
        },
        remaining, opts.threads);
    res.nodes += out.nodes;
    return !(out.exhausted || (remaining == 0 && !out.found));
  };

  auto exhausted = [&] {
    res.status = SearchStatus::kBudgetExhausted;
    res.witness = alpha_lower_construct(n, g).witness;
    res.optimum = static_cast<std::int64_t>(res.witness.size());
    return res;
  };

  bool have_witness_for_n = n == 1;
  for (std::int64_t len = 2; len <= n; ++len) {
    const std::int64_t s = best[len - 1] + 1;
    best[len] = best[len - 1];
    if (s * (s - 1) / 2 > g * (len - 1) || s > alpha_upper(len, g)) continue;
    LevelOutcome level;
    if (!search(len, s, level)) return exhausted();
    if (level.found) {
      best[len] = s;
      if (len == n) {
        witness = std::move(level.witness);
        have_witness_for_n = true;
      }
    }
  }
  if (!have_witness_for_n) {
    LevelOutcome level;
    if (!search(n, best[n], level)) return exhausted();
    if (!level.found) throw InternalError("alpha witness disappeared");
    witness = std::move(level.witness);
  }

  res.witness = GroupedSet(GroupSpec::integers(), std::move(witness));
  res.optimum = best[n];
  if (!is_g_bounded(res.witness, static_cast<std::uint64_t>(g)).ok ||
      res.witness.vec().back() > n ||
      static_cast<std::int64_t>(res.witness.size()) != res.optimum) {
    throw InternalError("alpha witness failed verification");
  }
  return res;
}

SearchResult eta_vs_exact(std::int64_t p, int k, std::int64_t g,
                          const SearchOptions& opts, std::int64_t group_cap) {
  const GroupSpec spec = GroupSpec::vector(p, k);
  const std::int64_t q = spec.order();
  if (q > group_cap) {
    throw CapacityError("exact vector search is limited to groups of order " +
                        std::to_string(group_cap));
  }
  SearchResult res;
  res.kind = "eta_vs";
  res.instance = ProblemInstance::make(q, g);
  res.group = spec;
  res.status = SearchStatus::kOptimal;
  res.witness = GroupedSet(spec, {});
  if (g > q) throw InputError("g exceeds the group order");

  std::vector<std::int64_t> sub(static_cast<std::size_t>(q * q));
  for (std::int64_t a = 0; a < q; ++a) {
    for (std::int64_t b = 0; b < q; ++b) sub[a * q + b] = spec.sub(a, b);
  }
  std::int64_t lower = q >= 2 ? 2 : 1;
  while (lower * (lower - 1) < g * (q - 1)) ++lower;

  if (q == 1) {
    res.witness = GroupedSet(spec, {0});
    res.optimum = 1;
    return res;
  }
  for (std::int64_t s = lower; s <= q; ++s) {
    const std::uint64_t remaining = remaining_budget(opts, res.nodes);
    const auto count = static_cast<std::size_t>(q - s + 1);
    LevelOutcome level = run_level(
        count,
        [&](std::size_t i, std::uint64_t cap, const LevelControl* control) {
          VsDfs dfs(sub, q, g, s, cap, control, i);
          return dfs.run(static_cast<std::int64_t>(i) + 1);
        },
        remaining, opts.threads);
    res.nodes += level.nodes;
    if (level.exhausted || (remaining == 0 && !level.found)) {
      res.status = SearchStatus::kBudgetExhausted;
      if (g == 1 && p != 2) {
        res.witness = vs_basis(p, k);
      } else {
        std::vector<Element> all;
        for (std::int64_t x = 0; x < q; ++x) all.push_back(x);
        res.witness = GroupedSet(spec, std::move(all));
      }
      res.optimum = static_cast<std::int64_t>(res.witness.size());
      return res;
    }
    if (level.found) {
      res.witness = GroupedSet(spec, std::move(level.witness));
      res.optimum = s;
      if (!is_g_diff_basis(res.witness, Domain::nonzero(spec),
                           static_cast<std::uint64_t>(g)).ok) {
        throw InternalError("vector search witness failed verification");
      }
      return res;
    }
  }
  throw InternalError("whole group is not a g-difference basis");
}

SearchResult brute_force_oracle(const OracleParams& params) {
  SearchResult res;
  res.status = SearchStatus::kOptimal;
  const std::int64_t g = params.g;

  // Universe of free elements and the fixed elements added to every subset.
  GroupSpec spec = GroupSpec::integers();
  std::vector<Element> universe;
  std::vector<Element> fixed;
  std::function<bool(const GroupedSet&)> accept;
  std::int64_t size_lo = 1;
  std::int64_t size_hi = 1;
  bool ascending = true;

  switch (params.kind) {
    case OracleKind::kEta: {
      res.kind = "eta";
      res.instance = ProblemInstance::make(params.n, g);
      const std::int64_t w = params.window == 0
                                 ? default_eta_window(params.n, g)
                                 : params.window;
      if (w < params.n) throw InputError("window must be >= n");
      res.window = w;
      for (std::int64_t x = 1; x <= w; ++x) universe.push_back(x);
      fixed = {0};
      const Domain targets = Domain::interval(1, params.n);
      accept = [targets, g](const GroupedSet& a) {
        return is_g_diff_basis(a, targets, static_cast<std::uint64_t>(g)).ok;
      };
      size_lo = 1;
      size_hi = w + 1;
      break;
    }
    case OracleKind::kAlpha: {
      res.kind = "alpha";
      res.instance = ProblemInstance::make(params.n, g);
      for (std::int64_t x = 1; x <= params.n; ++x) universe.push_back(x);
      accept = [g](const GroupedSet& a) {
        return is_g_bounded(a, static_cast<std::uint64_t>(g)).ok;
      };
      size_lo = 1;
      size_hi = params.n;
      ascending = false;
      break;
    }
    case OracleKind::kEtaVs: {
      res.kind = "eta_vs";
      spec = GroupSpec::vector(params.p, params.k);
      res.instance = ProblemInstance::make(spec.order(), g);
      for (std::int64_t x = 1; x < spec.order(); ++x) universe.push_back(x);
      fixed = {0};
      const Domain targets = Domain::nonzero(spec);
      accept = [targets, g, spec](const GroupedSet& a) {
        if (targets.empty()) return true;
        return is_g_diff_basis(a, targets, static_cast<std::uint64_t>(g)).ok;
      };
      size_lo = 1;
      size_hi = spec.order();
      break;
    }
  }
  res.group = spec;
  if (universe.size() > static_cast<std::size_t>(kOracleUniverseCap)) {
    throw CapacityError("oracle universe exceeds " +
                        std::to_string(kOracleUniverseCap) + " elements");
  }

  const auto nfixed = static_cast<std::int64_t>(fixed.size());
  for (std::int64_t step = 0; step <= size_hi - size_lo; ++step) {
    const std::int64_t size = ascending ? size_lo + step : size_hi - step;
    const std::int64_t free = size - nfixed;
    if (free < 0 || free > static_cast<std::int64_t>(universe.size())) continue;
    for (Combinations c(static_cast<int>(universe.size()), static_cast<int>(free));
         c.valid(); c.next()) {
      ++res.nodes;
      std::vector<Element> xs = fixed;
      for (int i : c.get()) xs.push_back(universe[static_cast<std::size_t>(i)]);
      GroupedSet candidate(spec, std::move(xs));
      if (accept(candidate)) {
        res.witness = std::move(candidate);
        res.optimum = size;
        if (params.kind == OracleKind::kEta) {
          res.status = size == eta_lower(params.n, g)
                           ? SearchStatus::kOptimal
                           : SearchStatus::kOptimalWithinWindow;
        }
        return res;
      }
    }
  }
  throw InputError("no feasible set in the oracle universe");
}

nlohmann::ordered_json to_json(const SearchResult& r) {
  nlohmann::ordered_json j;
  j["kind"] = r.kind;
  j["n"] = r.instance.n;
  j["g"] = r.instance.g;
  j["group"] = group_to_json(r.group);
  j["optimum"] = r.optimum;
  auto w = nlohmann::ordered_json::array();
  for (Element x : r.witness) w.push_back(element_to_json(r.witness.spec(), x));
  j["witness"] = std::move(w);
  j["status"] = to_string(r.status);
  j["nodes"] = r.nodes;
  if (r.kind == "eta") j["window"] = r.window;
  if (r.window_stable) j["window_stable"] = *r.window_stable;
  return j;
}

}  // namespace diffbasis
