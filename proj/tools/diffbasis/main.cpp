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

// diffbasis: construct, verify and search difference bases and g-bounded
// sets from the command line.
//
// Exit codes: 0 success or pass, 1 verification failure, 2 bad input,
// 3 search budget exhausted.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "diffbasis/bounds.hpp"
#include "diffbasis/constructions.hpp"
#include "diffbasis/errors.hpp"
#include "diffbasis/finite_field.hpp"
#include "diffbasis/primes.hpp"
#include "diffbasis/profile.hpp"
#include "diffbasis/search.hpp"
#include "diffbasis/set_io.hpp"
#include "diffbasis/table.hpp"

namespace db = diffbasis;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const double v = std::strtod(raw, &end);
  if (*end != '\0' || !(v >= 1.0) || v > 1.8e19 || v != std::floor(v)) {
    throw db::InputError(std::string(name) + " is not a positive integer");
  }
  return static_cast<std::uint64_t>(v);
}

std::uint64_t sieve_cap() {
  return env_cap("DIFFBASIS_SIEVE_CAP", db::kDefaultSieveCap);
}
std::uint64_t field_cap(std::uint64_t fallback) {
  return env_cap("DIFFBASIS_FIELD_CAP", fallback);
}

// Accepts plain integers and exponent notation such as 1e6.
std::int64_t parse_count(const std::string& s) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw db::InputError("'" + s + "' is not a number");
  }
  if (used != s.size() || v != std::floor(v) || v < 1 || v > 4.0e18) {
    throw db::InputError("'" + s + "' is not a positive integer");
  }
  return static_cast<std::int64_t>(v);
}

// Rewrites 1e6-style option values to plain integers before conversion.
const CLI::Validator kCount(
    [](std::string& s) {
      try {
        s = std::to_string(parse_count(s));
        return std::string();
      } catch (const db::InputError& e) {
        return std::string(e.what());
      }
    },
    "COUNT");

std::vector<std::int64_t> parse_count_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw db::InputError("empty entry in list '" + s + "'");
    out.push_back(parse_count(item));
  }
  if (out.empty()) throw db::InputError("empty list");
  return out;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw db::InputError("cannot write " + path);
  f << text;
}

void emit_set(const db::GroupedSet& set, const db::Provenance& prov,
              const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << db::set_to_json(set, prov).dump(2) << '\n';
  } else {
    db::write_set_file(path, set, prov);
  }
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  std::int64_t n = 0;
  std::int64_t g = 1;
  std::int64_t q = 0;
  std::int64_t p = 0;
  int dim = 0;
  std::int64_t v = 6;
  double stretch = 0.05;
  std::string out;
};

std::string interval_text(std::int64_t hi) {
  return "[1, " + std::to_string(hi) + "]";
}

void require(bool ok, const std::string& what) {
  if (!ok) throw db::InputError(what);
}

int run_construct(const ConstructArgs& a) {
  db::Provenance prov;
  prov.construction = a.kind;
  const std::string gtext = std::to_string(a.g);
  std::optional<db::GroupedSet> set;

  if (a.kind == "lemma2") {
    require(a.n >= 1, "--n is required");
    set = db::lemma2_basis(a.n);
    prov.params["n"] = a.n;
    prov.certifies = "1-difference basis for " + interval_text(a.n);
  } else if (a.kind == "translates") {
    require(a.n >= 1, "--n is required");
    set = db::translate_union(db::lemma2_basis(a.n), a.g);
    prov.params["n"] = a.n;
    prov.params["g"] = a.g;
    prov.certifies = gtext + "-difference basis for " + interval_text(a.n);
  } else if (a.kind == "singer") {
    require(a.q >= 2, "--q is required");
    db::SingerSet s =
        db::singer_set(a.q, field_cap(db::kDefaultSingerFieldCap));
    set = s.set;
    prov.params["q"] = a.q;
    prov.certifies = "perfect difference set in Z/" + std::to_string(s.m);
  } else if (a.kind == "bose-chowla") {
    require(a.q >= 2, "--q is required");
    set = db::bose_chowla(a.q, field_cap(db::kDefaultFieldOrderCap));
    prov.params["q"] = a.q;
    prov.certifies = "Sidon set in Z/" + std::to_string(a.q * a.q - 1);
  } else if (a.kind == "quotient") {
    require(a.q >= 2, "--q is required");
    db::QuotientSet s = db::quotient_g_bounded(a.q, a.g);
    set = s.set;
    prov.params["q"] = a.q;
    prov.params["g"] = a.g;
    prov.certifies =
        gtext + "-bounded set in Z/" + std::to_string(s.modulus);
  } else if (a.kind == "parabola") {
    require(a.q >= 3, "--q is required");
    const auto pp = db::prime_power(static_cast<std::uint64_t>(a.q));
    require(pp.has_value(), "--q must be a prime power");
    const auto p = static_cast<std::int64_t>(pp->prime);
    const int k = static_cast<int>(pp->exponent);
    db::FieldCtx ctx = db::build_field(pp->prime, {k});
    set = db::parabola_basis(ctx, db::vs_basis(p, k));
    prov.params["q"] = a.q;
    prov.certifies = "1-difference basis of F_" + std::to_string(p) + "^" +
                     std::to_string(2 * k);
  } else if (a.kind == "product") {
    require(a.n >= 1, "--n is required");
    db::ProductOptions opts;
    opts.v = a.v;
    opts.stretch = a.stretch;
    opts.sieve_cap = sieve_cap();
    opts.field_cap = field_cap(db::kDefaultSingerFieldCap);
    db::ProductPipeline pipe = db::product_pipeline(a.n, a.g, opts);
    set = pipe.set;
    prov.params["n"] = a.n;
    prov.params["g"] = a.g;
    prov.params["v"] = a.v;
    prov.params["q"] = pipe.q;
    prov.params["basis"] = pipe.basis.vec();
    // All q+1 Singer residues are used; q |basis| is the smaller count that
    // would drop one of them.
    prov.params["size_bound"] = (pipe.q + 1) * static_cast<std::int64_t>(pipe.basis.size());
    prov.params["size_bound_without_one_residue"] =
        pipe.q * static_cast<std::int64_t>(pipe.basis.size());
    prov.certifies = gtext + "-difference basis for " +
                     interval_text(pipe.singer.m * pipe.v);
  } else if (a.kind == "vs") {
    require(a.p >= 3, "--p is required");
    require(a.dim >= 1, "--k is required");
    set = db::vs_g_basis(a.p, a.dim, a.g);
    prov.params["p"] = a.p;
    prov.params["k"] = a.dim;
    prov.params["g"] = a.g;
    prov.certifies = gtext + "-difference basis of F_" + std::to_string(a.p) +
                     "^" + std::to_string(a.dim);
  } else {
    throw db::InputError("unknown construction '" + a.kind + "'");
  }
  emit_set(*set, prov, a.out);
  return kExitPass;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string file;
  std::int64_t g = 1;
  std::string target;
  std::string mode = "basis";
};

int run_verify(const VerifyArgs& a) {
  const db::GroupedSet set = db::read_set_file(a.file);
  const auto g = static_cast<std::uint64_t>(a.g);
  if (a.mode == "bounded") {
    if (!a.target.empty()) throw db::InputError("--target applies to basis mode");
    db::BoundedCheck c = db::is_g_bounded(set, g);
    if (c.ok) {
      std::cout << "pass: " << set.size() << " elements, nonzero r in ["
                << c.min_count << ", " << c.max_count << "], bound " << a.g
                << '\n';
      return kExitPass;
    }
    std::cout << "fail: r(" << db::format_element(set.spec(), *c.witness)
              << ") = " << c.witness_count << " > " << a.g << '\n';
    return kExitFail;
  }
  if (a.mode != "basis") throw db::InputError("unknown mode '" + a.mode + "'");

  db::Domain targets = db::Domain::interval(1, 1);
  if (a.target.empty() || a.target == "all-nonzero") {
    if (!set.spec().finite()) {
      throw db::InputError("integer sets need --target n");
    }
    targets = db::Domain::nonzero(set.spec());
  } else {
    const std::int64_t n = parse_count(a.target);
    if (set.spec().finite() && n >= set.spec().order()) {
      throw db::InputError("--target exceeds the group");
    }
    targets = db::Domain::interval(1, n);
  }
  if (targets.size() == 0) {
    std::cout << "pass: no nonzero targets\n";
    return kExitPass;
  }
  db::BasisCheck c = db::is_g_diff_basis(set, targets, g);
  if (c.ok) {
    std::cout << "pass: " << set.size() << " elements, r on targets in ["
              << c.min_count << ", " << c.max_count << "], bound " << a.g
              << '\n';
    return kExitPass;
  }
  std::cout << "fail: r(" << db::format_element(set.spec(), *c.witness)
            << ") = " << c.witness_count << " < " << a.g << '\n';
  return kExitFail;
}

// ---------------------------------------------------------------------------

struct SearchArgs {
  std::string kind;
  std::int64_t n = 0;
  std::int64_t g = 1;
  std::int64_t p = 0;
  int dim = 0;
  std::int64_t window = 0;
  std::string budget = "1e8";
  unsigned threads = 1;
  bool confirm = false;
  std::string out;
};

int run_search(const SearchArgs& a) {
  db::SearchOptions opts;
  opts.budget = static_cast<std::uint64_t>(parse_count(a.budget));
  opts.threads = a.threads;
  if (opts.threads < 1) throw db::InputError("--threads must be >= 1");
  if (a.kind != "eta" && a.window != 0) {
    throw db::InputError("--window applies to eta only");
  }
  if (a.kind != "eta" && a.confirm) {
    throw db::InputError("--confirm applies to eta only");
  }

  db::SearchResult r;
  if (a.kind == "eta") {
    require(a.n >= 1, "--n is required");
    r = a.confirm ? db::eta_exact_confirmed(a.n, a.g, a.window, opts)
                  : db::eta_exact(a.n, a.g, a.window, opts);
  } else if (a.kind == "alpha") {
    require(a.n >= 1, "--n is required");
    r = db::alpha_exact(a.n, a.g, opts);
  } else if (a.kind == "eta-vs") {
    require(a.p >= 2, "--p is required");
    require(a.dim >= 1, "--k is required");
    r = db::eta_vs_exact(a.p, a.dim, a.g, opts);
  } else {
    throw db::InputError("unknown search '" + a.kind + "'");
  }
  std::cout << db::to_json(r).dump() << '\n';
  if (!a.out.empty()) {
    db::Provenance prov;
    prov.construction = "search-" + a.kind;
    prov.params["n"] = r.instance.n;
    prov.params["g"] = r.instance.g;
    prov.params["status"] = db::to_string(r.status);
    prov.certifies = db::to_string(r.status);
    db::write_set_file(a.out, r.witness, prov);
  }
  return r.status == db::SearchStatus::kBudgetExhausted ? kExitBudget
                                                        : kExitPass;
}

// ---------------------------------------------------------------------------

struct TableArgs {
  std::string quantity;
  std::string method;
  std::string n_list;
  std::int64_t g = 1;
  std::int64_t v = 6;
  double stretch = 0.05;
  std::string budget = "1e8";
  unsigned threads = 1;
  std::string out;
};

int run_table(const TableArgs& a) {
  db::TableOptions opts;
  opts.product.v = a.v;
  opts.product.stretch = a.stretch;
  opts.product.sieve_cap = sieve_cap();
  opts.product.field_cap = field_cap(db::kDefaultSingerFieldCap);
  opts.search.budget = static_cast<std::uint64_t>(parse_count(a.budget));
  opts.search.threads = a.threads;
  opts.product.search = opts.search;
  auto rows = db::ratio_table(db::parse_quantity(a.quantity),
                              parse_count_list(a.n_list), a.g,
                              db::parse_table_method(a.method), opts);
  emit(db::table_to_csv(rows), a.out);
  for (const auto& row : rows) {
    if (row.exhausted) return kExitBudget;
  }
  return kExitPass;
}

// ---------------------------------------------------------------------------

struct ProfileArgs {
  std::string file;
  std::string mode = "diff";
  std::optional<std::int64_t> from;
  std::optional<std::int64_t> to;
  std::string out;
};

int run_profile(const ProfileArgs& a) {
  const db::GroupedSet set = db::read_set_file(a.file);
  db::ProfileMode mode;
  if (a.mode == "diff") {
    mode = db::ProfileMode::kDifference;
  } else if (a.mode == "sum") {
    mode = db::ProfileMode::kSum;
  } else {
    throw db::InputError("unknown mode '" + a.mode + "'");
  }
  db::Domain domain = db::Domain::interval(0, 0);
  if (a.to) {
    domain = db::Domain::interval(a.from.value_or(1), *a.to);
  } else if (set.spec().finite()) {
    if (a.from) throw db::InputError("--from needs --to");
    domain = db::Domain::full(set.spec());
  } else {
    throw db::InputError("integer profiles need --to");
  }
  const db::RepProfile prof = mode == db::ProfileMode::kDifference
                                  ? db::diff_profile(set, domain)
                                  : db::sum_profile(set, domain);
  emit(db::profile_to_csv(prof), a.out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Difference bases, g-bounded sets and their bounds"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build and verify a set");
  construct
      ->add_option("kind", ca.kind,
                   "lemma2|translates|singer|bose-chowla|quotient|parabola|"
                   "product|vs")
      ->required();
  construct->add_option("--n", ca.n, "Target interval [1, n]")->transform(kCount);
  construct->add_option("--g", ca.g, "Multiplicity")->check(CLI::PositiveNumber);
  construct->add_option("--q", ca.q, "Prime power");
  construct->add_option("--p", ca.p, "Prime (vs)");
  construct->add_option("--k", ca.dim, "Dimension (vs)");
  construct->add_option("--v", ca.v, "Base interval for product");
  construct->add_option("--stretch", ca.stretch, "Prime search stretch");
  construct->add_option("-o,--out", ca.out, "Output file (default stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a set file");
  verify->add_option("file", va.file)->required();
  verify->add_option("--g", va.g)->check(CLI::PositiveNumber);
  verify->add_option("--target", va.target, "n or all-nonzero");
  verify->add_option("--mode", va.mode, "basis|bounded")
      ->check(CLI::IsMember({"basis", "bounded"}));

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exact search");
  search->add_option("kind", sa.kind, "eta|alpha|eta-vs")
      ->required()
      ->check(CLI::IsMember({"eta", "alpha", "eta-vs"}));
  search->add_option("--n", sa.n)->transform(kCount);
  search->add_option("--g", sa.g)->check(CLI::PositiveNumber);
  search->add_option("--p", sa.p);
  search->add_option("--k", sa.dim);
  search->add_option("--window", sa.window, "Integer window [0, W]");
  search->add_option("--budget", sa.budget, "Node budget");
  search->add_option("--threads", sa.threads);
  search->add_flag("--confirm", sa.confirm, "Re-run with window 3n");
  search->add_option("-o,--out", sa.out, "Write the witness as a set file");

  std::int64_t bn = 0;
  std::int64_t bg = 1;
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds");
  bounds->add_option("--n", bn)->required()->check(CLI::PositiveNumber);
  bounds->add_option("--g", bg)->check(CLI::PositiveNumber);

  TableArgs ta;
  auto* table = app.add_subcommand("table", "Ratio table as CSV");
  table->add_option("quantity", ta.quantity, "eta|alpha")
      ->required()
      ->check(CLI::IsMember({"eta", "alpha"}));
  table->add_option("--method", ta.method, "grid|product|quotient|exact")
      ->required();
  table->add_option("--n", ta.n_list, "Comma separated, 1e4 style allowed")
      ->required();
  table->add_option("--g", ta.g)->check(CLI::PositiveNumber);
  table->add_option("--v", ta.v);
  table->add_option("--stretch", ta.stretch);
  table->add_option("--budget", ta.budget);
  table->add_option("--threads", ta.threads);
  table->add_option("-o,--out", ta.out);

  ProfileArgs pa;
  auto* profile = app.add_subcommand("profile", "Representation counts as CSV");
  profile->add_option("file", pa.file)->required();
  profile->add_option("--mode", pa.mode, "diff|sum")
      ->check(CLI::IsMember({"diff", "sum"}));
  profile->add_option("--from", pa.from);
  profile->add_option("--to", pa.to);
  profile->add_option("-o,--out", pa.out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*construct) return run_construct(ca);
    if (*verify) return run_verify(va);
    if (*search) return run_search(sa);
    if (*bounds) {
      std::cout << db::to_json(db::bound_report(bn, bg)).dump(2) << '\n';
      return kExitPass;
    }
    if (*table) return run_table(ta);
    if (*profile) return run_profile(pa);
  } catch (const db::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFail;
  } catch (const db::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
