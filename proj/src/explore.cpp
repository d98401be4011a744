#include "hyperfuzz/explore.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <numeric>

#include "hyperfuzz/format.hpp"

namespace hyperfuzz {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) return 0;
  if (a > UINT64_MAX / b) return UINT64_MAX;
  return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
  return r;
}

void require_valid_sizes(const VerificationScope& sc) {
  if (sc.carrier_size < 1) throw ScopeError("carrier size must be at least 1");
  if (sc.carrier_size > kMaxCarrierSize) {
    throw ScopeError("carrier size exceeds the limit of " + std::to_string(kMaxCarrierSize));
  }
  if (sc.grid < 1) throw ScopeError("grade grid parameter must be at least 1");
}

HyperGroupoid random_table(int n, SplitMix64& rng) {
  const std::uint64_t cell_choices = (std::uint64_t{1} << n) - 1;  // nonempty masks
  std::vector<ElementSet> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (auto& cell : table) {
    cell = ElementSet::from_bits(static_cast<std::uint32_t>(1 + rng.bounded(cell_choices)));
  }
  return HyperGroupoid(default_names(n), std::move(table));
}

FuzzySubset random_fuzzy(int n, int k, SplitMix64& rng) {
  std::vector<Grade> grades;
  grades.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    grades.push_back(Grade::of(static_cast<std::int64_t>(rng.bounded(static_cast<std::uint64_t>(k) + 1)), k));
  }
  return FuzzySubset(std::move(grades));
}

// Rejection sampling toward the associative slice. Random tables fail
// the identity early, so rejected draws are cheap even where the slice
// is thin (n=3 density is around 7e-4).
constexpr std::uint64_t kMaxRejectionAttempts = 5'000'000;

HyperGroupoid random_associative_table(int n, SplitMix64& rng) {
  for (std::uint64_t attempt = 0; attempt < kMaxRejectionAttempts; ++attempt) {
    HyperGroupoid h = random_table(n, rng);
    if (is_hypersemigroup(h).pass) return h;
  }
  throw Error("rejection sampling found no associative table within " +
              std::to_string(kMaxRejectionAttempts) + " attempts");
}

std::vector<FuzzySubset> grid_subsets(const HyperGroupoid& h, int k) {
  std::vector<FuzzySubset> out;
  FuzzySubsetEnumerator en(h, k);
  out.reserve(static_cast<std::size_t>(en.total()));
  while (auto f = en.next()) out.push_back(std::move(*f));
  return out;
}

struct ScopeStats {
  std::uint64_t instances = 0;
  std::uint64_t tables = 0;
};

// Visits every instance of the scope in its deterministic order:
// exhaustively, tables outermost with fuzzy tuples lexicographic inside;
// sampled, one table plus `arity` fuzzy draws per split seed. The
// callback returns false to stop early.
ScopeStats scan_scope(const VerificationScope& sc, int arity,
                      const std::function<bool(const HyperGroupoid&, const std::vector<FuzzySubset>&)>& fn) {
  require_valid_sizes(sc);
  ScopeStats stats;
  const std::uint64_t budget = instance_budget();

  if (sc.mode == Mode::exhaustive) {
    HypergroupoidEnumerator tables(sc.carrier_size);
    const std::uint64_t per_table =
        sat_pow(sat_pow(static_cast<std::uint64_t>(sc.grid) + 1,
                        static_cast<std::uint64_t>(sc.carrier_size)),
                static_cast<std::uint64_t>(arity));
    const std::uint64_t total = sat_mul(tables.total(), std::max<std::uint64_t>(per_table, 1));
    if (total > budget) {
      throw BudgetExceeded(total, budget,
                           "exhaustive scope has " + std::to_string(total) +
                               " instances, over the budget of " + std::to_string(budget));
    }

    std::vector<FuzzySubset> grid;
    while (auto h = tables.next()) {
      if (sc.assoc_only && !is_hypersemigroup(*h).pass) continue;
      ++stats.tables;
      if (arity == 0) {
        ++stats.instances;
        if (!fn(*h, {})) return stats;
        continue;
      }
      if (grid.empty()) grid = grid_subsets(*h, sc.grid);
      std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
      for (;;) {
        std::vector<FuzzySubset> tuple;
        tuple.reserve(idx.size());
        for (std::size_t i : idx) tuple.push_back(grid[i]);
        ++stats.instances;
        if (!fn(*h, tuple)) return stats;
        // odometer, last position fastest
        int pos = arity - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == grid.size()) {
          idx[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
    return stats;
  }

  if (sc.samples < 1) throw ScopeError("sampled scope needs at least one sample");
  if (sc.samples > budget) {
    throw BudgetExceeded(sc.samples, budget,
                         "sample count exceeds the budget of " + std::to_string(budget));
  }
  for (std::uint64_t i = 0; i < sc.samples; ++i) {
    SplitMix64 rng(split_seed(sc.seed, i));
    HyperGroupoid h = sc.assoc_only ? random_associative_table(sc.carrier_size, rng)
                                    : random_table(sc.carrier_size, rng);
    ++stats.tables;
    std::vector<FuzzySubset> tuple;
    tuple.reserve(static_cast<std::size_t>(arity));
    for (int a = 0; a < arity; ++a) tuple.push_back(random_fuzzy(sc.carrier_size, sc.grid, rng));
    ++stats.instances;
    if (!fn(h, tuple)) return stats;
  }
  return stats;
}

std::string describe_instance(const HyperGroupoid& h, const std::vector<FuzzySubset>& fs) {
  std::string out = render_hypergroupoid(h);
  for (const FuzzySubset& f : fs) {
    out += "--\n";
    out += render_fuzzy(h, f);
  }
  return out;
}

std::string verdict_word(bool pass) { return pass ? "pass" : "fail"; }

using CheckFn = CheckReport (*)(const HyperGroupoid&, const FuzzySubset&, Method);

CheckFn checker_for(TheoremId t) {
  switch (t) {
    case TheoremId::t4: return &check_right_ideal;
    case TheoremId::t6: return &check_left_ideal;
    case TheoremId::t8: return &check_quasi_ideal;
    case TheoremId::t11: return &check_bi_ideal;
    default: return nullptr;
  }
}

}  // namespace

std::uint64_t instance_budget() {
  if (const char* env = std::getenv("HYPERFUZZ_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
      throw Error("HYPERFUZZ_BUDGET must be a positive integer, got '" + std::string(env) + "'");
    }
    return v;
  }
  return kDefaultInstanceBudget;
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t lane) {
  SplitMix64 mixer(seed ^ (0x9e3779b97f4a7c15ull * (lane + 1)));
  return mixer.next();
}

HypergroupoidEnumerator::HypergroupoidEnumerator(int n) : n_(n) {
  if (n < 1) throw ScopeError("carrier size must be at least 1");
  if (n > kMaxCarrierSize) {
    throw ScopeError("carrier size exceeds the limit of " + std::to_string(kMaxCarrierSize));
  }
  const std::uint64_t cell_choices = (std::uint64_t{1} << n) - 1;
  total_ = sat_pow(cell_choices, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));
  const std::uint64_t budget = instance_budget();
  if (total_ > budget) {
    throw BudgetExceeded(total_, budget,
                         "enumerating " + std::to_string(total_) +
                             " tables exceeds the budget of " + std::to_string(budget));
  }
  digits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 1u);
}

std::optional<HyperGroupoid> HypergroupoidEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<ElementSet> table;
  table.reserve(digits_.size());
  for (std::uint32_t d : digits_) table.push_back(ElementSet::from_bits(d));
  HyperGroupoid out(default_names(n_), std::move(table));

  const std::uint32_t cell_max = (1u << n_) - 1u;
  int pos = static_cast<int>(digits_.size()) - 1;
  while (pos >= 0 && digits_[static_cast<std::size_t>(pos)] == cell_max) {
    digits_[static_cast<std::size_t>(pos)] = 1u;
    --pos;
  }
  if (pos < 0) {
    done_ = true;
  } else {
    ++digits_[static_cast<std::size_t>(pos)];
  }
  return out;
}

FuzzySubsetEnumerator::FuzzySubsetEnumerator(const HyperGroupoid& h, int k) : n_(h.size()), k_(k) {
  if (k < 1) throw ScopeError("grade grid parameter must be at least 1");
  total_ = sat_pow(static_cast<std::uint64_t>(k) + 1, static_cast<std::uint64_t>(n_));
  const std::uint64_t budget = instance_budget();
  if (total_ > budget) {
    throw BudgetExceeded(total_, budget,
                         "enumerating " + std::to_string(total_) +
                             " fuzzy subsets exceeds the budget of " + std::to_string(budget));
  }
  digits_.assign(static_cast<std::size_t>(n_), 0);
}

std::optional<FuzzySubset> FuzzySubsetEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<Grade> grades;
  grades.reserve(digits_.size());
  for (int d : digits_) grades.push_back(Grade::of(d, k_));
  FuzzySubset out{std::move(grades)};

  int pos = n_ - 1;
  while (pos >= 0 && digits_[static_cast<std::size_t>(pos)] == k_) {
    digits_[static_cast<std::size_t>(pos)] = 0;
    --pos;
  }
  if (pos < 0) {
    done_ = true;
  } else {
    ++digits_[static_cast<std::size_t>(pos)];
  }
  return out;
}

std::pair<HyperGroupoid, FuzzySubset> random_instance(int n, int k, std::uint64_t seed) {
  if (n < 1 || n > kMaxCarrierSize) {
    throw ScopeError("carrier size must be between 1 and " + std::to_string(kMaxCarrierSize));
  }
  if (k < 1) throw ScopeError("grade grid parameter must be at least 1");
  SplitMix64 rng(split_seed(seed, 0));
  HyperGroupoid h = random_table(n, rng);
  FuzzySubset f = random_fuzzy(n, k, rng);
  return {std::move(h), std::move(f)};
}

const char* theorem_name(TheoremId t) {
  switch (t) {
    case TheoremId::t4: return "T4";
    case TheoremId::t6: return "T6";
    case TheoremId::t8: return "T8";
    case TheoremId::t11: return "T11";
    case TheoremId::p9: return "P9";
    case TheoremId::note: return "NOTE";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "T4") return TheoremId::t4;
  if (upper == "T6") return TheoremId::t6;
  if (upper == "T8") return TheoremId::t8;
  if (upper == "T11") return TheoremId::t11;
  if (upper == "P9") return TheoremId::p9;
  if (upper == "NOTE") return TheoremId::note;
  return std::nullopt;
}

VerificationReport verify_theorem(TheoremId t, const VerificationScope& scope) {
  const bool needs_assoc = t == TheoremId::t11 || t == TheoremId::p9 || t == TheoremId::note;
  if (needs_assoc && !scope.assoc_only) {
    throw ScopeError(std::string(theorem_name(t)) +
                     " is stated for hypersemigroups; the scope needs the associative-only filter");
  }

  VerificationReport report;
  report.theorem = t;
  report.scope = scope;

  std::function<std::optional<std::string>(const HyperGroupoid&, const std::vector<FuzzySubset>&)>
      judge;
  int arity = 1;

  switch (t) {
    case TheoremId::t4:
    case TheoremId::t6:
    case TheoremId::t8:
    case TheoremId::t11: {
      const CheckFn check = checker_for(t);
      judge = [check](const HyperGroupoid& h,
                      const std::vector<FuzzySubset>& fs) -> std::optional<std::string> {
        const bool by_def = check(h, fs[0], Method::definition).pass;
        const bool by_char = check(h, fs[0], Method::characterization).pass;
        if (by_def == by_char) return std::nullopt;
        return "definition says " + verdict_word(by_def) + ", characterization says " +
               verdict_word(by_char) + "\n" + describe_instance(h, fs);
      };
      break;
    }
    case TheoremId::p9: {
      arity = 3;
      judge = [](const HyperGroupoid& h,
                 const std::vector<FuzzySubset>& fs) -> std::optional<std::string> {
        const FuzzySubset lhs = compose(h, compose(h, fs[0], fs[1]), fs[2]);
        const FuzzySubset rhs = compose(h, fs[0], compose(h, fs[1], fs[2]));
        if (lhs == rhs) return std::nullopt;
        std::string detail;
        for (Element a : h.elements()) {
          if (lhs.at(a) != rhs.at(a)) {
            detail = "at " + h.name(a) + ": (f o g) o k = " + to_string(lhs.at(a)) +
                     ", f o (g o k) = " + to_string(rhs.at(a));
            break;
          }
        }
        return detail + "\n" + describe_instance(h, fs);
      };
      break;
    }
    case TheoremId::note: {
      judge = [](const HyperGroupoid& h,
                 const std::vector<FuzzySubset>& fs) -> std::optional<std::string> {
        const bool bi = check_bi_ideal(h, fs[0], Method::definition).pass;
        if (bi) return std::nullopt;
        if (check_right_ideal(h, fs[0], Method::definition).pass) {
          return "fuzzy right ideal but not a fuzzy bi-ideal\n" + describe_instance(h, fs);
        }
        if (check_left_ideal(h, fs[0], Method::definition).pass) {
          return "fuzzy left ideal but not a fuzzy bi-ideal\n" + describe_instance(h, fs);
        }
        return std::nullopt;
      };
      break;
    }
  }

  const auto start = std::chrono::steady_clock::now();
  std::uint64_t index = 0;
  const ScopeStats stats =
      scan_scope(scope, arity, [&](const HyperGroupoid& h, const std::vector<FuzzySubset>& fs) {
        if (auto detail = judge(h, fs)) {
          ++report.disagreements;
          if (!report.first_disagreement) {
            report.first_disagreement = Disagreement{index, std::move(*detail)};
          }
        }
        ++index;
        return true;
      });
  report.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  report.instances_checked = stats.instances;
  report.tables_checked = stats.tables;
  return report;
}

HyperGroupoid relabel(const HyperGroupoid& h, const std::vector<int>& perm) {
  const int n = h.size();
  if (static_cast<int>(perm.size()) != n) {
    throw Error("permutation size does not match the carrier");
  }
  std::vector<bool> hit(static_cast<std::size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[static_cast<std::size_t>(p)]) {
      throw Error("not a permutation of the carrier indices");
    }
    hit[static_cast<std::size_t>(p)] = true;
  }

  auto remap = [&](ElementSet s) {
    ElementSet out;
    for (Element e : s) out.insert(Element{perm[static_cast<std::size_t>(e.index)]});
    return out;
  };

  std::vector<std::string> names(static_cast<std::size_t>(n));
  std::vector<ElementSet> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    names[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
        h.name(Element{i});
  }
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const std::size_t to =
          static_cast<std::size_t>(perm[static_cast<std::size_t>(x)]) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(perm[static_cast<std::size_t>(y)]);
      table[to] = remap(h.cell(Element{x}, Element{y}));
    }
  }
  return HyperGroupoid(std::move(names), std::move(table));
}

std::string canonical_key(const HyperGroupoid& h) {
  const int n = h.size();
  std::uint64_t sweeps = 1;
  for (int i = 2; i <= n; ++i) sweeps = sat_mul(sweeps, static_cast<std::uint64_t>(i));
  const std::uint64_t cost = sat_mul(sweeps, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n));
  const std::uint64_t budget = instance_budget();
  if (cost > budget) {
    throw BudgetExceeded(cost, budget,
                         "canonicalization sweep costs " + std::to_string(cost) +
                             ", over the budget of " + std::to_string(budget));
  }

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint32_t> best;
  std::vector<std::uint32_t> ser(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  do {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        std::uint32_t mask = 0;
        for (Element e : h.cell(Element{x}, Element{y})) {
          mask |= 1u << perm[static_cast<std::size_t>(e.index)];
        }
        ser[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)]) *
                static_cast<std::size_t>(n) +
            static_cast<std::size_t>(perm[static_cast<std::size_t>(y)])] = mask;
      }
    }
    if (best.empty() || ser < best) best = ser;
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::string key;
  for (std::size_t i = 0; i < best.size(); ++i) {
    if (i) key += '.';
    key += std::to_string(best[i]);
  }
  return key;
}

std::string table_key(const HyperGroupoid& h) {
  std::string key;
  for (std::size_t i = 0; i < h.table().size(); ++i) {
    if (i) key += '.';
    key += std::to_string(h.table()[i].bits());
  }
  return key;
}

std::optional<FoundInstance> find_counterexample(PropertyId id, const VerificationScope& scope) {
  std::optional<FoundInstance> found;

  switch (id) {
    case PropertyId::non_associative_table: {
      VerificationScope sc = scope;
      sc.assoc_only = false;
      scan_scope(sc, 0, [&](const HyperGroupoid& h, const std::vector<FuzzySubset>&) {
        const CheckReport rep = is_hypersemigroup(h);
        if (rep.pass) return true;
        const auto& w = std::get<AssocWitness>(*rep.witness);
        found = FoundInstance{h, std::nullopt,
                              "associativity fails at (" + h.name(w.x) + "," + h.name(w.y) + "," +
                                  h.name(w.z) + ")"};
        return false;
      });
      return found;
    }

    case PropertyId::bi_not_right_not_left: {
      VerificationScope sc = scope;
      sc.assoc_only = true;  // bi-ideals presume a hypersemigroup
      scan_scope(sc, 1, [&](const HyperGroupoid& h, const std::vector<FuzzySubset>& fs) {
        if (!check_bi_ideal(h, fs[0], Method::definition).pass) return true;
        if (check_right_ideal(h, fs[0], Method::definition).pass) return true;
        if (check_left_ideal(h, fs[0], Method::definition).pass) return true;
        found = FoundInstance{h, fs[0], "fuzzy bi-ideal that is neither a right nor a left ideal"};
        return false;
      });
      return found;
    }

    case PropertyId::t4_disagreement:
    case PropertyId::t6_disagreement:
    case PropertyId::t8_disagreement:
    case PropertyId::t11_disagreement: {
      TheoremId t = TheoremId::t4;
      if (id == PropertyId::t6_disagreement) t = TheoremId::t6;
      if (id == PropertyId::t8_disagreement) t = TheoremId::t8;
      if (id == PropertyId::t11_disagreement) t = TheoremId::t11;
      VerificationScope sc = scope;
      if (t == TheoremId::t11) sc.assoc_only = true;
      const CheckFn check = checker_for(t);
      scan_scope(sc, 1, [&](const HyperGroupoid& h, const std::vector<FuzzySubset>& fs) {
        const bool by_def = check(h, fs[0], Method::definition).pass;
        const bool by_char = check(h, fs[0], Method::characterization).pass;
        if (by_def == by_char) return true;
        found = FoundInstance{h, fs[0],
                              std::string(theorem_name(t)) + " methods disagree: definition " +
                                  verdict_word(by_def) + ", characterization " +
                                  verdict_word(by_char)};
        return false;
      });
      return found;
    }

    case PropertyId::t11_offslice_disagreement: {
      // Off the associative slice the paper makes no claim. Compare the
      // mechanical membership sweep with the fixed left bracketing
      // (f o 1) o f <= f and report whatever shows up.
      VerificationScope sc = scope;
      sc.assoc_only = false;
      scan_scope(sc, 1, [&](const HyperGroupoid& h, const std::vector<FuzzySubset>& fs) {
        if (is_hypersemigroup(h).pass) return true;
        const FuzzySubset& f = fs[0];
        bool sweep = true;
        for (Element x : h.elements()) {
          for (Element y : h.elements()) {
            for (Element z : h.elements()) {
              const ElementSet reach = star(h, h.cell(x, y), ElementSet::single(z));
              const Grade bound = min(f.at(x), f.at(z));
              for (Element u : reach) {
                if (f.at(u) < bound) sweep = false;
              }
            }
          }
        }
        const FuzzySubset one = constant_one(h);
        const bool bracketed = leq(compose(h, compose(h, f, one), f), f);
        if (sweep == bracketed) return true;
        found = FoundInstance{h, f,
                              std::string("off the associative slice: membership sweep ") +
                                  verdict_word(sweep) + ", (f o 1) o f <= f " +
                                  verdict_word(bracketed)};
        return false;
      });
      return found;
    }
  }
  return found;
}

}  // namespace hyperfuzz
