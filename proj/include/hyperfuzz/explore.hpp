#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperfuzz/fuzzy.hpp"
#include "hyperfuzz/ideals.hpp"

namespace hyperfuzz {

/// Ceiling on how many instances any single enumeration or verification
/// run may visit. Overridable through the HYPERFUZZ_BUDGET environment
/// variable (a positive integer).
inline constexpr std::uint64_t kDefaultInstanceBudget = 2'000'000;

std::uint64_t instance_budget();

/// Deterministic 64-bit generator (splitmix64). Streams are split per
/// instance with split_seed, so partitioned runs reproduce byte-identical
/// reports regardless of scheduling.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform value in [0, m), m > 0.
  std::uint64_t bounded(std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * m) >> 64);
  }

private:
  std::uint64_t state_;
};

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t lane);

/// Yields every total table of nonempty cells on n elements exactly
/// once: cells in row-major order, each counting through nonempty
/// subsets in bitmask order, last cell fastest. The first table is
/// all-cells-{first element}; the tables come out in lexicographic
/// order of their cell-mask tuples.
class HypergroupoidEnumerator {
public:
  explicit HypergroupoidEnumerator(int n);  // throws BudgetExceeded

  std::optional<HyperGroupoid> next();
  std::uint64_t total() const { return total_; }

private:
  int n_;
  std::uint64_t total_;
  std::vector<std::uint32_t> digits_;
  bool done_ = false;
};

/// Yields all (k+1)^n grade assignments over the grid {0, 1/k, ..., 1},
/// lexicographically: constant 0 first, constant 1 last.
class FuzzySubsetEnumerator {
public:
  FuzzySubsetEnumerator(const HyperGroupoid& h, int k);  // throws BudgetExceeded

  std::optional<FuzzySubset> next();
  std::uint64_t total() const { return total_; }

private:
  int n_;
  int k_;
  std::uint64_t total_;
  std::vector<int> digits_;
  bool done_ = false;
};

/// Deterministic function of (n, k, seed): cells uniform over nonempty
/// subsets, grades uniform over the grid.
std::pair<HyperGroupoid, FuzzySubset> random_instance(int n, int k, std::uint64_t seed);

enum class Mode { exhaustive, sampled };

/// An instance space for theorem verification: which carriers and which
/// fuzzy subsets, and how they are visited.
struct VerificationScope {
  int carrier_size = 2;
  int grid = 2;  // grades drawn from {0, 1/grid, ..., 1}
  Mode mode = Mode::exhaustive;
  std::uint64_t samples = 0;  // sampled mode only
  std::uint64_t seed = 0;     // sampled mode only; must be explicit
  bool assoc_only = false;
};

enum class TheoremId { t4, t6, t8, t11, p9, note };

const char* theorem_name(TheoremId t);
std::optional<TheoremId> theorem_from_name(std::string_view name);

struct Disagreement {
  std::uint64_t instance_index = 0;
  std::string description;  // rendered instance plus both verdicts
};

struct VerificationReport {
  TheoremId theorem = TheoremId::t4;
  VerificationScope scope;
  std::uint64_t instances_checked = 0;
  std::uint64_t tables_checked = 0;  // tables that passed the scope filter
  std::uint64_t disagreements = 0;
  std::optional<Disagreement> first_disagreement;
  std::chrono::milliseconds wall_time{0};
};

/// Runs the named check over every instance in the scope:
///   T4/T6/T8/T11  definition verdict vs characterization verdict
///   P9            (f o g) o k vs f o (g o k), elementwise exact
///   NOTE          right (or left) definition pass implies bi pass
/// T11, P9 and NOTE require scope.assoc_only. Any disagreement points at
/// an implementation bug, never at the mathematics.
VerificationReport verify_theorem(TheoremId t, const VerificationScope& scope);

/// The relabelled table: element i becomes perm[i].
HyperGroupoid relabel(const HyperGroupoid& h, const std::vector<int>& perm);

/// Minimal cell-mask serialization over all n! relabellings; equal keys
/// exactly on isomorphic tables.
std::string canonical_key(const HyperGroupoid& h);

/// The table's own serialization in the same format; a table represents
/// its isomorphism class iff table_key(h) == canonical_key(h).
std::string table_key(const HyperGroupoid& h);

/// Searchable properties for experiment runs. The *_disagreement probes
/// are expected to come back empty (the theorems are proved); the
/// off-slice probe explores fixed-bracketing behavior where the paper's
/// hypotheses do not hold, with no expected outcome.
enum class PropertyId {
  non_associative_table,
  bi_not_right_not_left,
  t4_disagreement,
  t6_disagreement,
  t8_disagreement,
  t11_disagreement,
  t11_offslice_disagreement,
};

struct FoundInstance {
  HyperGroupoid table;
  std::optional<FuzzySubset> fuzzy;
  std::string note;
};

/// First instance in scope order that witnesses the property, if any.
/// Finding nothing says nothing beyond the scope searched.
std::optional<FoundInstance> find_counterexample(PropertyId id, const VerificationScope& scope);

}  // namespace hyperfuzz
