#pragma once

#include <optional>

#include "hyperfuzz/fuzzy.hpp"
#include "hyperfuzz/report.hpp"

namespace hyperfuzz {

// Each predicate is decided by two independent routes. The definition
// route sweeps tuples in lexicographic index order and stops at the
// first counterexample; the characterization route builds the
// composition inequality and reports the first element where it fails.
// The routes share no shortcut: their agreement is the point.

/// u in x o y implies f(u) >= f(x); equivalently f o 1 <= f.
CheckReport check_right_ideal(const HyperGroupoid& h, const FuzzySubset& f, Method method);

/// u in x o y implies f(u) >= f(y); equivalently 1 o f <= f.
CheckReport check_left_ideal(const HyperGroupoid& h, const FuzzySubset& f, Method method);

/// x in b o s and x in t o c imply f(x) >= min{f(b), f(c)};
/// equivalently (f o 1) ^ (1 o f) <= f. Needs no associativity.
CheckReport check_quasi_ideal(const HyperGroupoid& h, const FuzzySubset& f, Method method);

/// u in (x o y) * {z} implies f(u) >= min{f(x), f(z)}; equivalently
/// f o 1 o f <= f. Stated for hypersemigroups only: both methods throw
/// NotAssociative on other carriers.
CheckReport check_bi_ideal(const HyperGroupoid& h, const FuzzySubset& f, Method method);

/// Dispatch by kind.
CheckReport check_ideal(const HyperGroupoid& h, const FuzzySubset& f, IdealKind kind,
                        Method method);

/// Outcome of all applicable definition sweeps for one (h, f).
/// bi is absent when the carrier is not a hypersemigroup.
struct IdealProfile {
  bool associative = false;
  bool right = false;
  bool left = false;
  bool quasi = false;
  std::optional<bool> bi;
};

IdealProfile classify(const HyperGroupoid& h, const FuzzySubset& f);

}  // namespace hyperfuzz
