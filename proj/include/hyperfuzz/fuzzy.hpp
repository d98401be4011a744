#pragma once

#include <vector>

#include "hyperfuzz/core.hpp"
#include "hyperfuzz/grade.hpp"

namespace hyperfuzz {

/// A total map from a carrier into [0, 1], one exact grade per element.
/// The subset is tied to a carrier only through its size; operations
/// that need the table take the hypergroupoid explicitly.
class FuzzySubset {
public:
  explicit FuzzySubset(std::vector<Grade> grades) : grades_(std::move(grades)) {}

  static FuzzySubset constant(int n, Grade value) {
    return FuzzySubset(std::vector<Grade>(static_cast<std::size_t>(n), value));
  }

  int size() const { return static_cast<int>(grades_.size()); }
  Grade at(Element e) const { return grades_.at(static_cast<std::size_t>(e.index)); }
  const std::vector<Grade>& grades() const { return grades_; }

  friend bool operator==(const FuzzySubset&, const FuzzySubset&) = default;

private:
  std::vector<Grade> grades_;
};

/// The greatest element of the pointwise order: every element maps to 1.
FuzzySubset constant_one(const HyperGroupoid& h);

/// Pointwise order: f(x) <= g(x) everywhere.
bool leq(const FuzzySubset& f, const FuzzySubset& g);

/// Pointwise minimum; the infimum of f and g in the pointwise order.
FuzzySubset meet(const FuzzySubset& f, const FuzzySubset& g);

/// Sup-min composition: at each a, the maximum of min{f(y), g(z)} over
/// the pairs (y, z) whose cell contains a, and exact 0 when there are
/// none. Finite carrier, so the supremum is a maximum.
FuzzySubset compose(const HyperGroupoid& h, const FuzzySubset& f, const FuzzySubset& g);

/// (f o g) o k, which equals f o (g o k) when the carrier is a
/// hypersemigroup. Refuses other carriers rather than silently picking
/// a bracketing.
FuzzySubset compose3(const HyperGroupoid& h, const FuzzySubset& f, const FuzzySubset& g,
                     const FuzzySubset& k);

}  // namespace hyperfuzz
