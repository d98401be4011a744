#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperfuzz/element_set.hpp"
#include "hyperfuzz/errors.hpp"
#include "hyperfuzz/report.hpp"

namespace hyperfuzz {

/// All ordered pairs (y, z) with a in y o z for some fixed a, in
/// lexicographic index order.
struct PairSet {
  std::vector<std::pair<Element, Element>> pairs;

  bool empty() const { return pairs.empty(); }
  std::size_t size() const { return pairs.size(); }
  auto begin() const { return pairs.begin(); }
  auto end() const { return pairs.end(); }

  bool contains(Element y, Element z) const {
    for (const auto& [a, b] : pairs) {
      if (a == y && b == z) return true;
    }
    return false;
  }
};

/// A finite hypergroupoid: a carrier of named elements 0..n-1 and a
/// total n x n table assigning each ordered pair a nonempty subset of
/// the carrier. Immutable after construction; every operation on it is
/// a pure function.
class HyperGroupoid {
public:
  /// Validates and adopts a row-major table (cell (x, y) at x*n + y).
  HyperGroupoid(std::vector<std::string> names, std::vector<ElementSet> table);

  int size() const { return n_; }
  ElementRange elements() const { return ElementRange(n_); }
  ElementSet universe() const { return ElementSet::full(n_); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Element e) const { return names_.at(static_cast<std::size_t>(e.index)); }

  /// Index of the element with the given display name, if any.
  std::optional<Element> find(std::string_view token) const;

  ElementSet cell(Element x, Element y) const {
    if (x.index < 0 || x.index >= n_ || y.index < 0 || y.index >= n_) {
      throw std::out_of_range("element index outside the carrier");
    }
    return table_[static_cast<std::size_t>(x.index) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(y.index)];
  }
  const std::vector<ElementSet>& table() const { return table_; }

  friend bool operator==(const HyperGroupoid&, const HyperGroupoid&) = default;

private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<ElementSet> table_;  // row-major
};

/// "a", "b", ... for programmatically generated carriers.
std::vector<std::string> default_names(int n);

/// One table cell given by display names, as read from input.
struct CellSpec {
  std::string x, y;
  std::vector<std::string> members;
};

/// Assembles a hypergroupoid from named cells, checking that the names
/// are sound and the cells cover every ordered pair exactly once.
HyperGroupoid build_hypergroupoid(const std::vector<std::string>& names,
                                  const std::vector<CellSpec>& cells);

/// The table cell x o y.
ElementSet hyperop(const HyperGroupoid& h, Element x, Element y);

/// The induced product on nonempty subsets: the union of a o b over all
/// a in A, b in B. Rejects empty operands.
ElementSet star(const HyperGroupoid& h, ElementSet a, ElementSet b);

/// All pairs (y, z) whose cell contains a; may be empty.
PairSet preimage_pairs(const HyperGroupoid& h, Element a);

/// Checks (x o y) * {z} = {x} * (y o z) for every ordered triple. On
/// failure the report carries the lexicographically first failing
/// triple together with both computed sets.
CheckReport is_hypersemigroup(const HyperGroupoid& h);

}  // namespace hyperfuzz
