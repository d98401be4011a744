#include "hyperfuzz/core.hpp"

#include <algorithm>
#include <map>

namespace hyperfuzz {

namespace {

bool valid_name(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (c == ':' || c == '{' || c == '}') return false;
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v') return false;
  }
  return true;
}

}  // namespace

HyperGroupoid::HyperGroupoid(std::vector<std::string> names, std::vector<ElementSet> table)
    : n_(static_cast<int>(names.size())), names_(std::move(names)), table_(std::move(table)) {
  if (n_ == 0) {
    throw BuildError(BuildErrorKind::empty_carrier, "carrier must be nonempty");
  }
  if (n_ > kMaxCarrierSize) {
    throw BuildError(BuildErrorKind::carrier_too_large,
                     "carrier size " + std::to_string(n_) + " exceeds the limit of " +
                         std::to_string(kMaxCarrierSize));
  }
  for (const auto& name : names_) {
    if (!valid_name(name)) {
      throw BuildError(BuildErrorKind::invalid_name, "invalid element name '" + name + "'");
    }
  }
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (names_[static_cast<std::size_t>(i)] == names_[static_cast<std::size_t>(j)]) {
        throw BuildError(BuildErrorKind::duplicate_name,
                         "duplicate element name '" + names_[static_cast<std::size_t>(i)] + "'");
      }
    }
  }
  if (table_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_)) {
    throw BuildError(BuildErrorKind::missing_cell,
                     "table must have exactly n*n cells, got " + std::to_string(table_.size()));
  }
  const ElementSet all = ElementSet::full(n_);
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) {
      const ElementSet c = table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(n_) +
                                  static_cast<std::size_t>(y)];
      const std::string where =
          "(" + names_[static_cast<std::size_t>(x)] + "," + names_[static_cast<std::size_t>(y)] + ")";
      if (c.empty()) {
        throw BuildError(BuildErrorKind::empty_cell, "cell " + where + " is empty");
      }
      if (!c.subset_of(all)) {
        throw BuildError(BuildErrorKind::unknown_element,
                         "cell " + where + " references an element outside the carrier");
      }
    }
  }
}

std::optional<Element> HyperGroupoid::find(std::string_view token) const {
  for (int i = 0; i < n_; ++i) {
    if (names_[static_cast<std::size_t>(i)] == token) return Element{i};
  }
  return std::nullopt;
}

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    names.emplace_back(1, static_cast<char>('a' + i));
  }
  return names;
}

HyperGroupoid build_hypergroupoid(const std::vector<std::string>& names,
                                  const std::vector<CellSpec>& cells) {
  if (names.empty()) {
    throw BuildError(BuildErrorKind::empty_carrier, "carrier must be nonempty");
  }
  const int n = static_cast<int>(names.size());
  if (n > kMaxCarrierSize) {
    throw BuildError(BuildErrorKind::carrier_too_large,
                     "carrier size " + std::to_string(n) + " exceeds the limit of " +
                         std::to_string(kMaxCarrierSize));
  }
  // Names must be unambiguous before any cell token can be resolved.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (names[static_cast<std::size_t>(i)] == names[static_cast<std::size_t>(j)]) {
        throw BuildError(BuildErrorKind::duplicate_name,
                         "duplicate element name '" + names[static_cast<std::size_t>(i)] + "'");
      }
    }
  }

  auto resolve = [&](const std::string& token) -> Element {
    for (int i = 0; i < n; ++i) {
      if (names[static_cast<std::size_t>(i)] == token) return Element{i};
    }
    throw BuildError(BuildErrorKind::unknown_element, "unknown element '" + token + "'");
  };

  // Filled cells tracked separately so missing vs duplicate is reported
  // under the right name.
  std::vector<bool> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
  std::vector<ElementSet> table(seen.size());

  for (const CellSpec& spec : cells) {
    const Element x = resolve(spec.x);
    const Element y = resolve(spec.y);
    const std::size_t idx =
        static_cast<std::size_t>(x.index) * static_cast<std::size_t>(n) +
        static_cast<std::size_t>(y.index);
    const std::string where = "(" + spec.x + "," + spec.y + ")";
    if (seen[idx]) {
      throw BuildError(BuildErrorKind::duplicate_cell, "cell " + where + " given twice");
    }
    if (spec.members.empty()) {
      throw BuildError(BuildErrorKind::empty_cell, "cell " + where + " is empty");
    }
    ElementSet value;
    for (const std::string& m : spec.members) {
      value.insert(resolve(m));
    }
    seen[idx] = true;
    table[idx] = value;
  }

  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!seen[static_cast<std::size_t>(x) * static_cast<std::size_t>(n) +
                static_cast<std::size_t>(y)]) {
        throw BuildError(BuildErrorKind::missing_cell,
                         "cell (" + names[static_cast<std::size_t>(x)] + "," +
                             names[static_cast<std::size_t>(y)] + ") is missing");
      }
    }
  }

  return HyperGroupoid(names, std::move(table));
}

ElementSet hyperop(const HyperGroupoid& h, Element x, Element y) { return h.cell(x, y); }

ElementSet star(const HyperGroupoid& h, ElementSet a, ElementSet b) {
  if (a.empty() || b.empty()) {
    throw EmptyOperand("the induced product is defined on nonempty subsets only");
  }
  if (!a.subset_of(h.universe()) || !b.subset_of(h.universe())) {
    throw CarrierMismatch("operand is not a subset of the carrier");
  }
  ElementSet out;
  for (Element x : a) {
    for (Element y : b) {
      out |= h.cell(x, y);
    }
  }
  return out;
}

PairSet preimage_pairs(const HyperGroupoid& h, Element a) {
  PairSet ps;
  for (Element y : h.elements()) {
    for (Element z : h.elements()) {
      if (h.cell(y, z).contains(a)) ps.pairs.emplace_back(y, z);
    }
  }
  return ps;
}

CheckReport is_hypersemigroup(const HyperGroupoid& h) {
  for (Element x : h.elements()) {
    for (Element y : h.elements()) {
      for (Element z : h.elements()) {
        const ElementSet lhs = star(h, h.cell(x, y), ElementSet::single(z));
        const ElementSet rhs = star(h, ElementSet::single(x), h.cell(y, z));
        if (lhs != rhs) {
          CheckReport report;
          report.pass = false;
          report.witness = AssocWitness{x, y, z, lhs, rhs};
          return report;
        }
      }
    }
  }
  return CheckReport{};
}

}  // namespace hyperfuzz
