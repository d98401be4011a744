#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hyperfuzz/core.hpp"
#include "hyperfuzz/explore.hpp"
#include "hyperfuzz/fuzzy.hpp"

namespace testutil {

inline hyperfuzz::HyperGroupoid make_table(int n, const std::vector<std::uint32_t>& masks) {
  std::vector<hyperfuzz::ElementSet> table;
  table.reserve(masks.size());
  for (std::uint32_t m : masks) table.push_back(hyperfuzz::ElementSet::from_bits(m));
  return hyperfuzz::HyperGroupoid(hyperfuzz::default_names(n), std::move(table));
}

// x o y = {x}
inline hyperfuzz::HyperGroupoid left_zero(int n) {
  std::vector<std::uint32_t> masks;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) masks.push_back(1u << x);
  }
  return make_table(n, masks);
}

// x o y = {y}
inline hyperfuzz::HyperGroupoid right_zero(int n) {
  std::vector<std::uint32_t> masks;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) masks.push_back(1u << y);
  }
  return make_table(n, masks);
}

// x o y = H
inline hyperfuzz::HyperGroupoid full_table(int n) {
  const std::uint32_t all = (1u << n) - 1u;
  return make_table(n, std::vector<std::uint32_t>(static_cast<std::size_t>(n) * n, all));
}

inline hyperfuzz::ElementSet set_of(std::initializer_list<int> indices) {
  hyperfuzz::ElementSet s;
  for (int i : indices) s.insert(hyperfuzz::Element{i});
  return s;
}

inline hyperfuzz::FuzzySubset make_fuzzy(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& fractions) {
  std::vector<hyperfuzz::Grade> grades;
  grades.reserve(fractions.size());
  for (const auto& [p, q] : fractions) grades.push_back(hyperfuzz::grade(p, q));
  return hyperfuzz::FuzzySubset(std::move(grades));
}

inline hyperfuzz::ElementSet random_nonempty_subset(int n, hyperfuzz::SplitMix64& rng) {
  const std::uint64_t choices = (std::uint64_t{1} << n) - 1;
  return hyperfuzz::ElementSet::from_bits(static_cast<std::uint32_t>(1 + rng.bounded(choices)));
}

}  // namespace testutil
