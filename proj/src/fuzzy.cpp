#include "hyperfuzz/fuzzy.hpp"

namespace hyperfuzz {

namespace {

void require_same_carrier(const FuzzySubset& f, const FuzzySubset& g) {
  if (f.size() != g.size()) {
    throw CarrierMismatch("fuzzy subsets live on carriers of sizes " +
                          std::to_string(f.size()) + " and " + std::to_string(g.size()));
  }
}

void require_on_carrier(const HyperGroupoid& h, const FuzzySubset& f) {
  if (f.size() != h.size()) {
    throw CarrierMismatch("fuzzy subset has " + std::to_string(f.size()) +
                          " grades but the carrier has " + std::to_string(h.size()) +
                          " elements");
  }
}

}  // namespace

FuzzySubset constant_one(const HyperGroupoid& h) {
  return FuzzySubset::constant(h.size(), Grade::one());
}

bool leq(const FuzzySubset& f, const FuzzySubset& g) {
  require_same_carrier(f, g);
  for (int i = 0; i < f.size(); ++i) {
    if (g.at(Element{i}) < f.at(Element{i})) return false;
  }
  return true;
}

FuzzySubset meet(const FuzzySubset& f, const FuzzySubset& g) {
  require_same_carrier(f, g);
  std::vector<Grade> out;
  out.reserve(f.grades().size());
  for (int i = 0; i < f.size(); ++i) {
    out.push_back(min(f.at(Element{i}), g.at(Element{i})));
  }
  return FuzzySubset(std::move(out));
}

FuzzySubset compose(const HyperGroupoid& h, const FuzzySubset& f, const FuzzySubset& g) {
  require_on_carrier(h, f);
  require_on_carrier(h, g);
  // Walk the table once instead of building each preimage-pair set:
  // every a in y o z sees the candidate min{f(y), g(z)}. Elements whose
  // pair set is empty are never touched and keep the exact 0.
  std::vector<Grade> out(static_cast<std::size_t>(h.size()), Grade::zero());
  for (Element y : h.elements()) {
    for (Element z : h.elements()) {
      const Grade m = min(f.at(y), g.at(z));
      for (Element a : h.cell(y, z)) {
        auto& slot = out[static_cast<std::size_t>(a.index)];
        slot = max(slot, m);
      }
    }
  }
  return FuzzySubset(std::move(out));
}

FuzzySubset compose3(const HyperGroupoid& h, const FuzzySubset& f, const FuzzySubset& g,
                     const FuzzySubset& k) {
  const CheckReport assoc = is_hypersemigroup(h);
  if (!assoc.pass) {
    throw NotAssociative(
        "carrier is not a hypersemigroup; the two bracketings of a triple "
        "composition may differ");
  }
  return compose(h, compose(h, f, g), k);
}

}  // namespace hyperfuzz
