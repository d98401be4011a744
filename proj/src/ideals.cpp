#include "hyperfuzz/ideals.hpp"

namespace hyperfuzz {

namespace {

void require_on_carrier(const HyperGroupoid& h, const FuzzySubset& f) {
  if (f.size() != h.size()) {
    throw CarrierMismatch("fuzzy subset has " + std::to_string(f.size()) +
                          " grades but the carrier has " + std::to_string(h.size()) +
                          " elements");
  }
}

CheckReport pass_report(IdealKind kind, Method method) {
  CheckReport r;
  r.kind = kind;
  r.method = method;
  return r;
}

CheckReport fail_report(IdealKind kind, Method method, Witness w) {
  CheckReport r;
  r.pass = false;
  r.kind = kind;
  r.method = method;
  r.witness = std::move(w);
  return r;
}

// First element (ascending) where lhs exceeds f, i.e. where lhs <= f fails.
CheckReport bound_check(IdealKind kind, const FuzzySubset& lhs, const FuzzySubset& f) {
  for (int i = 0; i < f.size(); ++i) {
    const Element a{i};
    if (f.at(a) < lhs.at(a)) {
      return fail_report(kind, Method::characterization, BoundWitness{a, lhs.at(a), f.at(a)});
    }
  }
  return pass_report(kind, Method::characterization);
}

CheckReport one_sided_definition(const HyperGroupoid& h, const FuzzySubset& f, IdealKind kind) {
  for (Element x : h.elements()) {
    for (Element y : h.elements()) {
      const Grade bound = kind == IdealKind::right ? f.at(x) : f.at(y);
      for (Element u : h.cell(x, y)) {
        if (f.at(u) < bound) {
          return fail_report(kind, Method::definition, OneSidedWitness{x, y, u, f.at(u), bound});
        }
      }
    }
  }
  return pass_report(kind, Method::definition);
}

void require_hypersemigroup(const HyperGroupoid& h) {
  if (!is_hypersemigroup(h).pass) {
    throw NotAssociative("the bi-ideal predicate is stated for hypersemigroups only");
  }
}

}  // namespace

CheckReport check_right_ideal(const HyperGroupoid& h, const FuzzySubset& f, Method method) {
  require_on_carrier(h, f);
  if (method == Method::definition) {
    return one_sided_definition(h, f, IdealKind::right);
  }
  return bound_check(IdealKind::right, compose(h, f, constant_one(h)), f);
}

CheckReport check_left_ideal(const HyperGroupoid& h, const FuzzySubset& f, Method method) {
  require_on_carrier(h, f);
  if (method == Method::definition) {
    return one_sided_definition(h, f, IdealKind::left);
  }
  return bound_check(IdealKind::left, compose(h, constant_one(h), f), f);
}

CheckReport check_quasi_ideal(const HyperGroupoid& h, const FuzzySubset& f, Method method) {
  require_on_carrier(h, f);
  if (method == Method::definition) {
    for (Element x : h.elements()) {
      for (Element b : h.elements()) {
        for (Element s : h.elements()) {
          if (!h.cell(b, s).contains(x)) continue;
          for (Element t : h.elements()) {
            for (Element c : h.elements()) {
              if (!h.cell(t, c).contains(x)) continue;
              if (f.at(x) < min(f.at(b), f.at(c))) {
                return fail_report(IdealKind::quasi, Method::definition,
                                   QuasiWitness{x, b, s, t, c, f.at(x), f.at(b), f.at(c)});
              }
            }
          }
        }
      }
    }
    return pass_report(IdealKind::quasi, Method::definition);
  }
  const FuzzySubset one = constant_one(h);
  return bound_check(IdealKind::quasi, meet(compose(h, f, one), compose(h, one, f)), f);
}

CheckReport check_bi_ideal(const HyperGroupoid& h, const FuzzySubset& f, Method method) {
  require_on_carrier(h, f);
  require_hypersemigroup(h);
  if (method == Method::definition) {
    for (Element x : h.elements()) {
      for (Element y : h.elements()) {
        for (Element z : h.elements()) {
          const ElementSet reach = star(h, h.cell(x, y), ElementSet::single(z));
          const Grade bound = min(f.at(x), f.at(z));
          for (Element u : reach) {
            if (f.at(u) < bound) {
              return fail_report(IdealKind::bi, Method::definition,
                                 BiWitness{x, y, z, u, f.at(u), f.at(x), f.at(z)});
            }
          }
        }
      }
    }
    return pass_report(IdealKind::bi, Method::definition);
  }
  const FuzzySubset one = constant_one(h);
  return bound_check(IdealKind::bi, compose3(h, f, one, f), f);
}

CheckReport check_ideal(const HyperGroupoid& h, const FuzzySubset& f, IdealKind kind,
                        Method method) {
  switch (kind) {
    case IdealKind::right: return check_right_ideal(h, f, method);
    case IdealKind::left: return check_left_ideal(h, f, method);
    case IdealKind::quasi: return check_quasi_ideal(h, f, method);
    case IdealKind::bi: return check_bi_ideal(h, f, method);
  }
  throw Error("unreachable ideal kind");
}

IdealProfile classify(const HyperGroupoid& h, const FuzzySubset& f) {
  require_on_carrier(h, f);
  IdealProfile profile;
  profile.associative = is_hypersemigroup(h).pass;
  profile.right = check_right_ideal(h, f, Method::definition).pass;
  profile.left = check_left_ideal(h, f, Method::definition).pass;
  profile.quasi = check_quasi_ideal(h, f, Method::definition).pass;
  if (profile.associative) {
    profile.bi = check_bi_ideal(h, f, Method::definition).pass;
  }
  return profile;
}

}  // namespace hyperfuzz
