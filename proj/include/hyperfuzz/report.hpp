#pragma once

#include <optional>
#include <variant>

#include "hyperfuzz/element_set.hpp"
#include "hyperfuzz/grade.hpp"

namespace hyperfuzz {

/// The two independent routes for deciding an ideal predicate. Their
/// agreement on every input is what the verification harness checks.
enum class Method {
  definition,        // sweep the membership condition itself
  characterization,  // test the composition inequality
};

enum class IdealKind { right, left, quasi, bi };

/// First failing triple of the hypersemigroup identity, with both sides.
struct AssocWitness {
  Element x, y, z;
  ElementSet lhs;  // (x o y) * {z}
  ElementSet rhs;  // {x} * (y o z)
};

/// Right/left ideal counterexample: u in x o y with f(u) < bound,
/// where bound is f(x) for the right check and f(y) for the left one.
struct OneSidedWitness {
  Element x, y, u;
  Grade fu;
  Grade bound;
};

/// Quasi-ideal counterexample: x in b o s and x in t o c with
/// f(x) < min{f(b), f(c)}.
struct QuasiWitness {
  Element x, b, s, t, c;
  Grade fx, fb, fc;
};

/// Bi-ideal counterexample: u in (x o y) * {z} with f(u) < min{f(x), f(z)}.
struct BiWitness {
  Element x, y, z, u;
  Grade fu, fx, fz;
};

/// Characterization counterexample: the element where the composition
/// side exceeds f, with both values.
struct BoundWitness {
  Element a;
  Grade lhs;
  Grade fa;
};

using Witness = std::variant<AssocWitness, OneSidedWitness, QuasiWitness, BiWitness, BoundWitness>;

/// Verdict of a predicate check. A failing report always carries a
/// witness that re-validates against raw table lookups and grades; a
/// passing one never does.
struct CheckReport {
  bool pass = true;
  std::optional<Method> method;     // absent for structural checks
  std::optional<IdealKind> kind;    // absent for structural checks
  std::optional<Witness> witness;
};

}  // namespace hyperfuzz
