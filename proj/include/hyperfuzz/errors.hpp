#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyperfuzz {

/// Base class for every error raised by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class BuildErrorKind {
  empty_carrier,
  duplicate_name,
  invalid_name,
  carrier_too_large,
  missing_cell,
  duplicate_cell,
  empty_cell,
  unknown_element,
};

/// Raised when a hypergroupoid table cannot be assembled.
class BuildError : public Error {
public:
  BuildError(BuildErrorKind kind, const std::string& msg) : Error(msg), kind(kind) {}
  BuildErrorKind kind;
};

enum class GradeErrorKind {
  out_of_range,
  zero_denominator,
};

class GradeError : public Error {
public:
  GradeError(GradeErrorKind kind, const std::string& msg) : Error(msg), kind(kind) {}
  GradeErrorKind kind;
};

/// Two fuzzy subsets (or a subset and a table) live on carriers of
/// different sizes.
class CarrierMismatch : public Error {
public:
  using Error::Error;
};

/// The induced set product is defined on nonempty subsets only.
class EmptyOperand : public Error {
public:
  using Error::Error;
};

/// An operation that presumes associativity was given a table that
/// fails the hypersemigroup identity.
class NotAssociative : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget, const std::string& msg)
      : Error(msg), required(required), budget(budget) {}
  std::uint64_t required;
  std::uint64_t budget;
};

/// A verification scope violates its own invariants (e.g. sampling
/// without a seed, or a theorem that needs the associative-only filter).
class ScopeError : public Error {
public:
  using Error::Error;
};

enum class ParseErrorKind {
  syntax,
  unknown_element,
  missing_cell,
  duplicate_cell,
  empty_set,
  missing_element,
  duplicate_element,
  grade_out_of_range,
};

/// Positioned diagnostic for the .hg / .fz text formats.
/// Lines and columns are 1-based.
class ParseError : public Error {
public:
  ParseError(ParseErrorKind kind, int line, int col, const std::string& msg)
      : Error(msg), kind(kind), line(line), col(col) {}
  ParseErrorKind kind;
  int line;
  int col;
};

}  // namespace hyperfuzz
