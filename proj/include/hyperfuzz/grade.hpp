#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "hyperfuzz/errors.hpp"

namespace hyperfuzz {

/// An exact membership grade: a rational number in [0, 1], kept in
/// lowest terms so equal values have equal representations. Grades are
/// only ever compared, min'd and max'd, so no arithmetic beyond the
/// reduction at construction is needed.
class Grade {
public:
  constexpr Grade() = default;  // zero

  static Grade of(std::int64_t num, std::int64_t den) {
    if (den == 0) {
      throw GradeError(GradeErrorKind::zero_denominator, "grade denominator is zero");
    }
    if (den < 0 || num < 0 || num > den) {
      throw GradeError(GradeErrorKind::out_of_range,
                       "grade " + std::to_string(num) + "/" + std::to_string(den) +
                           " lies outside [0, 1]");
    }
    const std::int64_t g = std::gcd(num, den);
    Grade r;
    r.num_ = num / g;
    r.den_ = den / g;
    return r;
  }

  static constexpr Grade zero() { return Grade(); }
  static constexpr Grade one() {
    Grade g;
    g.num_ = 1;
    return g;
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  // Representations are unique, so equality is memberwise.
  friend constexpr bool operator==(const Grade& a, const Grade& b) = default;

  friend constexpr std::strong_ordering operator<=>(const Grade& a, const Grade& b) {
    const auto lhs = static_cast<__int128>(a.num_) * b.den_;
    const auto rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
           : lhs > rhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Builds p/q in lowest terms; rejects q = 0 and values outside [0, 1].
inline Grade grade(std::int64_t p, std::int64_t q) { return Grade::of(p, q); }

constexpr const Grade& min(const Grade& a, const Grade& b) { return b < a ? b : a; }
constexpr const Grade& max(const Grade& a, const Grade& b) { return a < b ? b : a; }

/// Renders "0", "1" or "p/q" — exactly the literals the .fz format accepts.
inline std::string to_string(const Grade& g) {
  if (g.den() == 1) return std::to_string(g.num());
  return std::to_string(g.num()) + "/" + std::to_string(g.den());
}

}  // namespace hyperfuzz
