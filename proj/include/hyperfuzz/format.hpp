#pragma once

#include <string>
#include <string_view>

#include "hyperfuzz/explore.hpp"
#include "hyperfuzz/fuzzy.hpp"

namespace hyperfuzz {

// Line-oriented text formats. `#` starts a comment, blank lines are
// ignored, \n and \r\n both work. Diagnostics carry 1-based positions.
//
// .hg   elements: <tok> <tok> ...
//       <x> <y> : <e1> <e2> ...     one line per ordered pair
//
// .fz   <elem> <grade>              one line per element
//       grades are 0, 1 or p/q; decimals are rejected, not approximated

HyperGroupoid parse_hypergroupoid(std::string_view text);
FuzzySubset parse_fuzzy(std::string_view text, const HyperGroupoid& h);

/// Inverse of parse: cells row-major, members and grades in index
/// order, grades in lowest terms. parse(render(x)) == x.
std::string render_hypergroupoid(const HyperGroupoid& h);
std::string render_fuzzy(const HyperGroupoid& h, const FuzzySubset& f);

/// "{a b}" with members in index order.
std::string render_element_set(const HyperGroupoid& h, ElementSet s);

/// The counterexample block alone: raw grades and set contents so a
/// reader can re-verify against the table by hand.
std::string render_witness(const HyperGroupoid& h, const Witness& witness,
                           std::optional<IdealKind> kind);

/// Plain-text verdict plus witness lines, re-checkable by hand.
std::string render_check_report(const HyperGroupoid& h, const CheckReport& report);

std::string render_ideal_profile(const IdealProfile& profile);

/// Deterministic except for the wall-time line, which include_time
/// suppresses.
std::string render_verification_report(const VerificationReport& report, bool include_time);

}  // namespace hyperfuzz
