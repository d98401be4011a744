#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperfuzz {

// Exit codes: 0 holds/success, 1 property fails (witness printed),
// 2 input or usage error, 3 internal invariant violation (e.g. the two
// checker methods disagree).

/// Runs one CLI invocation; args excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hyperfuzz
