#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "binsum/exact.hpp"

namespace binsum::cli {

/// Executes one CLI invocation (argv without the program name). Reports go
/// to `out` (JSON by default, CSV with --format csv); human-readable
/// summaries and errors go to `err`. Exit code 0 when every check passes,
/// 1 when the emitted report contains a counterexample, 2 on usage or
/// parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

/// Parses the CLI parameter syntax for ring elements: "2", "-7", "1/2",
/// "sqrt:3", "2sqrt:3", "1+2sqrt:3", "1/2-3/4sqrt:5".
QuadElem parse_quad(const std::string& text);

/// "lo..hi" (inclusive) or comma-separated values/subranges: "0..25", "7",
/// "2,6,10", "1..3,9".
std::vector<Integer> parse_range_list(const std::string& text);

}  // namespace binsum::cli
