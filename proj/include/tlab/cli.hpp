#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tlab {

/// Runs `torsion-lab` with the given arguments (args[0] is the program name).
/// Writes one JSON document to `out`; diagnostics go to `err`.
/// Returns 0 on success, 1 when a scenario fails, 2 on bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tlab
