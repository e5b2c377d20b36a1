#pragma once

// Batch driver: check, recognize, enumerate, search, fca. Pure function of
// its arguments and input files; all output goes through the given streams.

#include <ostream>
#include <string>
#include <vector>

namespace wdl {

// args excludes the program name. Exit codes: 0 success/pass/exhausted,
// 1 axiom failure or non-Boolean, 2 input or usage error, 3 internal
// cross-check failure, 4 budget exceeded, 10 search counterexample.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace wdl
