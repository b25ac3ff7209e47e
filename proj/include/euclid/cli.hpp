#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace euclid::cli {

// Batch front end over the kernel. Subcommands: pi, measure, ratio, sum,
// axioms. Exit codes: 0 success, 2 bad input, 3 precision budget exhausted,
// 4 axiom failures detected. The EUCLID_PRECISION_CAP environment variable
// bounds internal refinement (in bits of working precision).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace euclid::cli
