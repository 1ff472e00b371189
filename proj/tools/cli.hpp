// Command line front end; main() only forwards to run().
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toricval::cli {

/// Exit codes: 0 Proved or success, 1 Refuted, 2 Unknown, 3 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace toricval::cli
