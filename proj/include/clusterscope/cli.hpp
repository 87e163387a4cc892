#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace clusterscope {

/// Exit statuses shared by every subcommand.
enum ExitStatus : int {
  kSuccess = 0,
  kNegative = 1,
  kUsage = 2,
  kIndeterminate = 3,
};

/// Runs one command line. `args` excludes the program name. Reads `in` when
/// an input file is omitted or given as "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, char** argv);

}  // namespace clusterscope
