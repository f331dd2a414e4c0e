#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shascope {

// Exit codes of the sha-scope front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 2,
  kExitBudget = 3,
  kExitUsage = 64,
  kExitInternal = 70,
};

// Runs one CLI invocation; args excludes the program name. JSON goes to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shascope
