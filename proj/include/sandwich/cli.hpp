// Command-line front end.  Exit codes: 0 success, 1 usage error,
// 2 verification mismatch, 3 cap/budget exhaustion.

#ifndef SANDWICH_CLI_HPP
#define SANDWICH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace sandwich {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace sandwich

#endif  // SANDWICH_CLI_HPP
