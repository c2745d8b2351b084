#ifndef ALCOR_CLI_HPP
#define ALCOR_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace alcor {

// Entry point of the `reason` command-line tool.  `args` excludes the program
// name.  Exit codes: 0 query holds / check passes / command succeeded,
// 1 query fails / check fails, 2 usage or parse error, 3 size limit,
// 4 internal invariant violation.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alcor

#endif  // ALCOR_CLI_HPP
