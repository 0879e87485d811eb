#ifndef FROBGRAPH_CLI_HPP
#define FROBGRAPH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace frobgraph {

// Exit codes of the command line front end.
enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitInputError = 2 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frobgraph

#endif  // FROBGRAPH_CLI_HPP
