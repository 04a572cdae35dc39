#ifndef ARTIN_CLI_HPP
#define ARTIN_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace artin {

// Dispatches one subcommand. Returns 0 on success, 1 when a check command
// verifies negatively, 2 on parse or validation errors (reported on `err`).
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace artin

#endif
