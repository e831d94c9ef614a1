#ifndef VERMA_CLI_HPP
#define VERMA_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace verma
{

// Exit statuses of the command-line driver.
enum ExitStatus : int {
    exit_ok = 0,
    exit_not_singular = 1,
    exit_bad_input = 2,
    exit_parse_failure = 3,
    exit_not_weight_vector = 4,
};

// Runs one command; args excludes the program name. The payload goes to
// out, diagnostics to err.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace verma

#endif
