#ifndef LGCAT_CLI_HPP
#define LGCAT_CLI_HPP

#include <string>
#include <vector>

namespace lgcat {

struct CliResult {
    int exit_code = 0;   // 0 ok, 1 math violation, 2 parse error, 3 resource cap
    std::string output;  // JSON report
};

// Full command dispatch; args exclude the program name.
CliResult run_command(const std::vector<std::string>& args);

} // namespace lgcat

#endif
