#include <cstdio>

#include "lgcat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    lgcat::CliResult res = lgcat::run_command(args);
    std::fputs(res.output.c_str(), stdout);
    return res.exit_code;
}
