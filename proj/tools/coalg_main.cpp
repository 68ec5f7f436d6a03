// Command-line entry point: forwards argv to the shared dispatcher.

#include "coalg/commands.hpp"

#include <cstdio>
#include <vector>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const coalg::CommandResult r = coalg::run_cli(args);
    std::fputs(r.output.c_str(), stdout);
    return r.code;
}
