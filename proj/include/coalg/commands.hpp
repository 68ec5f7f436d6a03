// String-level command dispatch shared by the command-line tool and the
// Python bindings.  Verbs: product, coproduct, antipode, primitives, dim,
// verify, mobius, convert.  Exit codes: 0 success, 1 parse/domain error,
// 2 verification failure.

#pragma once

#include <string>
#include <vector>

namespace coalg {

struct CommandResult {
    int code = 0;
    std::string output;
};

/// Runs one command; args excludes the program name.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace coalg
