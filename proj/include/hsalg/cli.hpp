#pragma once

#include <string>
#include <vector>

#include "hsalg/json_io.hpp"

namespace hsalg {

struct CommandResult {
    int exit_code = 0;  // 0 pass, 1 check failed, 2 usage, 3 internal
    Json body;
    std::string human;
};

/// Dispatch a CLI invocation (argv without the program name). Deterministic:
/// equal inputs produce byte-identical JSON bodies.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace hsalg
