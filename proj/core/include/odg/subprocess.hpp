#pragma once

#include <string>

namespace odg {

struct CommandResult {
    int exit_code = -1;
    bool timed_out = false;
    std::string output; // captured stdout
};

/// Runs a shell command with its stdout captured, killing the whole
/// process group after timeout_seconds (< 0: no limit).
CommandResult run_command(const std::string & command, double timeout_seconds);

/// Creates a fresh private directory for one solver run.
std::string make_temp_dir(const std::string & prefix);

} // namespace odg
