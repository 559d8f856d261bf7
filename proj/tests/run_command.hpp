#ifndef FSIG_TESTS_RUN_COMMAND_HPP
#define FSIG_TESTS_RUN_COMMAND_HPP

// Minimal subprocess helper for tests that drive the command-line tool:
// runs a shell command, captures stdout, and reports the exit code
// (-1 when the process did not exit normally or could not be started).

#include <cstdio>
#include <string>

#include <sys/wait.h>

namespace fsig_tests {

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace fsig_tests

#endif
