#ifndef SLRSIM_TESTS_RUN_CLI_HPP
#define SLRSIM_TESTS_RUN_CLI_HPP

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace slrsim::testing {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

inline std::string shell_quote(const std::string& arg) {
    std::string out = "'";
    for (const char c : arg) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    out += "'";
    return out;
}

// Runs the CLI binary with the given arguments, capturing stdout; stderr goes
// to /dev/null unless merge_stderr is set.
inline CliResult run_cli(const std::string& binary, const std::vector<std::string>& args,
                         bool merge_stderr = false) {
    std::string command = shell_quote(binary);
    for (const auto& arg : args) command += " " + shell_quote(arg);
    command += merge_stderr ? " 2>&1" : " 2>/dev/null";

    FILE* pipe = ::popen(command.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed for: " + command);
    CliResult result;
    std::array<char, 4096> buffer{};
    std::size_t n = 0;
    while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
        result.output.append(buffer.data(), n);
    }
    const int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace slrsim::testing

#endif  // SLRSIM_TESTS_RUN_CLI_HPP
