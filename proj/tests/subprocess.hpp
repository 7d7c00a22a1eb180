#pragma once

#include <array>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

namespace testutil {

struct CommandResult {
    int exit_code = -1;
    std::string out;
};

/// Runs `prune_bench <args>` through the shell, capturing stdout only.
inline CommandResult run_bench(const std::string& args) {
    const std::string cmd = std::string(PRUNE_BENCH_EXE) + " " + args + " 2>/dev/null";
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) throw std::runtime_error("popen failed: " + cmd);
    CommandResult r;
    std::array<char, 4096> buf{};
    while (const auto n = std::fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

/// Drops the lines that carry wall-clock timings.
inline std::string strip_timing(const std::string& text) {
    std::string out;
    std::size_t start = 0;
    while (start < text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        const auto line = text.substr(start, end - start);
        if (line.find("elapsed:") == std::string::npos && line.find("\"duration_ms\"") == std::string::npos) {
            out += line;
            out += '\n';
        }
        start = end + 1;
    }
    return out;
}

} // namespace testutil
