#pragma once

// Minimal popen wrapper for driving the CLI binary from tests.

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include <sys/wait.h>

namespace subprocess {

struct result {
    int status = -1;
    std::string output; // captured stdout
};

inline result run(const std::string& command, bool silence_stderr = true) {
    const std::string full = silence_stderr ? command + " 2>/dev/null" : command;
    FILE* pipe = ::popen(full.c_str(), "r");
    if (pipe == nullptr)
        throw std::runtime_error("popen failed: " + full);
    result res;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0)
        res.output.append(buffer, got);
    const int raw = ::pclose(pipe);
    res.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return res;
}

} // namespace subprocess
