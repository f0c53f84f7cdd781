#pragma once

#include <optional>
#include <string>
#include <vector>

namespace nnequiv::detail {

struct ProcessResult {
    bool started = false;
    bool timed_out = false;
    int exit_code = -1;  // valid when term_signal == 0
    int term_signal = 0;
    std::string stdout_text;
    std::string stderr_text;
    double seconds = 0.0;
    long max_rss_kib = 0;
};

/// Runs argv in its own process group with stdout/stderr captured.
///
/// stdin is the file at `stdin_path` or /dev/null. At the deadline the whole
/// process group is SIGKILLed; the group is also killed after a normal exit
/// so no descendants outlive the call. `memory_limit_mib` caps the child's
/// address space (RLIMIT_AS).
ProcessResult run_process(const std::vector<std::string>& argv, const std::optional<std::string>& stdin_path,
                          double timeout_seconds, std::optional<std::size_t> memory_limit_mib);

}  // namespace nnequiv::detail
