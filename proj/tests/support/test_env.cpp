#include "test_env.hpp"

#include <array>
#include <cstdio>
#include <mutex>
#include <sys/wait.h>

namespace nnequiv::testing {

namespace {

std::mutex tally_lock;
SatTally tally;

}  // namespace

SolverConfig test_solver(double timeout_seconds) {
    SolverConfig cfg;
    cfg.executable = NNEQUIV_TEST_SOLVER;
    cfg.timeout_seconds = timeout_seconds;
    return cfg;
}

std::string cli_path() { return NNEQUIV_CLI_PATH; }
std::string fixture(const std::string& file) { return std::string(NNEQUIV_FIXTURES_DIR) + "/" + file; }
std::string golden(const std::string& file) { return std::string(NNEQUIV_GOLDEN_DIR) + "/" + file; }

SatTally sat_tally() {
    std::lock_guard<std::mutex> g(tally_lock);
    return tally;
}

CheckOutcome checked_run(const Network& a, const Network& b, const EquivalenceRelation& rel,
                         const SolverConfig& solver, const QueryOptions& query) {
    CheckOutcome out = run_check(a, b, CheckOptions{rel, solver, query});
    if (out.verdict.kind == VerdictKind::Sat && !query.drop_relation) {
        std::lock_guard<std::mutex> g(tally_lock);
        ++tally.sat;
        if (out.status() != CheckStatus::NotEquivalent) {
            ++tally.rejected;
        }
    }
    return out;
}

CommandResult run_command(const std::string& command) {
    CommandResult r;
    FILE* pipe = popen((command + " 2>&1").c_str(), "r");
    if (pipe == nullptr) {
        return r;
    }
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.output.append(buf.data(), n);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace nnequiv::testing
