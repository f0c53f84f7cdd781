#pragma once

#include <string>

#include "nnequiv/check.hpp"

namespace nnequiv::testing {

/// Solver chosen at configure time.
SolverConfig test_solver(double timeout_seconds = 120.0);

std::string cli_path();
std::string fixture(const std::string& file);
std::string golden(const std::string& file);

/// Sat verdicts seen and certification rejections among them, across every
/// call to checked_run in this process.
struct SatTally {
    std::size_t sat = 0;
    std::size_t rejected = 0;
};
SatTally sat_tally();

/// run_check plus bookkeeping in the tally.
CheckOutcome checked_run(const Network& a, const Network& b, const EquivalenceRelation& rel,
                         const SolverConfig& solver, const QueryOptions& query = {});

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

/// Runs a shell command, capturing stdout and stderr together.
CommandResult run_command(const std::string& command);

}  // namespace nnequiv::testing
