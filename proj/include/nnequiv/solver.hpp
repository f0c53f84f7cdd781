#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nnequiv/equivalence.hpp"
#include "nnequiv/formula.hpp"

namespace nnequiv {

/// How to launch an external SMT-LIB 2 solver.
struct SolverConfig {
    /// Executable name or path (looked up on PATH when it has no slash).
    std::string executable;
    /// Whitespace-separated arguments; "{query}" is replaced by the query
    /// file path. Without that token the query is fed on standard input.
    std::string args_template = "{query}";
    /// Wall-clock limit; the solver's process group is killed when it expires.
    double timeout_seconds = 600.0;
    /// Address-space cap for the solver process.
    std::optional<std::size_t> memory_limit_mib;
    /// Persist the emitted query here instead of a temporary file.
    std::optional<std::string> keep_query_path;

    /// Throws RangeError when timeout_seconds <= 0 or executable is empty.
    void check() const;

    /// Default configuration with the executable from NNEQUIV_SOLVER, or
    /// "z3" when the variable is unset.
    static SolverConfig from_environment();
};

enum class VerdictKind { Unsat, Sat, Timeout, MemOut, Unknown, SolverError };

std::string_view to_string(VerdictKind kind);

struct Verdict {
    VerdictKind kind = VerdictKind::SolverError;
    /// Solver model for Sat verdicts.
    Assignment model;
    /// Diagnostic text for SolverError / MemOut / Unknown.
    std::string detail;
    double seconds = 0.0;
    /// Memory limit that applied to the run, if any.
    std::optional<std::size_t> memory_limit_mib;
    /// Where the query was kept, when requested.
    std::optional<std::string> query_path;
    std::vector<std::string> warnings;
};

/// Runs an arbitrary SMT-LIB script and maps the outcome to a Verdict,
/// without checking the model against any formula.
Verdict run_solver_script(const std::string& script, const SolverConfig& config);

/// Serializes the query, runs the solver and parses the result. Every Sat
/// model is substituted back into the query with exact arithmetic; a model
/// that does not satisfy it, or that misses an input, becomes SolverError.
Verdict run_solver(const Query& query, const SolverConfig& config);

/// Checks a model against the query: returns an empty string when every
/// assertion holds, otherwise a description of the failure. Declared
/// variables that occur in no assertion and are absent from the model are
/// filled with 0 (any value satisfies the query).
std::string check_model(const Query& query, Assignment& model);

/// First line of `<solver> --version`, or the executable name if that fails.
std::string solver_identity(const SolverConfig& config);

}  // namespace nnequiv
