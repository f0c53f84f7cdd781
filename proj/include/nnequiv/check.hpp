#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "nnequiv/counterexample.hpp"
#include "nnequiv/equivalence.hpp"
#include "nnequiv/model.hpp"
#include "nnequiv/relation.hpp"
#include "nnequiv/solver.hpp"

namespace nnequiv {

/// Process exit statuses of the check command.
enum class CheckStatus : int {
    Equivalent = 0,
    NotEquivalent = 1,
    Inconclusive = 2,
    UsageError = 3,
    SoundnessFailure = 4,
};

struct CheckOptions {
    EquivalenceRelation relation;
    SolverConfig solver;
    QueryOptions query;
};

/// Full pipeline result: the query, the solver verdict and, for Sat, the
/// certification by exact replay.
struct CheckOutcome {
    Query query;
    Verdict verdict;
    std::optional<Certification> certification;

    CheckStatus status() const;
};

/// Builds the query, solves it and certifies any counterexample.
/// Throws for dimension/relation errors (see build_query).
CheckOutcome run_check(const Network& net_a, const Network& net_b, const CheckOptions& options);

/// Extra context recorded in the report.
struct ReportContext {
    std::string path_a;
    std::string path_b;
    std::string solver_identity;
    double timeout_seconds = 0.0;
};

/// Machine-readable report; see schemas/check_report.schema.json.
nlohmann::ordered_json make_report(const Network& net_a, const Network& net_b, const CheckOutcome& outcome,
                                   const ReportContext& context);

/// [{"exact": "1/2", "decimal": "0.500000000"}, ...]
nlohmann::ordered_json vector_to_json(const Vector& v);

}  // namespace nnequiv
