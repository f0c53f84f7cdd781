#include "nnequiv/check.hpp"

namespace nnequiv {

using nlohmann::ordered_json;

CheckStatus CheckOutcome::status() const {
    switch (verdict.kind) {
    case VerdictKind::Unsat:
        return CheckStatus::Equivalent;
    case VerdictKind::Sat:
        if (certification && std::holds_alternative<Counterexample>(*certification)) {
            return CheckStatus::NotEquivalent;
        }
        return CheckStatus::SoundnessFailure;
    case VerdictKind::Timeout:
    case VerdictKind::MemOut:
    case VerdictKind::Unknown:
    case VerdictKind::SolverError:
        return CheckStatus::Inconclusive;
    }
    return CheckStatus::Inconclusive;
}

CheckOutcome run_check(const Network& net_a, const Network& net_b, const CheckOptions& options) {
    CheckOutcome out{build_query(net_a, net_b, options.relation, options.query), {}, std::nullopt};
    out.verdict = run_solver(out.query, options.solver);
    if (out.verdict.kind == VerdictKind::Sat) {
        out.certification = certify(net_a, net_b, options.relation, out.verdict.model);
    }
    return out;
}

ordered_json vector_to_json(const Vector& v) {
    ordered_json arr = ordered_json::array();
    for (const Rational& r : v) {
        arr.push_back({{"exact", r.to_string()}, {"decimal", r.to_decimal(9)}});
    }
    return arr;
}

namespace {

ordered_json network_json(const Network& net, const std::string& path) {
    ordered_json j;
    j["name"] = net.name;
    j["path"] = path;
    j["params"] = param_count(net);
    j["inputs"] = net.input_dim;
    j["outputs"] = net.output_dim();
    return j;
}

}  // namespace

ordered_json make_report(const Network& net_a, const Network& net_b, const CheckOutcome& outcome,
                         const ReportContext& context) {
    const QueryMetadata& meta = outcome.query.meta;
    const Verdict& verdict = outcome.verdict;

    ordered_json r;
    r["tool"] = "nnequiv";
    r["relation"] = {
        {"kind", std::string(to_string(meta.relation.kind))},
        {"epsilon", meta.relation.epsilon ? ordered_json(meta.relation.epsilon->to_string()) : ordered_json(nullptr)},
        {"k", meta.relation.k ? ordered_json(*meta.relation.k) : ordered_json(nullptr)},
    };
    r["networks"] = {{"a", network_json(net_a, context.path_a)}, {"b", network_json(net_b, context.path_b)}};
    const VariableCounts& c = meta.counts;
    r["variables"] = {{"inputs", c.inputs},         {"internal_a", c.internal_a}, {"internal_b", c.internal_b},
                      {"relation_aux", c.relation_aux}, {"outputs_a", c.outputs_a},   {"outputs_b", c.outputs_b},
                      {"total", c.total()}};
    r["bounds_asserted"] = meta.bounds_asserted;
    r["grid_mode"] = meta.grid_mode;
    r["verdict"] = std::string(to_string(verdict.kind));
    r["detail"] = verdict.detail;
    r["seconds"] = verdict.seconds;
    r["timeout_seconds"] = context.timeout_seconds;
    r["memory_limit_mib"] = verdict.memory_limit_mib ? ordered_json(*verdict.memory_limit_mib) : ordered_json(nullptr);
    r["solver"] = context.solver_identity;
    r["query_file"] = verdict.query_path ? ordered_json(*verdict.query_path) : ordered_json(nullptr);

    ordered_json warnings = ordered_json::array();
    for (const auto& w : meta.warnings) {
        warnings.push_back(w);
    }
    for (const auto& w : verdict.warnings) {
        warnings.push_back(w);
    }
    r["warnings"] = std::move(warnings);

    if (!outcome.certification) {
        r["certification"] = "not-applicable";
        r["counterexample"] = nullptr;
    } else if (const auto* cex = std::get_if<Counterexample>(&*outcome.certification)) {
        r["certification"] = "certified";
        r["counterexample"] = {
            {"input", vector_to_json(cex->input)},
            {"outputs_a", vector_to_json(cex->outputs_a)},
            {"outputs_b", vector_to_json(cex->outputs_b)},
            {"witness", cex->witness},
            {"bounds_respected", cex->bounds_respected},
        };
    } else {
        const auto& rej = std::get<Rejection>(*outcome.certification);
        r["certification"] = "rejected";
        r["counterexample"] = {
            {"input", vector_to_json(rej.input)},
            {"outputs_a", vector_to_json(rej.outputs_a)},
            {"outputs_b", vector_to_json(rej.outputs_b)},
            {"witness", rej.reason},
            {"bounds_respected", nullptr},
        };
    }
    r["exit_code"] = static_cast<int>(outcome.status());
    return r;
}

}  // namespace nnequiv
