// nnequiv: command-line front end for neural network equivalence checking.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "nnequiv/check.hpp"
#include "nnequiv/error.hpp"
#include "nnequiv/evaluator.hpp"
#include "nnequiv/float_forward.hpp"
#include "nnequiv/oracle.hpp"
#include "nnequiv/perturbation.hpp"
#include "nnequiv/smtlib.hpp"

using namespace nnequiv;
using nlohmann::ordered_json;

namespace {

constexpr int kUsage = static_cast<int>(CheckStatus::UsageError);

struct RelationArgs {
    std::string relation;
    std::string epsilon;
    std::size_t k = 0;
};

struct SolverArgs {
    std::string solver;
    std::string solver_args = "{query}";
    double timeout = 600.0;
    std::size_t mem_limit = 0;
};

struct GridArgs {
    bool bits = false;
    std::string step;
};

void add_relation_options(CLI::App* cmd, RelationArgs& args) {
    cmd->add_option("--relation", args.relation, "strict, l1, linf, argmax or topk")->required();
    cmd->add_option("--epsilon", args.epsilon, "epsilon for l1/linf, as an exact decimal");
    cmd->add_option("--k", args.k, "k for topk");
}

void add_solver_options(CLI::App* cmd, SolverArgs& args) {
    cmd->add_option("--solver", args.solver, "solver executable (default: $NNEQUIV_SOLVER or z3)");
    cmd->add_option("--solver-args", args.solver_args, "argument template; {query} is the query file")
        ->capture_default_str();
    cmd->add_option("--timeout", args.timeout, "solver time limit in seconds")->capture_default_str();
    cmd->add_option("--mem-limit", args.mem_limit, "solver memory limit in MiB");
}

void add_grid_options(CLI::App* cmd, GridArgs& args) {
    cmd->add_flag("--grid-mode", args.bits, "restrict inputs to {0,1} per feature (test use)");
    cmd->add_option("--grid-step", args.step, "restrict inputs to a grid over each feature's bounds (test use)");
}

Rational parse_decimal_flag(const std::string& text, const char* flag) {
    if (text.find('/') != std::string::npos) {
        throw RangeError(std::string(flag) + " must be a decimal, got '" + text + "'");
    }
    return Rational::parse(text);
}

EquivalenceRelation make_relation(const RelationArgs& args) {
    EquivalenceRelation rel;
    rel.kind = parse_relation_kind(args.relation);
    if (rel.kind == RelationKind::L1 || rel.kind == RelationKind::LInf) {
        if (args.epsilon.empty()) {
            throw RangeError("--epsilon is required for --relation " + args.relation);
        }
        rel.epsilon = parse_decimal_flag(args.epsilon, "--epsilon");
    }
    if (rel.kind == RelationKind::TopK) {
        if (args.k == 0) {
            throw RangeError("--k >= 1 is required for --relation topk");
        }
        rel.k = args.k;
    }
    return rel;
}

SolverConfig make_solver_config(const SolverArgs& args) {
    SolverConfig cfg = SolverConfig::from_environment();
    if (!args.solver.empty()) {
        cfg.executable = args.solver;
    }
    cfg.args_template = args.solver_args;
    cfg.timeout_seconds = args.timeout;
    if (args.mem_limit > 0) {
        cfg.memory_limit_mib = args.mem_limit;
    }
    cfg.check();
    return cfg;
}

// Grid over each feature's (intersected) bounds.
DiscreteDomain make_domain(const Network& a, const Network& b, const GridArgs& args) {
    if (!args.step.empty()) {
        const Rational step = parse_decimal_flag(args.step, "--grid-step");
        std::vector<std::string> warnings;
        const InputBounds bounds = intersect_bounds(a, b, warnings);
        std::vector<std::vector<Rational>> axes;
        for (std::size_t j = 0; j < bounds.size(); ++j) {
            if (!bounds[j]) {
                throw RangeError("--grid-step needs bounds on every feature; feature " + std::to_string(j + 1) +
                                 " is unbounded");
            }
            axes.push_back(DiscreteDomain::grid(1, bounds[j]->lower, bounds[j]->upper, step).values().front());
        }
        return DiscreteDomain(std::move(axes));
    }
    return DiscreteDomain::bits(a.input_dim);
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << contents)) {
        throw Error("cannot write '" + path + "'");
    }
}

std::string join(const Vector& v, bool decimal) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + (decimal ? v[i].to_decimal(9) : v[i].to_string());
    }
    return out;
}

Vector parse_input_vector(const std::string& text) {
    Vector x;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        x.push_back(Rational::parse(item));
    }
    return x;
}

void print_summary(std::ostream& os, const CheckOutcome& outcome) {
    const auto& meta = outcome.query.meta;
    os << "relation: " << describe(meta.relation) << "\n";
    os << "verdict:  " << to_string(outcome.verdict.kind) << " (" << outcome.verdict.seconds << " s)\n";
    if (!outcome.verdict.detail.empty()) {
        os << "detail:   " << outcome.verdict.detail << "\n";
    }
    for (const auto& w : meta.warnings) {
        os << "warning:  " << w << "\n";
    }
    if (!outcome.certification) {
        return;
    }
    if (const auto* cex = std::get_if<Counterexample>(&*outcome.certification)) {
        os << "counterexample (certified" << (cex->bounds_respected ? "" : ", OUTSIDE declared bounds") << "):\n";
        os << "  x  = (" << join(cex->input, false) << ")\n";
        os << "       (" << join(cex->input, true) << ")\n";
        os << "  yA = (" << join(cex->outputs_a, false) << ")\n";
        os << "       (" << join(cex->outputs_a, true) << ")\n";
        os << "  yB = (" << join(cex->outputs_b, false) << ")\n";
        os << "       (" << join(cex->outputs_b, true) << ")\n";
        os << "  witness: " << cex->witness << "\n";
    } else {
        const auto& rej = std::get<Rejection>(*outcome.certification);
        os << "SOUNDNESS FAILURE: solver model does not replay to a violation\n";
        os << "  x  = (" << join(rej.input, false) << ")\n";
        os << "  yA = (" << join(rej.outputs_a, false) << ")\n";
        os << "  yB = (" << join(rej.outputs_b, false) << ")\n";
        os << "  " << rej.reason << "\n";
    }
}

struct CheckArgs {
    std::string model_a;
    std::string model_b;
    RelationArgs relation;
    SolverArgs solver;
    GridArgs grid;
    std::string keep_query;
    std::string report;
    bool drop_relation = false;
};

QueryOptions make_query_options(const Network& a, const Network& b, const CheckArgs& args) {
    QueryOptions q;
    if (args.grid.bits || !args.grid.step.empty()) {
        q.grid = make_domain(a, b, args.grid).values();
    }
    q.drop_relation = args.drop_relation;
    return q;
}

int cmd_check(const CheckArgs& args) {
    const Network a = load_network_file(args.model_a);
    const Network b = load_network_file(args.model_b);
    CheckOptions options{make_relation(args.relation), make_solver_config(args.solver),
                         make_query_options(a, b, args)};
    if (!args.keep_query.empty()) {
        options.solver.keep_query_path = args.keep_query;
    }
    const CheckOutcome outcome = run_check(a, b, options);
    print_summary(std::cout, outcome);
    if (!args.report.empty()) {
        const ReportContext ctx{args.model_a, args.model_b, solver_identity(options.solver),
                                options.solver.timeout_seconds};
        write_file(args.report, make_report(a, b, outcome, ctx).dump(2) + "\n");
    }
    return static_cast<int>(outcome.status());
}

int cmd_encode(const CheckArgs& args, const std::string& output) {
    const Network a = load_network_file(args.model_a);
    const Network b = load_network_file(args.model_b);
    const Query q = build_query(a, b, make_relation(args.relation), make_query_options(a, b, args));
    const std::string text = smtlib::serialize(q);
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        write_file(output, text);
    }
    return 0;
}

int cmd_eval(const std::string& model, const std::string& input, bool show_float) {
    const Network net = load_network_file(model);
    const Vector x = parse_input_vector(input);
    const Vector y = forward(net, x);
    for (std::size_t i = 0; i < y.size(); ++i) {
        std::cout << "y" << (i + 1) << " = " << y[i].to_string() << "  (" << y[i].to_decimal(9) << ")\n";
    }
    if (!within_bounds(net, x)) {
        std::cout << "note: input lies outside the declared bounds\n";
    }
    if (show_float) {
        std::vector<double> xf;
        for (const Rational& r : x) {
            xf.push_back(r.to_double());
        }
        const auto& kernels = kernels::active_kernels();
        const auto yf = FloatNetwork(net).forward(xf, kernels);
        std::cout << "float[" << kernels::to_string(kernels.isa) << "]:";
        for (double v : yf) {
            std::cout << ' ' << v;
        }
        std::cout << "\n";
    }
    return 0;
}

int cmd_oracle(const CheckArgs& args, std::uint64_t budget, unsigned jobs) {
    const Network a = load_network_file(args.model_a);
    const Network b = load_network_file(args.model_b);
    const EquivalenceRelation rel = make_relation(args.relation);
    const DiscreteDomain domain = make_domain(a, b, args.grid);
    const OracleResult r = exhaustive_check(a, b, rel, domain, budget, jobs);
    std::cout << "relation: " << describe(rel) << "\n";
    std::cout << "points:   " << r.points << "\n";
    if (r.equivalent) {
        std::cout << "result:   equivalent on the domain\n";
    } else {
        std::cout << "result:   violated at point #" << *r.index << "\n";
        std::cout << "  x  = (" << join(r.input, false) << ")\n";
        std::cout << "  yA = (" << join(r.outputs_a, false) << ")\n";
        std::cout << "  yB = (" << join(r.outputs_b, false) << ")\n";
        std::cout << "  witness: " << r.witness << "\n";
    }
    if (!args.report.empty()) {
        ordered_json j;
        j["tool"] = "nnequiv-oracle";
        j["relation"] = describe(rel);
        j["points"] = r.points;
        j["equivalent"] = r.equivalent;
        if (!r.equivalent) {
            j["index"] = *r.index;
            j["input"] = vector_to_json(r.input);
            j["outputs_a"] = vector_to_json(r.outputs_a);
            j["outputs_b"] = vector_to_json(r.outputs_b);
            j["witness"] = r.witness;
        }
        write_file(args.report, j.dump(2) + "\n");
    }
    return r.equivalent ? 0 : 1;
}

int cmd_perturb(const std::string& model, PerturbationSpec spec, const std::string& range, bool log_uniform,
                std::string output, std::string changelog) {
    const Network net = load_network_file(model);
    if (!range.empty()) {
        const auto colon = range.find(':');
        if (colon == std::string::npos) {
            throw RangeError("--range must look like lo:hi");
        }
        spec.lower = parse_decimal_flag(range.substr(0, colon), "--range");
        spec.upper = parse_decimal_flag(range.substr(colon + 1), "--range");
    }
    spec.sampling = log_uniform ? MagnitudeSampling::LogUniform : MagnitudeSampling::Uniform;
    const PerturbationResult result = perturb(net, spec);
    if (output.empty()) {
        std::string base = model;
        if (base.size() > 5 && base.ends_with(".json")) {
            base.resize(base.size() - 5);
        }
        output = base + "_pert.json";
    }
    if (changelog.empty()) {
        changelog = output + ".changes.json";
    }
    write_file(output, serialize_network(result.network));
    write_file(changelog, serialize_changelog(spec, result.changes));
    std::cout << "wrote " << output << " (" << result.changes.size() << " change(s)), changelog " << changelog
              << "\n";
    return 0;
}

int cmd_params(const std::vector<std::string>& models) {
    for (const std::string& path : models) {
        const Network net = load_network_file(path);
        if (models.size() == 1) {
            std::cout << param_count(net) << "\n";
        } else {
            std::cout << path << ": " << param_count(net) << "\n";
        }
    }
    return 0;
}

// Manifest: {"checks": [{"a": path, "b": path, "relation": "...", "epsilon": "...", "k": n}, ...]}
int cmd_batch(const std::string& manifest_path, const SolverArgs& solver_args, unsigned jobs,
              const std::string& report) {
    std::ifstream in(manifest_path);
    if (!in) {
        throw ParseError("cannot open manifest '" + manifest_path + "'");
    }
    nlohmann::json manifest;
    try {
        manifest = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed manifest: ") + e.what());
    }
    const auto& checks = manifest.at("checks");
    const SolverConfig solver = make_solver_config(solver_args);
    const std::string identity = solver_identity(solver);

    auto run_one = [&](const nlohmann::json& entry) -> ordered_json {
        RelationArgs rel_args{entry.at("relation").get<std::string>(), entry.value("epsilon", std::string()),
                              entry.value("k", std::size_t{0})};
        const std::string pa = entry.at("a").get<std::string>();
        const std::string pb = entry.at("b").get<std::string>();
        const Network a = load_network_file(pa);
        const Network b = load_network_file(pb);
        const CheckOptions options{make_relation(rel_args), solver, {}};
        const CheckOutcome outcome = run_check(a, b, options);
        return make_report(a, b, outcome, {pa, pb, identity, solver.timeout_seconds});
    };

    std::vector<ordered_json> results(checks.size());
    std::size_t next = 0;
    std::mutex lock;
    auto worker = [&] {
        while (true) {
            std::size_t i;
            {
                std::lock_guard<std::mutex> g(lock);
                if (next >= checks.size()) {
                    return;
                }
                i = next++;
            }
            try {
                results[i] = run_one(checks[i]);
            } catch (const std::exception& e) {
                results[i] = {{"error", e.what()}, {"exit_code", kUsage}};
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::max(1u, jobs); ++w) {
        pool.emplace_back(worker);
    }
    for (auto& t : pool) {
        t.join();
    }

    int worst = 0;
    ordered_json all = ordered_json::array();
    for (auto& r : results) {
        const int code = r.value("exit_code", kUsage);
        std::cout << r.value("verdict", std::string("error")) << "\t" << code << "\n";
        // Usage errors dominate, then soundness, inconclusive, not-equivalent.
        const auto rank = [](int c) { return c == 3 ? 4 : c == 4 ? 3 : c; };
        if (rank(code) > rank(worst)) {
            worst = code;
        }
        all.push_back(std::move(r));
    }
    if (!report.empty()) {
        write_file(report, all.dump(2) + "\n");
    }
    return worst;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nnequiv: SMT-based equivalence checking of feedforward neural networks"};
    app.require_subcommand(1);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "decide whether two networks are equivalent");
    check->add_option("model_a", check_args.model_a, "first model file")->required();
    check->add_option("model_b", check_args.model_b, "second model file")->required();
    add_relation_options(check, check_args.relation);
    add_solver_options(check, check_args.solver);
    add_grid_options(check, check_args.grid);
    check->add_option("--keep-query", check_args.keep_query, "write the SMT-LIB query to this path");
    check->add_option("--report", check_args.report, "write a JSON report to this path");
    check->add_flag("--inject-drop-relation", check_args.drop_relation)->group("");

    CheckArgs encode_args;
    std::string encode_output;
    auto* encode = app.add_subcommand("encode", "write the SMT-LIB query without solving");
    encode->add_option("model_a", encode_args.model_a)->required();
    encode->add_option("model_b", encode_args.model_b)->required();
    add_relation_options(encode, encode_args.relation);
    add_grid_options(encode, encode_args.grid);
    encode->add_option("-o,--output", encode_output, "output path ('-' for stdout)");

    std::string eval_model;
    std::string eval_input;
    bool eval_float = false;
    auto* eval = app.add_subcommand("eval", "evaluate a network exactly on one input");
    eval->add_option("model", eval_model)->required();
    eval->add_option("input", eval_input, "comma-separated decimals")->required();
    eval->add_flag("--float", eval_float, "also print the double-precision cross-check");

    CheckArgs oracle_args;
    std::uint64_t oracle_budget = kDefaultOracleBudget;
    unsigned oracle_jobs = 1;
    auto* oracle = app.add_subcommand("oracle", "exhaustive equivalence check on a finite domain");
    oracle->add_option("model_a", oracle_args.model_a)->required();
    oracle->add_option("model_b", oracle_args.model_b)->required();
    add_relation_options(oracle, oracle_args.relation);
    oracle->add_flag("--bits", oracle_args.grid.bits, "domain {0,1}^n (default)");
    oracle->add_option("--grid-step", oracle_args.grid.step, "grid over each feature's bounds");
    oracle->add_option("--budget", oracle_budget, "maximum number of points")->capture_default_str();
    oracle->add_option("--jobs", oracle_jobs, "worker threads")->capture_default_str();
    oracle->add_option("--report", oracle_args.report, "write a JSON result to this path");

    std::string perturb_model;
    PerturbationSpec perturb_spec;
    std::string perturb_range;
    bool perturb_log = false;
    std::string perturb_output;
    std::string perturb_changelog;
    auto* pert = app.add_subcommand("perturb", "alter a few parameters of a network");
    pert->add_option("model", perturb_model)->required();
    pert->add_option("--count", perturb_spec.count, "number of parameters to change")->capture_default_str();
    pert->add_option("--seed", perturb_spec.seed, "random seed")->capture_default_str();
    pert->add_option("--range", perturb_range, "magnitude interval lo:hi (default 1e-6:1e-1)");
    pert->add_flag("--weights-only", perturb_spec.weights_only, "never touch biases");
    pert->add_flag("--log-uniform", perturb_log, "sample magnitudes log-uniformly");
    pert->add_option("-o,--output", perturb_output, "perturbed model path");
    pert->add_option("--changelog", perturb_changelog, "changelog path");

    std::vector<std::string> params_models;
    auto* params = app.add_subcommand("params", "print parameter counts");
    params->add_option("models", params_models)->required();

    std::string batch_manifest;
    SolverArgs batch_solver;
    unsigned batch_jobs = 1;
    std::string batch_report;
    auto* batch = app.add_subcommand("batch", "run many checks from a JSON manifest");
    batch->add_option("manifest", batch_manifest)->required();
    add_solver_options(batch, batch_solver);
    batch->add_option("--jobs", batch_jobs, "concurrent solver processes")->capture_default_str();
    batch->add_option("--report", batch_report, "write all reports as a JSON array");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (*check) {
            return cmd_check(check_args);
        }
        if (*encode) {
            return cmd_encode(encode_args, encode_output);
        }
        if (*eval) {
            return cmd_eval(eval_model, eval_input, eval_float);
        }
        if (*oracle) {
            return cmd_oracle(oracle_args, oracle_budget, oracle_jobs);
        }
        if (*pert) {
            return cmd_perturb(perturb_model, perturb_spec, perturb_range, perturb_log, perturb_output,
                               perturb_changelog);
        }
        if (*params) {
            return cmd_params(params_models);
        }
        if (*batch) {
            return cmd_batch(batch_manifest, batch_solver, batch_jobs, batch_report);
        }
    } catch (const std::exception& e) {
        std::cerr << "nnequiv: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
