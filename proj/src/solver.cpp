#include "nnequiv/solver.hpp"

#include <signal.h>
#include <stdlib.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "nnequiv/error.hpp"
#include "nnequiv/smtlib.hpp"
#include "process.hpp"

namespace nnequiv {

namespace {

bool contains_ci(std::string_view haystack, std::string_view needle) {
    auto it = std::search(haystack.begin(), haystack.end(), needle.begin(), needle.end(), [](char a, char b) {
        return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
    });
    return it != haystack.end();
}

bool mentions_memory_exhaustion(std::string_view text) {
    for (std::string_view pattern : {"out of memory", "bad_alloc", "cannot allocate memory", "memory exhausted",
                                     "memory limit", "memout", "failed to allocate"}) {
        if (contains_ci(text, pattern)) {
            return true;
        }
    }
    return false;
}

// Temporary query file, removed on destruction unless kept.
class QueryFile {
public:
    QueryFile(const std::string& contents, const std::optional<std::string>& keep_path) {
        if (keep_path) {
            path_ = *keep_path;
            keep_ = true;
        } else {
            std::string templ = (std::filesystem::temp_directory_path() / "nnequiv-XXXXXX.smt2").string();
            const int fd = ::mkstemps(templ.data(), 5);
            if (fd < 0) {
                throw Error("cannot create temporary query file");
            }
            ::close(fd);
            path_ = templ;
        }
        std::ofstream out(path_, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error("cannot write query file '" + path_ + "'");
        }
        out << contents;
        if (!out.flush()) {
            throw Error("cannot write query file '" + path_ + "'");
        }
    }
    QueryFile(const QueryFile&) = delete;
    QueryFile& operator=(const QueryFile&) = delete;
    ~QueryFile() {
        if (!keep_) {
            std::error_code ec;
            std::filesystem::remove(path_, ec);
        }
    }

    const std::string& path() const { return path_; }
    bool kept() const { return keep_; }

private:
    std::string path_;
    bool keep_ = false;
};

std::vector<std::string> build_argv(const SolverConfig& config, const std::string& query_path, bool& uses_file) {
    std::vector<std::string> argv{config.executable};
    std::istringstream in(config.args_template);
    std::string token;
    uses_file = false;
    while (in >> token) {
        if (auto pos = token.find("{query}"); pos != std::string::npos) {
            token.replace(pos, 7, query_path);
            uses_file = true;
        }
        argv.push_back(token);
    }
    return argv;
}

std::string tail(const std::string& text, std::size_t max_len = 2000) {
    return text.size() <= max_len ? text : "..." + text.substr(text.size() - max_len);
}

}  // namespace

void SolverConfig::check() const {
    if (executable.empty()) {
        throw RangeError("solver executable is not set");
    }
    if (!(timeout_seconds > 0.0)) {
        throw RangeError("solver timeout must be > 0 seconds");
    }
}

SolverConfig SolverConfig::from_environment() {
    SolverConfig cfg;
    const char* env = std::getenv("NNEQUIV_SOLVER");
    cfg.executable = env != nullptr && *env != '\0' ? env : "z3";
    return cfg;
}

std::string_view to_string(VerdictKind kind) {
    switch (kind) {
    case VerdictKind::Unsat:
        return "unsat";
    case VerdictKind::Sat:
        return "sat";
    case VerdictKind::Timeout:
        return "timeout";
    case VerdictKind::MemOut:
        return "memout";
    case VerdictKind::Unknown:
        return "unknown";
    case VerdictKind::SolverError:
        return "solver-error";
    }
    return "?";
}

Verdict run_solver_script(const std::string& script, const SolverConfig& config) {
    config.check();
    QueryFile file(script, config.keep_query_path);

    bool uses_file = false;
    const auto argv = build_argv(config, file.path(), uses_file);
    const auto proc = detail::run_process(argv, uses_file ? std::nullopt : std::optional<std::string>(file.path()),
                                          config.timeout_seconds, config.memory_limit_mib);

    Verdict v;
    v.seconds = proc.seconds;
    v.memory_limit_mib = config.memory_limit_mib;
    if (file.kept()) {
        v.query_path = file.path();
    }

    if (proc.timed_out) {
        v.kind = VerdictKind::Timeout;
        v.detail = "killed after " + std::to_string(config.timeout_seconds) + " s";
        return v;
    }

    const smtlib::SolverResponse response = smtlib::parse_response(proc.stdout_text);
    const std::string diagnostics = proc.stdout_text + "\n" + proc.stderr_text;

    const bool abnormal = proc.term_signal != 0 || (proc.exit_code != 0 && !response.status);
    if (abnormal && (mentions_memory_exhaustion(diagnostics) ||
                     (config.memory_limit_mib && proc.term_signal != 0))) {
        v.kind = VerdictKind::MemOut;
        v.detail = "solver ran out of memory" +
                   (config.memory_limit_mib ? " (limit " + std::to_string(*config.memory_limit_mib) + " MiB)"
                                            : std::string()) +
                   ": " + tail(proc.stderr_text.empty() ? proc.stdout_text : proc.stderr_text, 400);
        return v;
    }

    if (!response.status) {
        v.kind = VerdictKind::SolverError;
        std::ostringstream msg;
        if (proc.term_signal != 0) {
            msg << "solver killed by signal " << proc.term_signal;
        } else {
            msg << "solver exited with status " << proc.exit_code << " without an answer";
        }
        for (const auto& e : response.errors) {
            msg << "; error: " << e;
        }
        if (!proc.stderr_text.empty()) {
            msg << "; stderr: " << tail(proc.stderr_text);
        }
        v.detail = msg.str();
        return v;
    }

    switch (*response.status) {
    case smtlib::Status::Unsat:
        v.kind = VerdictKind::Unsat;
        return v;
    case smtlib::Status::Unknown:
        if (mentions_memory_exhaustion(diagnostics)) {
            v.kind = VerdictKind::MemOut;
            v.detail = "solver gave up on memory: " + tail(diagnostics, 400);
            return v;
        }
        v.kind = VerdictKind::Unknown;
        v.detail = response.errors.empty() ? "solver answered unknown" : response.errors.front();
        return v;
    case smtlib::Status::Sat:
        break;
    }

    try {
        smtlib::ParsedModel parsed = smtlib::parse_model(response.body);
        v.kind = VerdictKind::Sat;
        v.model = std::move(parsed.values);
        v.warnings = std::move(parsed.warnings);
    } catch (const ParseError& e) {
        v.kind = VerdictKind::SolverError;
        v.detail = std::string("sat, but the model could not be parsed: ") + e.what();
    }
    return v;
}

std::string check_model(const Query& query, Assignment& model) {
    std::set<std::string> used;
    for (const Formula& f : query.assertions) {
        f.collect_variables(used);
    }
    for (const std::string& name : query.declarations) {
        if (model.count(name) != 0) {
            continue;
        }
        if (used.count(name) != 0) {
            return "model has no value for variable '" + name + "'";
        }
        model.emplace(name, Rational(0));
    }
    for (std::size_t i = 0; i < query.assertions.size(); ++i) {
        bool holds = false;
        try {
            holds = query.assertions[i].evaluate(model);
        } catch (const std::out_of_range& e) {
            return e.what();
        }
        if (!holds) {
            return "model violates assertion " + std::to_string(i + 1) + ": " + smtlib::print(query.assertions[i]);
        }
    }
    return {};
}

Verdict run_solver(const Query& query, const SolverConfig& config) {
    Verdict v = run_solver_script(smtlib::serialize(query), config);
    if (v.kind != VerdictKind::Sat) {
        return v;
    }
    const std::set<std::string> known(query.declarations.begin(), query.declarations.end());
    for (auto it = v.model.begin(); it != v.model.end();) {
        if (known.count(it->first) == 0) {
            v.warnings.push_back("ignoring unknown symbol '" + it->first + "'");
            it = v.model.erase(it);
        } else {
            ++it;
        }
    }
    if (std::string problem = check_model(query, v.model); !problem.empty()) {
        v.kind = VerdictKind::SolverError;
        v.detail = "sat model failed exact re-check: " + problem;
    }
    return v;
}

std::string solver_identity(const SolverConfig& config) {
    try {
        const auto proc = detail::run_process({config.executable, "--version"}, std::nullopt, 10.0, std::nullopt);
        if (!proc.timed_out && proc.exit_code == 0) {
            std::string line = proc.stdout_text.substr(0, proc.stdout_text.find('\n'));
            if (!line.empty()) {
                return line;
            }
        }
    } catch (const Error&) {
    }
    return config.executable;
}

}  // namespace nnequiv
