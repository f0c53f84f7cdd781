#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nnequiv/equivalence.hpp"
#include "nnequiv/formula.hpp"
#include "nnequiv/rational.hpp"

namespace nnequiv::smtlib {

/// Exact SMT-LIB literal: "3", "1.04", "(/ 1 3)", negatives as "(- ...)".
std::string constant(const Rational& value);

std::string print(const Term& term);
std::string print(const Formula& formula);

/// Full QF_LRA script: metadata header comments, one Real declaration per
/// variable, one assert per top-level conjunct, check-sat, get-model.
/// A pure function of the query, so output is byte-stable.
std::string serialize(const Query& query);

/// Minimal S-expression tree for solver responses.
struct SExpr {
    std::string atom;  // empty for lists
    std::vector<SExpr> items;
    bool is_list = false;

    std::string to_string() const;
};

/// Parses every top-level S-expression in `text`. Throws ParseError on
/// unbalanced parentheses or unterminated strings.
std::vector<SExpr> parse_sexprs(std::string_view text);

/// Evaluates a constant real-valued expression: integers, decimals,
/// (- e), (- a b ...), (+ ...), (* ...), (/ a b). Throws ParseError otherwise.
Rational evaluate_constant(const SExpr& expr);

/// Parses a single constant such as "(- (/ 7 2))" or "3.25".
Rational parse_value(std::string_view text);

struct ParsedModel {
    Assignment values;
    std::vector<std::string> warnings;
};

/// Reads a get-model response: define-fun entries with or without the
/// (model ...) wrapper, or yices-style (= name value) entries.
/// Non-Real or parameterised definitions are skipped with a warning; when
/// `known` is given, symbols outside it are ignored with a warning.
/// Throws ParseError on malformed text.
ParsedModel parse_model(std::string_view text, const std::set<std::string>* known = nullptr);

enum class Status { Sat, Unsat, Unknown };

struct SolverResponse {
    std::optional<Status> status;
    /// Text after the status line (the model for sat answers).
    std::string body;
    /// Messages of (error "...") responses.
    std::vector<std::string> errors;
};

/// Splits raw solver standard output into status, body and error messages.
SolverResponse parse_response(std::string_view stdout_text);

}  // namespace nnequiv::smtlib
