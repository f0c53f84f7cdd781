#include "nnequiv/smtlib.hpp"

#include <cctype>
#include <sstream>

#include "nnequiv/error.hpp"

namespace nnequiv::smtlib {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void print_term(std::ostream& os, const Term& term);

void print_term(std::ostream& os, const Term& term) {
    std::visit(overloaded{
                   [&](const Term::Var& v) { os << v.name; },
                   [&](const Term::Const& c) { os << constant(c.value); },
                   [&](const Term::Sum& s) {
                       os << "(+";
                       for (const Term& t : s.terms) {
                           os << ' ';
                           print_term(os, t);
                       }
                       os << ')';
                   },
                   [&](const Term::Scale& s) {
                       if (s.factor == Rational(-1)) {
                           os << "(- ";
                       } else {
                           os << "(* " << constant(s.factor) << ' ';
                       }
                       print_term(os, *s.term);
                       os << ')';
                   },
               },
               term.node());
}

const char* op_symbol(CmpOp op) {
    switch (op) {
    case CmpOp::Eq:
    case CmpOp::Neq:
        return "=";
    case CmpOp::Lt:
        return "<";
    case CmpOp::Le:
        return "<=";
    case CmpOp::Gt:
        return ">";
    case CmpOp::Ge:
        return ">=";
    }
    return "?";
}

void print_formula(std::ostream& os, const Formula& f) {
    std::visit(overloaded{
                   [&](const Formula::True&) { os << "true"; },
                   [&](const Formula::Compare& c) {
                       // Disequality as a negated equality for the widest solver support.
                       if (c.op == CmpOp::Neq) {
                           os << "(not ";
                       }
                       os << '(' << op_symbol(c.op) << ' ';
                       print_term(os, c.lhs);
                       os << ' ';
                       print_term(os, c.rhs);
                       os << ')';
                       if (c.op == CmpOp::Neq) {
                           os << ')';
                       }
                   },
                   [&](const Formula::And& a) {
                       os << "(and";
                       for (const Formula& item : a.items) {
                           os << ' ';
                           print_formula(os, item);
                       }
                       os << ')';
                   },
                   [&](const Formula::Or& o) {
                       os << "(or";
                       for (const Formula& item : o.items) {
                           os << ' ';
                           print_formula(os, item);
                       }
                       os << ')';
                   },
                   [&](const Formula::Not& n) {
                       os << "(not ";
                       print_formula(os, *n.inner);
                       os << ')';
                   },
               },
               f.node());
}

std::string optional_text(const std::optional<Rational>& r) { return r ? r->to_string() : "none"; }

bool is_numeral(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    bool seen_digit = false;
    bool seen_dot = false;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            return false;
        }
    }
    return seen_digit;
}

class SExprReader {
public:
    explicit SExprReader(std::string_view text) : text_(text) {}

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    SExpr read() {
        skip_space();
        if (pos_ >= text_.size()) {
            throw ParseError("unexpected end of S-expression input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            SExpr list;
            list.is_list = true;
            while (true) {
                skip_space();
                if (pos_ >= text_.size()) {
                    throw ParseError("unbalanced parentheses in solver output");
                }
                if (text_[pos_] == ')') {
                    ++pos_;
                    return list;
                }
                list.items.push_back(read());
            }
        }
        if (c == ')') {
            throw ParseError("unexpected ')' in solver output");
        }
        if (c == '"') {
            return SExpr{read_delimited('"'), {}, false};
        }
        if (c == '|') {
            return SExpr{read_delimited('|'), {}, false};
        }
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' &&
               text_[pos_] != ')' && text_[pos_] != '"' && text_[pos_] != ';') {
            ++pos_;
        }
        return SExpr{std::string(text_.substr(start, pos_ - start)), {}, false};
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            } else if (text_[pos_] == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    ++pos_;
                }
            } else {
                break;
            }
        }
    }

    // String literals use "" as an escaped quote; quoted symbols have no escapes.
    std::string read_delimited(char delim) {
        ++pos_;
        std::string out;
        while (pos_ < text_.size()) {
            const char c = text_[pos_++];
            if (c == delim) {
                if (delim == '"' && pos_ < text_.size() && text_[pos_] == '"') {
                    out.push_back('"');
                    ++pos_;
                    continue;
                }
                return out;
            }
            out.push_back(c);
        }
        throw ParseError(delim == '"' ? "unterminated string literal" : "unterminated quoted symbol");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

}  // namespace

std::string constant(const Rational& value) {
    const Rational magnitude = value.abs();
    std::string body;
    if (auto d = magnitude.to_exact_decimal()) {
        body = *d;
    } else {
        body = "(/ " + magnitude.numerator_string() + " " + magnitude.denominator_string() + ")";
    }
    return value.sign() < 0 ? "(- " + body + ")" : body;
}

std::string print(const Term& term) {
    std::ostringstream os;
    print_term(os, term);
    return os.str();
}

std::string print(const Formula& formula) {
    std::ostringstream os;
    print_formula(os, formula);
    return os.str();
}

std::string serialize(const Query& query) {
    const QueryMetadata& m = query.meta;
    std::ostringstream os;
    os << "; nnequiv relation=" << to_string(m.relation.kind) << " netA=" << m.net_a << " netB=" << m.net_b
       << " epsilon=" << optional_text(m.relation.epsilon)
       << " k=" << (m.relation.k ? std::to_string(*m.relation.k) : std::string("none")) << "\n";
    os << "; input-bounds=" << (m.bounds_asserted ? "asserted" : "none-declared")
       << " grid-mode=" << (m.grid_mode ? "on" : "off") << "\n";
    const VariableCounts& c = m.counts;
    os << "; variables inputs=" << c.inputs << " internalA=" << c.internal_a << " internalB=" << c.internal_b
       << " relationAux=" << c.relation_aux << " outputsA=" << c.outputs_a << " outputsB=" << c.outputs_b << "\n";
    for (const std::string& w : m.warnings) {
        os << "; warning: " << w << "\n";
    }
    os << "(set-option :produce-models true)\n";
    os << "(set-logic QF_LRA)\n";
    for (const std::string& name : query.declarations) {
        os << "(declare-fun " << name << " () Real)\n";
    }
    for (const Formula& f : query.assertions) {
        os << "(assert ";
        print_formula(os, f);
        os << ")\n";
    }
    os << "(check-sat)\n";
    os << "(get-model)\n";
    os << "(exit)\n";
    return os.str();
}

std::string SExpr::to_string() const {
    if (!is_list) {
        return atom;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += items[i].to_string();
    }
    return out + ")";
}

std::vector<SExpr> parse_sexprs(std::string_view text) {
    SExprReader reader(text);
    std::vector<SExpr> out;
    while (!reader.at_end()) {
        out.push_back(reader.read());
    }
    return out;
}

Rational evaluate_constant(const SExpr& expr) {
    if (!expr.is_list) {
        if (!is_numeral(expr.atom)) {
            throw ParseError("not a real constant: '" + expr.atom + "'");
        }
        return Rational::parse(expr.atom);
    }
    if (expr.items.size() < 2 || expr.items.front().is_list) {
        throw ParseError("not a real constant: " + expr.to_string());
    }
    const std::string& op = expr.items.front().atom;
    std::vector<Rational> args;
    for (std::size_t i = 1; i < expr.items.size(); ++i) {
        args.push_back(evaluate_constant(expr.items[i]));
    }
    if (op == "-") {
        if (args.size() == 1) {
            return -args.front();
        }
        Rational acc = args.front();
        for (std::size_t i = 1; i < args.size(); ++i) {
            acc -= args[i];
        }
        return acc;
    }
    if (op == "+" || op == "*") {
        Rational acc = args.front();
        for (std::size_t i = 1; i < args.size(); ++i) {
            if (op == "+") {
                acc += args[i];
            } else {
                acc *= args[i];
            }
        }
        return acc;
    }
    if (op == "/" && args.size() >= 2) {
        Rational acc = args.front();
        for (std::size_t i = 1; i < args.size(); ++i) {
            if (args[i].is_zero()) {
                throw ParseError("division by zero in model value " + expr.to_string());
            }
            acc /= args[i];
        }
        return acc;
    }
    throw ParseError("unsupported operator '" + op + "' in model value " + expr.to_string());
}

Rational parse_value(std::string_view text) {
    auto exprs = parse_sexprs(text);
    if (exprs.size() != 1) {
        throw ParseError("expected exactly one value, got '" + std::string(text) + "'");
    }
    return evaluate_constant(exprs.front());
}

ParsedModel parse_model(std::string_view text, const std::set<std::string>* known) {
    ParsedModel out;
    std::vector<SExpr> top = parse_sexprs(text);

    // Accept "(model d...)", "(d...)" or bare entries, where an entry is
    // either (define-fun name () Sort value) or yices' (= name value).
    std::vector<const SExpr*> defs;
    auto is_entry = [](const SExpr& e) {
        return e.is_list && !e.items.empty() && !e.items.front().is_list &&
               (e.items.front().atom == "define-fun" || e.items.front().atom == "=");
    };
    for (const SExpr& e : top) {
        if (is_entry(e)) {
            defs.push_back(&e);
            continue;
        }
        if (!e.is_list) {
            throw ParseError("unexpected atom '" + e.atom + "' in model");
        }
        std::size_t start = 0;
        if (!e.items.empty() && !e.items.front().is_list && e.items.front().atom == "model") {
            start = 1;
        }
        for (std::size_t i = start; i < e.items.size(); ++i) {
            if (!is_entry(e.items[i])) {
                throw ParseError("unexpected entry in model: " + e.items[i].to_string());
            }
            defs.push_back(&e.items[i]);
        }
    }

    for (const SExpr* d : defs) {
        std::string name;
        const SExpr* value = nullptr;
        if (d->items.front().atom == "=") {
            if (d->items.size() != 3 || d->items[1].is_list) {
                throw ParseError("malformed model entry: " + d->to_string());
            }
            name = d->items[1].atom;
            value = &d->items[2];
        } else {
            // (define-fun name (args) Sort value)
            if (d->items.size() != 5 || d->items[1].is_list || !d->items[2].is_list) {
                throw ParseError("malformed define-fun: " + d->to_string());
            }
            name = d->items[1].atom;
            if (!d->items[2].items.empty()) {
                out.warnings.push_back("skipping function definition '" + name + "'");
                continue;
            }
            const SExpr& sort = d->items[3];
            if (sort.is_list || (sort.atom != "Real" && sort.atom != "Int")) {
                out.warnings.push_back("skipping non-real symbol '" + name + "'");
                continue;
            }
            value = &d->items[4];
        }
        if (known != nullptr && known->count(name) == 0) {
            out.warnings.push_back("ignoring unknown symbol '" + name + "'");
            continue;
        }
        out.values[name] = evaluate_constant(*value);
    }
    return out;
}

SolverResponse parse_response(std::string_view stdout_text) {
    SolverResponse out;
    std::size_t pos = 0;
    while (pos <= stdout_text.size()) {
        std::size_t nl = stdout_text.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = stdout_text.size();
        }
        const std::string line = trim(stdout_text.substr(pos, nl - pos));
        const std::size_t next = nl + 1;
        if (line == "sat" || line == "unsat" || line == "unknown" || line == "timeout") {
            out.status = line == "sat" ? Status::Sat : line == "unsat" ? Status::Unsat : Status::Unknown;
            out.body = next <= stdout_text.size() ? std::string(stdout_text.substr(next)) : std::string();
            break;
        }
        pos = next;
    }

    try {
        for (const SExpr& e : parse_sexprs(stdout_text)) {
            if (e.is_list && e.items.size() >= 2 && !e.items.front().is_list && e.items.front().atom == "error") {
                out.errors.push_back(e.items[1].atom);
            }
        }
    } catch (const ParseError&) {
        // Garbled output; the caller reports it through the missing status.
    }
    return out;
}

}  // namespace nnequiv::smtlib
