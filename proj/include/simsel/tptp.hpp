#pragma once

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "simsel/term.hpp"

namespace simsel {

/// Input problem: the clauses plus the signature that names their symbols.
struct Problem {
    Signature signature;
    std::vector<Clause> clauses;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

namespace detail {

class CnfParser {
public:
    explicit CnfParser(std::string_view text) : text_(text) {
        line_starts_.push_back(0);
        for (std::size_t i = 0; i < text_.size(); ++i)
            if (text_[i] == '\n') line_starts_.push_back(i + 1);
    }

    Problem parse() {
        Problem problem;
        skip_layout();
        while (pos_ < text_.size()) {
            auto [line, col] = location();
            std::string keyword = word();
            if (keyword == "include") error("include directives are not supported", line, col);
            if (keyword != "cnf") error("expected 'cnf', found '" + keyword + "'", line, col);
            problem.clauses.push_back(statement(problem.signature));
            problem.clauses.back().age = problem.clauses.size() - 1;
            skip_layout();
        }
        return problem;
    }

private:
    struct Raw {
        std::string name;
        bool variable = false;
        std::vector<Raw> args;
        std::size_t line = 0, col = 0;
    };

    Clause statement(Signature& sig) {
        expect('(');
        Clause clause;
        clause.name = word();
        expect(',');
        auto [rl, rc] = location();
        std::string role = word();
        if (role == "axiom" || role == "hypothesis") {
            clause.role = ClauseRole::axiom;
        } else if (role == "negated_conjecture") {
            clause.role = ClauseRole::negated_conjecture;
            clause.goal_descendant = true;
        } else {
            error("unknown role '" + role + "'", rl, rc);
        }
        expect(',');
        vars_.clear();
        skip_layout();
        if (peek() == '(') {
            ++pos_;
            disjunction(sig, clause);
            expect(')');
        } else {
            disjunction(sig, clause);
        }
        skip_layout();
        if (peek() == ',') {
            ++pos_;
            skip_annotations();
        }
        expect(')');
        expect('.');
        return clause;
    }

    void disjunction(Signature& sig, Clause& clause) {
        literal(sig, clause);
        for (skip_layout(); peek() == '|'; skip_layout()) {
            ++pos_;
            literal(sig, clause);
        }
    }

    void literal(Signature& sig, Clause& clause) {
        skip_layout();
        bool positive = true;
        if (peek() == '~') {
            ++pos_;
            positive = false;
            skip_layout();
        }
        auto [line, col] = location();
        Raw lhs = raw_term();
        if (lhs.name == "$false" && lhs.args.empty()) {
            if (!positive) error("negated $false is not supported", line, col);
            return;
        }
        if (lhs.name.starts_with('$')) error("unsupported defined symbol '" + lhs.name + "'", line, col);
        skip_layout();
        bool equality = false;
        if (peek() == '=') {
            ++pos_;
            equality = true;
        } else if (peek() == '!' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '=') {
            pos_ += 2;
            equality = true;
            positive = !positive;
        }
        if (equality) {
            skip_layout();
            Raw rhs = raw_term();
            std::vector<Term> args;
            args.push_back(build(sig, lhs, false));
            args.push_back(build(sig, rhs, false));
            std::uint32_t eq = intern(sig, "=", SymbolKind::predicate, 2, line, col);
            clause.literals.push_back({positive, Term::application(SymbolKind::predicate, eq, std::move(args))});
            return;
        }
        if (lhs.variable) error("variable used as an atom", line, col);
        clause.literals.push_back({positive, build(sig, lhs, true)});
    }

    Term build(Signature& sig, const Raw& raw, bool predicate) {
        if (raw.variable) {
            if (!raw.args.empty()) error("variable applied to arguments", raw.line, raw.col);
            auto [it, fresh] = vars_.try_emplace(raw.name, static_cast<std::uint32_t>(vars_.size()));
            return Term::variable(it->second);
        }
        if (raw.name.starts_with('$')) error("unsupported defined symbol '" + raw.name + "'", raw.line, raw.col);
        SymbolKind kind = predicate ? SymbolKind::predicate
                                    : (raw.args.empty() ? SymbolKind::constant : SymbolKind::function);
        auto arity = static_cast<std::uint32_t>(raw.args.size());
        std::uint32_t id = intern(sig, raw.name, kind, arity, raw.line, raw.col);
        std::vector<Term> args;
        args.reserve(raw.args.size());
        for (const Raw& a : raw.args) args.push_back(build(sig, a, false));
        return Term::application(kind, id, std::move(args));
    }

    std::uint32_t intern(Signature& sig, const std::string& name, SymbolKind kind, std::uint32_t arity,
                         std::size_t line, std::size_t col) {
        try {
            return sig.intern(name, kind, arity);
        } catch (const std::invalid_argument& e) {
            error(e.what(), line, col);
        }
    }

    Raw raw_term() {
        skip_layout();
        Raw r;
        std::tie(r.line, r.col) = location();
        r.name = word();
        r.variable = std::isupper(static_cast<unsigned char>(r.name[0])) || r.name[0] == '_';
        skip_layout();
        if (peek() == '(') {
            ++pos_;
            r.args.push_back(raw_term());
            for (skip_layout(); peek() == ','; skip_layout()) {
                ++pos_;
                r.args.push_back(raw_term());
            }
            expect(')');
        }
        return r;
    }

    std::string word() {
        skip_layout();
        auto [line, col] = location();
        if (pos_ >= text_.size()) error("unexpected end of input", line, col);
        char c = text_[pos_];
        std::size_t start = pos_;
        if (c == '\'') {
            for (++pos_; pos_ < text_.size() && text_[pos_] != '\''; ++pos_)
                if (text_[pos_] == '\\') ++pos_;
            if (pos_ >= text_.size()) error("unterminated quoted name", line, col);
            ++pos_;
            return std::string(text_.substr(start, pos_ - start));
        }
        if (c == '$') ++pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start || (c == '$' && pos_ == start + 1))
            error(std::string("expected a name, found '") + c + "'", line, col);
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_annotations() {
        int depth = 0;
        for (; pos_ < text_.size(); ++pos_) {
            char c = text_[pos_];
            if (c == '\'' || c == '"') {
                for (++pos_; pos_ < text_.size() && text_[pos_] != c; ++pos_)
                    if (text_[pos_] == '\\') ++pos_;
            } else if (c == '(' || c == '[') {
                ++depth;
            } else if (c == ')' || c == ']') {
                if (depth == 0) return;
                --depth;
            }
        }
    }

    void expect(char c) {
        skip_layout();
        if (peek() != c) {
            auto [line, col] = location();
            std::string found = pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string("end of input");
            error(std::string("expected '") + c + "', found '" + found + "'", line, col);
        }
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_layout() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '*') {
                auto end = text_.find("*/", pos_ + 2);
                pos_ = end == std::string_view::npos ? text_.size() : end + 2;
            } else {
                break;
            }
        }
    }

    std::pair<std::size_t, std::size_t> location() const {
        auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), pos_);
        std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
        return {line, pos_ - line_starts_[line - 1] + 1};
    }

    [[noreturn]] static void error(const std::string& what, std::size_t line, std::size_t col) {
        throw ParseError(what, line, col);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::unordered_map<std::string, std::uint32_t> vars_;
    std::vector<std::size_t> line_starts_;
};

}  // namespace detail

/// Parses a sequence of `cnf(name, role, disjunction).` statements.
/// Throws ParseError (with line and column) on malformed input, unknown
/// roles, and symbols used with inconsistent arity or kind.
inline Problem parse_problem(std::string_view text) { return detail::CnfParser(text).parse(); }

inline Problem load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

inline std::string print_clause(const Clause& c, const Signature& sig) {
    std::string role(c.role == ClauseRole::negated_conjecture ? "negated_conjecture" : "axiom");
    std::string name = c.name.empty() ? "c" + std::to_string(c.age) : c.name;
    return "cnf(" + name + ", " + role + ", (" + to_string(c, sig) + ")).";
}

inline std::string print_problem(const Problem& p) {
    std::string out;
    for (const Clause& c : p.clauses) {
        out += print_clause(c, p.signature);
        out += '\n';
    }
    return out;
}

}  // namespace simsel
