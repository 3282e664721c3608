#pragma once

// Test helpers: a small term reader, random term generation and problem
// utilities shared by the unit tests and the acceptance runner.

#include <cctype>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "simsel/simsel.hpp"

namespace simsel::test {

/// Reads terms such as "f(g(a),X)" against one signature. Uppercase names
/// are variables, numbered by first occurrence within a single call (or
/// within one clause for clause()).
class TermBuilder {
public:
    Signature sig;

    Term term(std::string_view text) {
        vars_.clear();
        return read_all(text, false);
    }
    Term atom(std::string_view text) {
        vars_.clear();
        return read_all(text, true);
    }

    /// "p(X) | ~q(X)"; an empty string gives the empty clause.
    Clause clause(std::string_view text, ClauseRole role = ClauseRole::axiom) {
        vars_.clear();
        Clause c;
        c.role = role;
        c.goal_descendant = role == ClauseRole::negated_conjecture;
        std::size_t start = 0;
        while (start < text.size()) {
            std::size_t bar = text.find('|', start);
            std::string_view part = text.substr(start, bar == std::string_view::npos ? text.npos : bar - start);
            while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
            while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
            bool positive = true;
            if (!part.empty() && part.front() == '~') {
                positive = false;
                part.remove_prefix(1);
            }
            text_ = part;
            pos_ = 0;
            c.literals.push_back({positive, read(true)});
            if (bar == std::string_view::npos) break;
            start = bar + 1;
        }
        return c;
    }

    std::uint32_t symbol(std::string_view name) const { return *sig.find(name); }

    std::string str(const Term& t) const { return to_string(t, sig); }
    std::string str(const Clause& c) const { return to_string(c, sig); }

private:
    Term read_all(std::string_view text, bool predicate) {
        text_ = text;
        pos_ = 0;
        Term t = read(predicate);
        if (pos_ != text_.size()) throw std::invalid_argument("trailing input in '" + std::string(text) + "'");
        return t;
    }

    Term read(bool predicate) {
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        if (name.empty()) throw std::invalid_argument("expected a symbol in '" + std::string(text_) + "'");
        if (std::isupper(static_cast<unsigned char>(name[0]))) {
            auto [it, fresh] = vars_.try_emplace(name, static_cast<std::uint32_t>(vars_.size()));
            return Term::variable(it->second);
        }
        std::vector<Term> args;
        if (pos_ < text_.size() && text_[pos_] == '(') {
            ++pos_;
            args.push_back(read(false));
            while (text_[pos_] == ',') {
                ++pos_;
                args.push_back(read(false));
            }
            if (text_[pos_] != ')') throw std::invalid_argument("expected ')' in '" + std::string(text_) + "'");
            ++pos_;
        }
        SymbolKind kind = predicate ? SymbolKind::predicate : args.empty() ? SymbolKind::constant : SymbolKind::function;
        auto id = sig.intern(name, kind, static_cast<std::uint32_t>(args.size()));
        return Term::application(kind, id, std::move(args));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::map<std::string, std::uint32_t> vars_;
};

/// Random terms over a fixed small signature.
class RandomTerms {
public:
    struct Symbol {
        std::uint32_t id;
        std::uint32_t arity;
    };

    RandomTerms(Signature& sig, std::uint64_t seed, std::vector<std::pair<std::string, std::uint32_t>> functions,
                std::uint32_t variables)
        : rng_(seed), variables_(variables) {
        for (const auto& [name, arity] : functions) {
            SymbolKind kind = arity == 0 ? SymbolKind::constant : SymbolKind::function;
            auto id = sig.intern(name, kind, arity);
            (arity == 0 ? constants_ : functions_).push_back({id, arity});
        }
    }

    /// Term with at most `max_size` nodes (at least one).
    Term term(std::uint32_t max_size) {
        std::uniform_int_distribution<std::uint32_t> size(1, max_size);
        return build(size(rng_));
    }

    /// Term with exactly `size` nodes when the signature allows it.
    Term build(std::uint32_t size) {
        std::vector<Symbol> fit;
        for (const Symbol& f : functions_)
            if (f.arity < size) fit.push_back(f);
        if (size <= 1 || fit.empty()) return leaf();
        Symbol f = fit[pick(fit.size())];
        std::uint32_t rest = size - 1;
        std::vector<Term> args;
        for (std::uint32_t k = 0; k < f.arity; ++k) {
            std::uint32_t left = f.arity - k - 1;
            std::uint32_t share = k + 1 == f.arity ? rest : 1 + static_cast<std::uint32_t>(pick(rest - left));
            if (share > rest - left) share = rest - left;
            args.push_back(build(share));
            rest -= share;
        }
        return Term::application(SymbolKind::function, f.id, std::move(args));
    }

    Term leaf() {
        std::size_t n = constants_.size() + variables_;
        std::size_t k = pick(n);
        if (k < constants_.size()) return Term::application(SymbolKind::constant, constants_[k].id);
        return Term::variable(static_cast<std::uint32_t>(k - constants_.size()));
    }

    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
    std::vector<Symbol> functions_;
    std::vector<Symbol> constants_;
    std::uint32_t variables_;
};

/// Every term with at most `max_size` nodes over the given symbols; `var`
/// adds the single variable X0 as a leaf.
inline std::vector<Term> all_terms(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& symbols, bool var,
                                   std::uint32_t max_size) {
    // by_size[n] = all terms with exactly n nodes
    std::vector<std::vector<Term>> by_size(max_size + 1);
    for (std::uint32_t n = 1; n <= max_size; ++n) {
        for (auto [id, arity] : symbols) {
            if (arity == 0) {
                if (n == 1) by_size[1].push_back(Term::application(SymbolKind::constant, id));
                continue;
            }
            if (n < arity + 1) continue;
            // distribute n - 1 nodes over `arity` arguments
            std::vector<std::vector<Term>> partial{{}};
            std::vector<std::uint32_t> used{0};
            for (std::uint32_t k = 0; k < arity; ++k) {
                std::vector<std::vector<Term>> next;
                std::vector<std::uint32_t> next_used;
                for (std::size_t p = 0; p < partial.size(); ++p) {
                    for (std::uint32_t s = 1; used[p] + s <= n - 1; ++s) {
                        if (k + 1 == arity && used[p] + s != n - 1) continue;
                        for (const Term& t : by_size[s]) {
                            next.push_back(partial[p]);
                            next.back().push_back(t);
                            next_used.push_back(used[p] + s);
                        }
                    }
                }
                partial = std::move(next);
                used = std::move(next_used);
            }
            for (auto& args : partial) by_size[n].push_back(Term::application(SymbolKind::function, id, std::move(args)));
        }
        if (n == 1 && var) by_size[1].push_back(Term::variable(0));
    }
    std::vector<Term> out;
    for (auto& v : by_size) out.insert(out.end(), v.begin(), v.end());
    return out;
}

inline std::string data_dir() { return SIMSEL_DATA_DIR; }

inline std::vector<std::string> micro_problems() {
    std::vector<std::string> out;
    for (const auto& p : problem_files(data_dir() + "/micro")) out.push_back(p.string());
    return out;
}

/// Re-derives every non-input clause of a derivation from its parents and
/// checks that it ends in the empty clause. Returns an error or "".
inline std::string replay_derivation(const std::vector<Clause>& derivation, const std::vector<Clause>& inputs) {
    if (derivation.empty()) return "empty derivation";
    if (!derivation.back().empty()) return "derivation does not end in the empty clause";
    std::map<ClauseId, const Clause*> by_id;
    for (const Clause& c : derivation) by_id[c.age] = &c;
    for (const Clause& c : derivation) {
        if (c.rule == Inference::input) {
            bool found = false;
            for (const Clause& in : inputs) found = found || (in.literals == c.literals && in.role == c.role);
            if (!found) return "input clause " + std::to_string(c.age) + " is not among the problem clauses";
            continue;
        }
        std::vector<Clause> again;
        if (c.rule == Inference::resolution) {
            if (c.parents.size() != 2) return "resolvent without two parents";
            auto a = by_id.find(c.parents[0]), b = by_id.find(c.parents[1]);
            if (a == by_id.end() || b == by_id.end()) return "missing parent of " + std::to_string(c.age);
            if (a->second->age >= c.age || b->second->age >= c.age) return "parent younger than child";
            again = resolve(*a->second, *b->second);
        } else {
            if (c.parents.size() != 1) return "factor without one parent";
            auto a = by_id.find(c.parents[0]);
            if (a == by_id.end()) return "missing parent of " + std::to_string(c.age);
            again = factor(*a->second);
        }
        bool found = false;
        for (const Clause& r : again) found = found || r.literals == c.literals;
        if (!found) return "clause " + std::to_string(c.age) + " is not re-derivable from its parents";
    }
    return "";
}

}  // namespace simsel::test
