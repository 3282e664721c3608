#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace simsel {

enum class SymbolKind : std::uint8_t { variable, constant, function, predicate };

/// Symbol identity used by the sequence and tree kernels: functor ids are
/// non-negative, variable i is encoded as -(i + 1).
using Label = std::int32_t;

struct SymbolInfo {
    std::string name;
    SymbolKind kind;
    std::uint32_t arity;
};

/// Per-problem symbol table. A name keeps one kind and one arity.
class Signature {
public:
    /// Returns the id for `name`, registering it on first use. Throws
    /// std::invalid_argument when the kind or arity disagrees with an
    /// earlier occurrence.
    std::uint32_t intern(std::string_view name, SymbolKind kind, std::uint32_t arity) {
        if (auto it = ids_.find(std::string(name)); it != ids_.end()) {
            const SymbolInfo& known = symbols_[it->second];
            if (known.arity != arity)
                throw std::invalid_argument("arity mismatch for symbol '" + std::string(name) + "': used with " +
                                            std::to_string(known.arity) + " and " + std::to_string(arity) +
                                            " arguments");
            if ((known.kind == SymbolKind::predicate) != (kind == SymbolKind::predicate))
                throw std::invalid_argument("symbol '" + std::string(name) +
                                            "' used both as predicate and as function");
            return it->second;
        }
        auto id = static_cast<std::uint32_t>(symbols_.size());
        symbols_.push_back({std::string(name), kind, arity});
        ids_.emplace(std::string(name), id);
        return id;
    }

    std::optional<std::uint32_t> find(std::string_view name) const {
        if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
        return std::nullopt;
    }

    const SymbolInfo& operator[](std::uint32_t id) const { return symbols_.at(id); }
    std::size_t size() const { return symbols_.size(); }

private:
    std::vector<SymbolInfo> symbols_;
    std::unordered_map<std::string, std::uint32_t> ids_;
};

/// Immutable first-order term with shared structure. Atoms are terms whose
/// head is a predicate symbol.
class Term {
    struct Node;

public:
    static Term variable(std::uint32_t index) {
        return Term(std::make_shared<const Node>(SymbolKind::variable, index, std::vector<Term>{}));
    }

    static Term application(SymbolKind kind, std::uint32_t functor, std::vector<Term> args = {}) {
        if (kind == SymbolKind::variable) throw std::invalid_argument("application with variable head");
        if (kind == SymbolKind::constant && !args.empty()) throw std::invalid_argument("constant with arguments");
        return Term(std::make_shared<const Node>(kind, functor, std::move(args)));
    }

    SymbolKind kind() const { return node_->kind; }
    bool is_variable() const { return node_->kind == SymbolKind::variable; }
    std::uint32_t functor() const { return node_->symbol; }
    std::uint32_t var_index() const { return node_->symbol; }
    Label label() const {
        return is_variable() ? -static_cast<Label>(node_->symbol) - 1 : static_cast<Label>(node_->symbol);
    }
    std::span<const Term> args() const { return node_->args; }
    std::size_t arity() const { return node_->args.size(); }

    /// Symbol-occurrence count, variables included.
    std::uint32_t size() const { return node_->size; }
    bool ground() const { return node_->ground; }
    std::size_t hash() const { return node_->hash; }
    /// One past the largest variable index occurring in the term (0 if ground).
    std::uint32_t variable_bound() const { return node_->var_bound; }

    bool same_node(const Term& other) const { return node_ == other.node_; }

    friend bool operator==(const Term& a, const Term& b) {
        if (a.node_ == b.node_) return true;
        const Node& x = *a.node_;
        const Node& y = *b.node_;
        if (x.hash != y.hash || x.kind != y.kind || x.symbol != y.symbol || x.size != y.size) return false;
        return std::equal(x.args.begin(), x.args.end(), y.args.begin(), y.args.end());
    }

private:
    struct Node {
        Node(SymbolKind k, std::uint32_t s, std::vector<Term> a) : kind(k), symbol(s), args(std::move(a)) {
            size = 1;
            ground = kind != SymbolKind::variable;
            var_bound = kind == SymbolKind::variable ? symbol + 1 : 0;
            hash = std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(kind) << 32) | symbol);
            for (const Term& t : args) {
                size += t.size();
                ground = ground && t.ground();
                var_bound = std::max(var_bound, t.variable_bound());
                hash = hash * 1000003u ^ t.hash();
            }
        }
        SymbolKind kind;
        std::uint32_t symbol;
        std::vector<Term> args;
        std::uint32_t size;
        std::uint32_t var_bound;
        bool ground;
        std::size_t hash;
    };

    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const { return t.hash(); }
};

using TermSet = std::unordered_set<Term, TermHash>;
template <class V>
using TermMap = std::unordered_map<Term, V, TermHash>;

struct Literal {
    bool positive = true;
    Term atom;

    friend bool operator==(const Literal&, const Literal&) = default;
};

enum class ClauseRole : std::uint8_t { axiom, negated_conjecture, derived };

enum class Inference : std::uint8_t { input, resolution, factoring };

using ClauseId = std::uint64_t;

struct Clause {
    std::vector<Literal> literals;
    ClauseRole role = ClauseRole::axiom;
    /// Creation stamp, unique within a proof run; doubles as the clause id.
    ClauseId age = 0;
    std::vector<ClauseId> parents;
    Inference rule = Inference::input;
    std::string name;
    /// True for negated conjecture clauses and everything derived from one.
    bool goal_descendant = false;

    bool empty() const { return literals.empty(); }

    std::uint32_t variable_bound() const {
        std::uint32_t n = 0;
        for (const Literal& l : literals) n = std::max(n, l.atom.variable_bound());
        return n;
    }
};

/// Structural equality of the literal lists.
inline bool same_literals(const Clause& a, const Clause& b) { return a.literals == b.literals; }

// ----------------------------------------------------------------------------
// Term utilities
// ----------------------------------------------------------------------------

enum class VarNorm : std::uint8_t { Alf, Uni };

inline std::uint32_t term_size(const Term& t) { return t.size(); }

namespace detail {

template <class F>
Term map_variables(const Term& t, F&& rename) {
    if (t.ground()) return t;
    if (t.is_variable()) return rename(t);
    std::vector<Term> args;
    args.reserve(t.arity());
    bool changed = false;
    for (const Term& a : t.args()) {
        args.push_back(map_variables(a, rename));
        changed = changed || !args.back().same_node(a);
    }
    return changed ? Term::application(t.kind(), t.functor(), std::move(args)) : t;
}

}  // namespace detail

/// Renames variables by first left-to-right occurrence (Alf) or collapses
/// them into variable 0 (Uni). Ground terms are returned unchanged.
inline Term normalize(const Term& t, VarNorm norm) {
    if (t.ground()) return t;
    if (norm == VarNorm::Uni) {
        return detail::map_variables(t, [](const Term& v) { return v.var_index() == 0 ? v : Term::variable(0); });
    }
    std::vector<std::int64_t> renaming(t.variable_bound(), -1);
    std::uint32_t next = 0;
    return detail::map_variables(t, [&](const Term& v) {
        auto& slot = renaming[v.var_index()];
        if (slot < 0) slot = next++;
        return static_cast<std::uint32_t>(slot) == v.var_index() ? v : Term::variable(static_cast<std::uint32_t>(slot));
    });
}

/// Pre-order visit of every subterm occurrence (root first).
template <class F>
void for_each_subterm(const Term& t, F&& visit) {
    visit(t);
    for (const Term& a : t.args()) for_each_subterm(a, visit);
}

/// The term and all its proper subterms, duplicates collapsed.
inline TermSet subterms(const Term& t) {
    TermSet out;
    for_each_subterm(t, [&](const Term& s) { out.insert(s); });
    return out;
}

/// Pre-order flattening; length equals term_size(t).
inline std::vector<Label> symbol_sequence(const Term& t) {
    std::vector<Label> seq;
    seq.reserve(t.size());
    for_each_subterm(t, [&](const Term& s) { seq.push_back(s.label()); });
    return seq;
}

/// Adds `offset` to every variable index.
inline Term shift_variables(const Term& t, std::uint32_t offset) {
    if (offset == 0) return t;
    return detail::map_variables(t, [&](const Term& v) { return Term::variable(v.var_index() + offset); });
}

/// Bindings for one-sided matching: only pattern variables are bound, and
/// target variables behave as rigid constants.
class MatchBindings {
public:
    explicit MatchBindings(std::uint32_t pattern_vars = 0) : slots_(pattern_vars) {}

    std::size_t mark() const { return trail_.size(); }
    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            slots_[trail_.back()].reset();
            trail_.pop_back();
        }
    }

    bool match(const Term& pattern, const Term& target) {
        if (pattern.is_variable()) {
            std::uint32_t i = pattern.var_index();
            if (i >= slots_.size()) slots_.resize(i + 1);
            if (slots_[i]) return *slots_[i] == target;
            slots_[i] = target;
            trail_.push_back(i);
            return true;
        }
        if (target.is_variable() || pattern.functor() != target.functor() || pattern.arity() != target.arity())
            return false;
        if (pattern.ground()) return pattern == target;
        auto pa = pattern.args();
        auto ta = target.args();
        for (std::size_t k = 0; k < pa.size(); ++k)
            if (!match(pa[k], ta[k])) return false;
        return true;
    }

    const std::optional<Term>& binding(std::uint32_t i) const { return slots_.at(i); }

private:
    std::vector<std::optional<Term>> slots_;
    std::vector<std::uint32_t> trail_;
};

/// True iff some substitution σ gives pattern·σ = target.
inline bool matches(const Term& pattern, const Term& target) {
    MatchBindings b(pattern.variable_bound());
    return b.match(pattern, target);
}

// ----------------------------------------------------------------------------
// Printing
// ----------------------------------------------------------------------------

inline void print_term(std::string& out, const Term& t, const Signature& sig) {
    if (t.is_variable()) {
        out += 'X';
        out += std::to_string(t.var_index() + 1);
        return;
    }
    const std::string& name = sig[t.functor()].name;
    if (name == "=" && t.arity() == 2) {
        print_term(out, t.args()[0], sig);
        out += " = ";
        print_term(out, t.args()[1], sig);
        return;
    }
    out += name;
    if (t.arity() == 0) return;
    out += '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
        if (i) out += ',';
        print_term(out, t.args()[i], sig);
    }
    out += ')';
}

inline std::string to_string(const Term& t, const Signature& sig) {
    std::string s;
    print_term(s, t, sig);
    return s;
}

inline std::string to_string(const Literal& l, const Signature& sig) {
    if (!l.positive) {
        bool is_eq = l.atom.arity() == 2 && sig[l.atom.functor()].name == "=";
        if (is_eq) {
            std::string s = to_string(l.atom.args()[0], sig);
            s += " != ";
            s += to_string(l.atom.args()[1], sig);
            return s;
        }
        return "~" + to_string(l.atom, sig);
    }
    return to_string(l.atom, sig);
}

/// TPTP disjunction; the empty clause prints as $false.
inline std::string to_string(const Clause& c, const Signature& sig) {
    if (c.literals.empty()) return "$false";
    std::string s;
    for (std::size_t i = 0; i < c.literals.size(); ++i) {
        if (i) s += " | ";
        s += to_string(c.literals[i], sig);
    }
    return s;
}

inline std::string_view role_name(ClauseRole r) {
    switch (r) {
        case ClauseRole::axiom: return "axiom";
        case ClauseRole::negated_conjecture: return "negated_conjecture";
        case ClauseRole::derived: return "plain";
    }
    return "plain";
}

}  // namespace simsel
