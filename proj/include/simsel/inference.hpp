#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "simsel/term.hpp"

namespace simsel {

/// Triangular substitution over variable indices, built by unification.
class Substitution {
public:
    explicit Substitution(std::uint32_t vars = 0) : slots_(vars) {}

    bool unify(const Term& a, const Term& b) {
        Term x = deref(a), y = deref(b);
        if (x.is_variable()) {
            if (y.is_variable() && y.var_index() == x.var_index()) return true;
            if (occurs(x.var_index(), y)) return false;
            bind(x.var_index(), y);
            return true;
        }
        if (y.is_variable()) {
            if (occurs(y.var_index(), x)) return false;
            bind(y.var_index(), x);
            return true;
        }
        if (x.functor() != y.functor() || x.arity() != y.arity()) return false;
        if (x.ground() && y.ground()) return x == y;
        for (std::size_t k = 0; k < x.arity(); ++k)
            if (!unify(x.args()[k], y.args()[k])) return false;
        return true;
    }

    Term apply(const Term& t) const {
        if (t.ground()) return t;
        if (t.is_variable()) {
            Term d = deref(t);
            return d.is_variable() ? d : apply(d);
        }
        std::vector<Term> args;
        args.reserve(t.arity());
        bool changed = false;
        for (const Term& a : t.args()) {
            args.push_back(apply(a));
            changed = changed || !args.back().same_node(a);
        }
        return changed ? Term::application(t.kind(), t.functor(), std::move(args)) : t;
    }

    std::size_t mark() const { return trail_.size(); }
    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            slots_[trail_.back()].reset();
            trail_.pop_back();
        }
    }

private:
    Term deref(Term t) const {
        while (t.is_variable() && t.var_index() < slots_.size() && slots_[t.var_index()]) t = *slots_[t.var_index()];
        return t;
    }

    bool occurs(std::uint32_t v, const Term& t) const {
        if (t.ground()) return false;
        if (t.is_variable()) {
            Term d = deref(t);
            if (d.is_variable()) return d.var_index() == v;
            return occurs(v, d);
        }
        return std::ranges::any_of(t.args(), [&](const Term& a) { return occurs(v, a); });
    }

    void bind(std::uint32_t v, const Term& t) {
        if (v >= slots_.size()) slots_.resize(v + 1);
        slots_[v] = t;
        trail_.push_back(v);
    }

    std::vector<std::optional<Term>> slots_;
    std::vector<std::uint32_t> trail_;
};

/// Drops repeated literals and renames variables to 0, 1, ... in order of
/// first occurrence across the clause.
inline std::vector<Literal> canonical_literals(std::vector<Literal> lits) {
    std::vector<Literal> out;
    out.reserve(lits.size());
    for (Literal& l : lits)
        if (std::ranges::find(out, l) == out.end()) out.push_back(std::move(l));
    std::uint32_t bound = 0;
    for (const Literal& l : out) bound = std::max(bound, l.atom.variable_bound());
    if (bound == 0) return out;
    std::vector<std::int64_t> renaming(bound, -1);
    std::uint32_t next = 0;
    for (Literal& l : out) {
        l.atom = detail::map_variables(l.atom, [&](const Term& v) {
            auto& slot = renaming[v.var_index()];
            if (slot < 0) slot = next++;
            return static_cast<std::uint32_t>(slot) == v.var_index() ? v
                                                                     : Term::variable(static_cast<std::uint32_t>(slot));
        });
    }
    return out;
}

inline Clause derived_clause(std::vector<Literal> lits, Inference rule, std::vector<ClauseId> parents,
                             bool goal_descendant) {
    Clause c;
    c.literals = canonical_literals(std::move(lits));
    c.role = ClauseRole::derived;
    c.rule = rule;
    c.parents = std::move(parents);
    c.goal_descendant = goal_descendant;
    return c;
}

/// All binary resolvents of c1 and c2. The variables of c2 are renamed
/// apart internally, so both clauses may use the same indices (c1 may be
/// c2). Results carry rule, parents and goal flag; age is left to the caller.
inline std::vector<Clause> resolve(const Clause& c1, const Clause& c2) {
    std::vector<Clause> out;
    const std::uint32_t offset = c1.variable_bound();
    std::vector<Literal> right;
    right.reserve(c2.literals.size());
    for (const Literal& l : c2.literals) right.push_back({l.positive, shift_variables(l.atom, offset)});
    const std::uint32_t vars = offset + c2.variable_bound();
    const bool goal = c1.goal_descendant || c2.goal_descendant;

    for (std::size_t i = 0; i < c1.literals.size(); ++i) {
        const Literal& a = c1.literals[i];
        for (std::size_t j = 0; j < right.size(); ++j) {
            const Literal& b = right[j];
            if (a.positive == b.positive || a.atom.functor() != b.atom.functor()) continue;
            Substitution sigma(vars);
            if (!sigma.unify(a.atom, b.atom)) continue;
            std::vector<Literal> lits;
            lits.reserve(c1.literals.size() + right.size() - 2);
            for (std::size_t k = 0; k < c1.literals.size(); ++k)
                if (k != i) lits.push_back({c1.literals[k].positive, sigma.apply(c1.literals[k].atom)});
            for (std::size_t k = 0; k < right.size(); ++k)
                if (k != j) lits.push_back({right[k].positive, sigma.apply(right[k].atom)});
            out.push_back(derived_clause(std::move(lits), Inference::resolution, {c1.age, c2.age}, goal));
        }
    }
    return out;
}

/// All factors of c: one per unifiable pair of same-polarity literals.
inline std::vector<Clause> factor(const Clause& c) {
    std::vector<Clause> out;
    const std::uint32_t vars = c.variable_bound();
    for (std::size_t i = 0; i < c.literals.size(); ++i) {
        for (std::size_t j = i + 1; j < c.literals.size(); ++j) {
            const Literal& a = c.literals[i];
            const Literal& b = c.literals[j];
            if (a.positive != b.positive || a.atom.functor() != b.atom.functor()) continue;
            Substitution sigma(vars);
            if (!sigma.unify(a.atom, b.atom)) continue;
            std::vector<Literal> lits;
            lits.reserve(c.literals.size() - 1);
            for (std::size_t k = 0; k < c.literals.size(); ++k)
                if (k != j) lits.push_back({c.literals[k].positive, sigma.apply(c.literals[k].atom)});
            out.push_back(derived_clause(std::move(lits), Inference::factoring, {c.age}, c.goal_descendant));
        }
    }
    return out;
}

/// True iff c contains some literal together with its complement.
inline bool is_tautology(const Clause& c) {
    for (std::size_t i = 0; i < c.literals.size(); ++i)
        for (std::size_t j = i + 1; j < c.literals.size(); ++j)
            if (c.literals[i].positive != c.literals[j].positive && c.literals[i].atom == c.literals[j].atom)
                return true;
    return false;
}

namespace detail {

inline bool subsume_from(const Clause& d, const Clause& c, std::size_t k, std::vector<bool>& used,
                         MatchBindings& b) {
    if (k == d.literals.size()) return true;
    const Literal& dl = d.literals[k];
    for (std::size_t i = 0; i < c.literals.size(); ++i) {
        const Literal& cl = c.literals[i];
        if (used[i] || cl.positive != dl.positive || cl.atom.functor() != dl.atom.functor()) continue;
        std::size_t mark = b.mark();
        if (b.match(dl.atom, cl.atom)) {
            used[i] = true;
            if (subsume_from(d, c, k + 1, used, b)) return true;
            used[i] = false;
        }
        b.undo(mark);
    }
    return false;
}

}  // namespace detail

/// d subsumes c iff dσ ⊆ c as literal multisets for a single σ.
inline bool subsumes(const Clause& d, const Clause& c) {
    if (d.literals.size() > c.literals.size()) return false;
    std::vector<bool> used(c.literals.size(), false);
    MatchBindings b(d.variable_bound());
    return detail::subsume_from(d, c, 0, used, b);
}

template <class Range>
bool forward_subsumed(const Clause& c, const Range& processed) {
    for (const Clause& d : processed)
        if (subsumes(d, c)) return true;
    return false;
}

}  // namespace simsel
