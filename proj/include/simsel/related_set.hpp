#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "simsel/distance.hpp"
#include "simsel/term.hpp"

namespace simsel {

/// How the conjecture-related set is populated.
///  Ter: conjecture atoms and their immediate arguments.
///  Sub: every subterm of the conjecture atoms.
///  Top: Sub plus the one-layer generalization f(X1,...,Xn) of each member.
///  Gen: Sub, with membership extended to every generalization.
enum class RelatedMode : std::uint8_t { Ter, Sub, Top, Gen };

struct RelatedMember {
    Term term;
    /// Number of times the term was produced while building the set.
    std::uint64_t multiplicity = 0;
    std::vector<Label> sequence;
    AnnotatedTree tree;
};

class RelatedSet {
public:
    RelatedSet(RelatedMode mode, VarNorm norm) : mode_(mode), norm_(norm) {}

    RelatedMode mode() const { return mode_; }
    VarNorm norm() const { return norm_; }
    bool empty() const { return members_.empty(); }
    std::span<const RelatedMember> members() const { return members_; }

    /// Functor ids occurring anywhere in the conjecture clauses.
    const std::unordered_set<std::uint32_t>& conjecture_symbols() const { return conjecture_symbols_; }

    /// Membership of a term already normalized under norm(). Exact for
    /// Ter/Sub/Top; for Gen, true iff the term matches onto some member.
    bool contains(const Term& t) const {
        if (index_.contains(t)) return true;
        if (mode_ != RelatedMode::Gen || members_.empty()) return false;
        if (t.is_variable()) return true;
        auto it = by_head_.find(t.label());
        if (it == by_head_.end()) return false;
        return std::ranges::any_of(it->second, [&](std::size_t i) { return matches(t, members_[i].term); });
    }

    /// Occurrences of t in the set, counted with construction multiplicity.
    /// Under Gen every member t generalizes contributes its multiplicity.
    std::uint64_t term_frequency(const Term& t) const {
        if (mode_ != RelatedMode::Gen) {
            auto it = index_.find(t);
            return it == index_.end() ? 0 : members_[it->second].multiplicity;
        }
        std::uint64_t tf = 0;
        if (t.is_variable()) {
            for (const RelatedMember& m : members_) tf += m.multiplicity;
            return tf;
        }
        auto it = by_head_.find(t.label());
        if (it == by_head_.end()) return 0;
        for (std::size_t i : it->second)
            if (matches(t, members_[i].term)) tf += members_[i].multiplicity;
        return tf;
    }

    /// Inserts one occurrence of `t` (normalized here).
    void add(const Term& t) {
        Term n = normalize(t, norm_);
        auto [it, fresh] = index_.try_emplace(n, members_.size());
        if (fresh) {
            members_.push_back({n, 0, symbol_sequence(n), AnnotatedTree(n)});
            by_head_[n.label()].push_back(it->second);
        }
        ++members_[it->second].multiplicity;
    }

    void add_conjecture_symbols(const Term& t) {
        for_each_subterm(t, [&](const Term& s) {
            if (!s.is_variable()) conjecture_symbols_.insert(s.functor());
        });
    }

private:
    RelatedMode mode_;
    VarNorm norm_;
    std::vector<RelatedMember> members_;
    TermMap<std::size_t> index_;
    std::unordered_map<Label, std::vector<std::size_t>> by_head_;
    std::unordered_set<std::uint32_t> conjecture_symbols_;
};

/// Builds the related set from the negated_conjecture clauses among
/// `clauses`; other clauses are ignored. No conjecture gives an empty set.
inline RelatedSet build_related(std::span<const Clause> clauses, RelatedMode mode, VarNorm norm) {
    RelatedSet r(mode, norm);
    for (const Clause& c : clauses) {
        if (c.role != ClauseRole::negated_conjecture) continue;
        for (const Literal& lit : c.literals) {
            const Term& atom = lit.atom;
            r.add_conjecture_symbols(atom);
            if (mode == RelatedMode::Ter) {
                r.add(atom);
                for (const Term& arg : atom.args()) r.add(arg);
                continue;
            }
            for_each_subterm(atom, [&](const Term& s) {
                r.add(s);
                if (mode == RelatedMode::Top && !s.is_variable() && s.arity() > 0) {
                    std::vector<Term> fresh;
                    fresh.reserve(s.arity());
                    for (std::uint32_t k = 0; k < s.arity(); ++k) fresh.push_back(Term::variable(k));
                    r.add(Term::application(s.kind(), s.functor(), std::move(fresh)));
                }
            });
        }
    }
    return r;
}

inline std::string_view mode_name(RelatedMode m) {
    switch (m) {
        case RelatedMode::Ter: return "Ter";
        case RelatedMode::Sub: return "Sub";
        case RelatedMode::Top: return "Top";
        case RelatedMode::Gen: return "Gen";
    }
    return "?";
}

inline std::string_view norm_name(VarNorm v) { return v == VarNorm::Alf ? "Alf" : "Uni"; }

}  // namespace simsel
