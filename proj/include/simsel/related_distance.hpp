#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "simsel/distance.hpp"
#include "simsel/related_set.hpp"

namespace simsel {

/// Stand-in for the minimum distance to an empty related set.
inline const Rational kEmptyRelatedDistance{std::int64_t{1} << 20};

enum class DistanceKernel : std::uint8_t { lev, ted, struc };

/// Length of the common prefix of two symbol sequences.
inline std::size_t common_prefix(std::span<const Label> a, std::span<const Label> b) {
    auto [ia, ib] = std::ranges::mismatch(a, b);
    return static_cast<std::size_t>(ia - a.begin());
}

namespace detail {

/// Pre-order walk of `pattern` against `target` where a pattern variable may
/// stand for a whole target subterm (consistently with its earlier uses).
/// Counts the pattern symbols consumed before the first mismatch; this is the
/// longest prefix `pattern` shares with any generalization of `target`.
class PrefixMatcher {
public:
    explicit PrefixMatcher(std::uint32_t vars) : bindings_(vars) {}

    std::size_t run(const Term& pattern, const Term& target) {
        count_ = 0;
        walk(pattern, target);
        return count_;
    }

private:
    bool walk(const Term& p, const Term& t) {
        if (p.is_variable()) {
            if (!bindings_.match(p, t)) return false;
            ++count_;
            return true;
        }
        if (t.is_variable() || p.functor() != t.functor()) return false;
        ++count_;
        for (std::size_t k = 0; k < p.arity(); ++k)
            if (!walk(p.args()[k], t.args()[k])) return false;
        return true;
    }

    MatchBindings bindings_;
    std::size_t count_ = 0;
};

}  // namespace detail

/// Longest prefix the symbol sequence of `t` shares with a term of R. For
/// Gen-mode sets the generalizations of the members take part as well.
inline std::size_t longest_related_prefix(const Term& t, const RelatedSet& r) {
    std::size_t best = 0;
    if (r.mode() == RelatedMode::Gen) {
        for (const RelatedMember& m : r.members()) {
            detail::PrefixMatcher matcher(t.variable_bound());
            best = std::max(best, matcher.run(t, m.term));
            if (best == t.size()) break;
        }
        return best;
    }
    std::vector<Label> seq = symbol_sequence(t);
    for (const RelatedMember& m : r.members()) {
        best = std::max(best, common_prefix(seq, m.sequence));
        if (best == seq.size()) break;
    }
    return best;
}

using KernelCosts = std::variant<EditCosts, StructCosts>;

/// Minimum kernel distance from t to the base members of R; the
/// kEmptyRelatedDistance constant when R is empty.
inline Rational min_distance_to_related(const Term& t, const RelatedSet& r, DistanceKernel kernel,
                                        const KernelCosts& costs) {
    if (r.empty()) return kEmptyRelatedDistance;
    Rational best = kEmptyRelatedDistance;
    bool first = true;
    auto consider = [&](const Rational& d) {
        if (first || d < best) best = d;
        first = false;
    };
    switch (kernel) {
        case DistanceKernel::lev: {
            const auto& c = std::get<EditCosts>(costs);
            std::vector<Label> seq = symbol_sequence(t);
            for (const RelatedMember& m : r.members()) {
                consider(levenshtein(seq, m.sequence, c));
                if (best == Rational(0)) break;
            }
            break;
        }
        case DistanceKernel::ted: {
            const auto& c = std::get<EditCosts>(costs);
            AnnotatedTree tree(t);
            for (const RelatedMember& m : r.members()) {
                consider(tree_edit_distance(tree, m.tree, c));
                if (best == Rational(0)) break;
            }
            break;
        }
        case DistanceKernel::struc: {
            const auto& c = std::get<StructCosts>(costs);
            for (const RelatedMember& m : r.members()) {
                consider(struct_distance(t, m.term, c));
                if (best == Rational(0)) break;
            }
            break;
        }
    }
    return best;
}

}  // namespace simsel
