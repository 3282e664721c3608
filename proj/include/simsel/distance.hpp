#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ranges>
#include <stdexcept>
#include <vector>

#include "simsel/rational.hpp"
#include "simsel/term.hpp"

namespace simsel {

/// Costs of symbol insertion, deletion and change (rename) for the
/// sequence and tree edit distances.
struct EditCosts {
    Rational insert{1};
    Rational remove{1};
    Rational change{1};

    friend bool operator==(const EditCosts&, const EditCosts&) = default;
};

/// Penalties of the structural distance: variable mismatch, instantiation
/// of a variable, generalization to a variable.
struct StructCosts {
    Rational miss{1};
    Rational inst{1};
    Rational gen{1};

    friend bool operator==(const StructCosts&, const StructCosts&) = default;
};

namespace detail {

/// Least common denominator of a cost vector; kernels run on integers
/// scaled by it and divide once at the end.
inline std::int64_t common_denominator(std::initializer_list<Rational> costs) {
    std::int64_t l = 1;
    for (const Rational& c : costs) {
        if (c < Rational(0)) throw std::invalid_argument("negative edit cost " + c.str());
        l = std::lcm(l, c.den());
    }
    return l;
}

inline std::int64_t to_units(const Rational& c, std::int64_t scale) { return c.num() * (scale / c.den()); }

}  // namespace detail

/// Weighted edit distance over two sequences, in integer cost units.
/// Deleting an element of `a` costs `del`, inserting an element of `b`
/// costs `ins`, changing one element into a different one costs `ch`.
template <std::ranges::random_access_range A, std::ranges::random_access_range B, class Cost>
Cost levenshtein_units(const A& a, const B& b, Cost ins, Cost del, Cost ch) {
    const std::size_t n = std::ranges::size(a), m = std::ranges::size(b);
    std::vector<Cost> row(m + 1);
    for (std::size_t j = 0; j <= m; ++j) row[j] = static_cast<Cost>(j) * ins;
    for (std::size_t i = 1; i <= n; ++i) {
        Cost diagonal = row[0];
        row[0] = static_cast<Cost>(i) * del;
        for (std::size_t j = 1; j <= m; ++j) {
            Cost above = row[j];
            Cost subst = diagonal + (a[i - 1] == b[j - 1] ? Cost{0} : ch);
            row[j] = std::min({above + del, row[j - 1] + ins, subst});
            diagonal = above;
        }
    }
    return row[m];
}

template <std::ranges::random_access_range A, std::ranges::random_access_range B>
Rational levenshtein(const A& a, const B& b, const EditCosts& costs) {
    std::int64_t scale = detail::common_denominator({costs.insert, costs.remove, costs.change});
    std::int64_t units = levenshtein_units(a, b, detail::to_units(costs.insert, scale),
                                           detail::to_units(costs.remove, scale),
                                           detail::to_units(costs.change, scale));
    return Rational(units, scale);
}

/// Post-order annotation of an ordered labelled tree for the Zhang-Shasha
/// algorithm: node labels, leftmost leaf descendant of every node, and the
/// key roots (the highest-numbered node for every distinct leftmost leaf).
class AnnotatedTree {
public:
    AnnotatedTree() = default;

    explicit AnnotatedTree(const Term& t) {
        labels_.reserve(t.size());
        leftmost_.reserve(t.size());
        annotate(t);
        std::vector<bool> seen(labels_.size(), false);
        for (std::size_t i = labels_.size(); i-- > 0;) {
            if (!seen[leftmost_[i]]) {
                seen[leftmost_[i]] = true;
                keyroots_.push_back(i);
            }
        }
        std::ranges::reverse(keyroots_);
    }

    std::size_t size() const { return labels_.size(); }
    Label label(std::size_t i) const { return labels_[i]; }
    std::size_t leftmost(std::size_t i) const { return leftmost_[i]; }
    const std::vector<std::size_t>& keyroots() const { return keyroots_; }

private:
    std::size_t annotate(const Term& t) {
        std::size_t first_leaf = labels_.size();
        bool first = true;
        for (const Term& a : t.args()) {
            std::size_t l = annotate(a);
            if (first) first_leaf = l;
            first = false;
        }
        labels_.push_back(t.label());
        leftmost_.push_back(first_leaf);
        return first_leaf;
    }

    std::vector<Label> labels_;
    std::vector<std::size_t> leftmost_;
    std::vector<std::size_t> keyroots_;
};

/// Zhang-Shasha ordered tree edit distance in integer cost units.
template <class Cost>
Cost tree_edit_distance_units(const AnnotatedTree& a, const AnnotatedTree& b, Cost ins, Cost del, Cost ren) {
    const std::size_t n = a.size(), m = b.size();
    if (n == 0) return static_cast<Cost>(m) * ins;
    if (m == 0) return static_cast<Cost>(n) * del;
    std::vector<Cost> tree(n * m);
    std::vector<Cost> forest((n + 1) * (m + 1));
    const std::size_t stride = m + 1;

    for (std::size_t i : a.keyroots()) {
        for (std::size_t j : b.keyroots()) {
            const std::size_t li = a.leftmost(i), lj = b.leftmost(j);
            const std::size_t rows = i - li + 2, cols = j - lj + 2;
            forest[0] = Cost{0};
            for (std::size_t di = 1; di < rows; ++di) forest[di * stride] = forest[(di - 1) * stride] + del;
            for (std::size_t dj = 1; dj < cols; ++dj) forest[dj] = forest[dj - 1] + ins;
            for (std::size_t di = 1; di < rows; ++di) {
                const std::size_t x = li + di - 1;
                for (std::size_t dj = 1; dj < cols; ++dj) {
                    const std::size_t y = lj + dj - 1;
                    Cost removal = forest[(di - 1) * stride + dj] + del;
                    Cost insertion = forest[di * stride + dj - 1] + ins;
                    if (a.leftmost(x) == li && b.leftmost(y) == lj) {
                        Cost rename = forest[(di - 1) * stride + dj - 1] + (a.label(x) == b.label(y) ? Cost{0} : ren);
                        Cost best = std::min({removal, insertion, rename});
                        forest[di * stride + dj] = best;
                        tree[x * m + y] = best;
                    } else {
                        std::size_t pi = a.leftmost(x) - li, pj = b.leftmost(y) - lj;
                        Cost subtree = forest[pi * stride + pj] + tree[x * m + y];
                        forest[di * stride + dj] = std::min({removal, insertion, subtree});
                    }
                }
            }
        }
    }
    return tree[(n - 1) * m + (m - 1)];
}

inline Rational tree_edit_distance(const AnnotatedTree& a, const AnnotatedTree& b, const EditCosts& costs) {
    std::int64_t scale = detail::common_denominator({costs.insert, costs.remove, costs.change});
    std::int64_t units = tree_edit_distance_units(a, b, detail::to_units(costs.insert, scale),
                                                  detail::to_units(costs.remove, scale),
                                                  detail::to_units(costs.change, scale));
    return Rational(units, scale);
}

inline Rational tree_edit_distance(const Term& a, const Term& b, const EditCosts& costs) {
    return tree_edit_distance(AnnotatedTree(a), AnnotatedTree(b), costs);
}

namespace detail {

inline std::int64_t struct_units(const Term& a, const Term& b, std::int64_t miss, std::int64_t inst,
                                 std::int64_t gen) {
    if (a.is_variable() && b.is_variable()) return a.var_index() == b.var_index() ? 0 : miss;
    if (a.is_variable()) return inst * b.size();
    if (b.is_variable()) return gen * a.size();
    if (a.functor() == b.functor() && a.arity() == b.arity()) {
        std::int64_t sum = 0;
        for (std::size_t k = 0; k < a.arity(); ++k) sum += struct_units(a.args()[k], b.args()[k], miss, inst, gen);
        return sum;
    }
    // generalize a to a fresh variable, then instantiate that variable to b
    return gen * a.size() + inst * b.size();
}

}  // namespace detail

/// Distance counted in generalization and instantiation steps.
inline Rational struct_distance(const Term& a, const Term& b, const StructCosts& costs) {
    std::int64_t scale = detail::common_denominator({costs.miss, costs.inst, costs.gen});
    return Rational(detail::struct_units(a, b, detail::to_units(costs.miss, scale),
                                         detail::to_units(costs.inst, scale), detail::to_units(costs.gen, scale)),
                    scale);
}

}  // namespace simsel
