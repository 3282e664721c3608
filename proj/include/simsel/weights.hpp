#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <variant>

#include "simsel/rational.hpp"
#include "simsel/related_distance.hpp"
#include "simsel/related_set.hpp"
#include "simsel/term.hpp"

namespace simsel {

enum class WeightKind : std::uint8_t { Ref, Term, Tfidf, Pref, Lev, Ted, Struc, FIFO };
enum class Extension : std::uint8_t { Sim, Sum, Max };
enum class DocMode : std::uint8_t { ax, pro };
enum class PriorityFn : std::uint8_t { ConstPrio, PreferGoals };

/// Per-symbol-class weights and the conjecture discount.
struct SymbolWeights {
    Rational conj{1, 2};
    Rational function{2};
    Rational constant{1};
    Rational predicate{1};
    Rational variable{1};

    Rational of(SymbolKind k) const {
        switch (k) {
            case SymbolKind::variable: return variable;
            case SymbolKind::constant: return constant;
            case SymbolKind::function: return function;
            case SymbolKind::predicate: return predicate;
        }
        return variable;
    }

    friend bool operator==(const SymbolWeights&, const SymbolWeights&) = default;
};

struct PrefCosts {
    Rational match{1};
    Rational miss{3};

    friend bool operator==(const PrefCosts&, const PrefCosts&) = default;
};

using WeightParams = std::variant<std::monostate, SymbolWeights, DocMode, PrefCosts, EditCosts, StructCosts>;

struct WeightFnSpec {
    WeightKind kind = WeightKind::FIFO;
    VarNorm norm = VarNorm::Alf;
    RelatedMode related = RelatedMode::Ter;
    Extension ext = Extension::Sim;
    WeightParams params;

    /// Checks that the parameter block belongs to the kind.
    void validate() const {
        bool ok = false;
        switch (kind) {
            case WeightKind::FIFO: ok = std::holds_alternative<std::monostate>(params); break;
            case WeightKind::Ref:
            case WeightKind::Term: ok = std::holds_alternative<SymbolWeights>(params); break;
            case WeightKind::Tfidf: ok = std::holds_alternative<DocMode>(params); break;
            case WeightKind::Pref: ok = std::holds_alternative<PrefCosts>(params); break;
            case WeightKind::Lev:
            case WeightKind::Ted: ok = std::holds_alternative<EditCosts>(params); break;
            case WeightKind::Struc: ok = std::holds_alternative<StructCosts>(params); break;
        }
        if (!ok) throw std::invalid_argument("weight function parameters do not match its kind");
    }

    /// Whether evaluation consults the conjecture-related set.
    bool uses_related() const { return kind != WeightKind::FIFO; }
    bool uses_documents() const { return kind == WeightKind::Tfidf; }

    friend bool operator==(const WeightFnSpec&, const WeightFnSpec&) = default;
};

struct Cef {
    PriorityFn priority = PriorityFn::ConstPrio;
    WeightFnSpec weight;

    friend bool operator==(const Cef&, const Cef&) = default;
};

/// Evaluation pair; smaller is better.
struct Evaluation {
    std::int64_t priority = 0;
    Weight weight;
};

// ----------------------------------------------------------------------------
// Document statistics for TF-IDF
// ----------------------------------------------------------------------------

/// Documents are clauses; df counts the documents containing a
/// (normalized) subterm at least once.
class DocRegistry {
public:
    DocRegistry(DocMode mode, VarNorm norm) : mode_(mode), norm_(norm) {}

    DocMode mode() const { return mode_; }
    VarNorm norm() const { return norm_; }
    std::uint64_t document_count() const { return documents_; }

    std::uint64_t document_frequency(const Term& normalized) const {
        auto it = df_.find(normalized);
        return it == df_.end() ? 0 : it->second;
    }

    void register_document(const Clause& c) {
        TermSet distinct;
        for (const Literal& l : c.literals)
            for_each_subterm(l.atom, [&](const Term& s) { distinct.insert(normalize(s, norm_)); });
        for (const Term& t : distinct) ++df_[t];
        ++documents_;
    }

private:
    DocMode mode_;
    VarNorm norm_;
    std::uint64_t documents_ = 0;
    TermMap<std::uint64_t> df_;
};

// ----------------------------------------------------------------------------
// Weight-one kernels. Every kernel expects its term normalized under the
// related set's normalization.
// ----------------------------------------------------------------------------

inline Rational weight_one_term(const Term& t, const RelatedSet& r, const SymbolWeights& w) {
    Rational base = w.of(t.kind());
    return r.contains(t) ? base * w.conj : base;
}

/// 1 / (1 + tf * ln((1 + |D|) / (1 + df))).
inline double tfidf_weight(std::uint64_t tf, std::uint64_t documents, std::uint64_t df) {
    if (df > documents) throw std::invalid_argument("document frequency exceeds document count");
    double tfidf = static_cast<double>(tf) *
                   std::log((1.0 + static_cast<double>(documents)) / (1.0 + static_cast<double>(df)));
    return 1.0 / (1.0 + tfidf);
}

inline double weight_one_tfidf(const Term& t, const RelatedSet& r, const DocRegistry& docs) {
    return tfidf_weight(r.term_frequency(t), docs.document_count(), docs.document_frequency(t));
}

inline Rational weight_one_pref(const Term& t, const RelatedSet& r, const PrefCosts& c) {
    auto prefix = static_cast<std::int64_t>(longest_related_prefix(t, r));
    return c.match * Rational(prefix) + c.miss * Rational(static_cast<std::int64_t>(t.size()) - prefix);
}

inline Rational weight_one_distance(const Term& t, const RelatedSet& r, DistanceKernel kernel,
                                    const KernelCosts& costs) {
    return min_distance_to_related(t, r, kernel, costs);
}

/// Lifts a weight-one kernel to a term: the root value (Sim), the sum over
/// all subterm occurrences (Sum), or their maximum (Max).
template <class Omega>
Weight extend(const Term& t, Extension e, Omega&& omega) {
    switch (e) {
        case Extension::Sim: return Weight(omega(t));
        case Extension::Sum: {
            Weight total(Rational(0));
            bool first = true;
            for_each_subterm(t, [&](const Term& s) {
                Weight w(omega(s));
                total = first ? w : total + w;
                first = false;
            });
            return total;
        }
        case Extension::Max: {
            Weight best(omega(t));
            for_each_subterm(t, [&](const Term& s) { best = max(best, Weight(omega(s))); });
            return best;
        }
    }
    return Weight(omega(t));
}

namespace detail {

inline Weight weight_one(const Term& raw, const WeightFnSpec& spec, const RelatedSet& r, const DocRegistry* docs) {
    Term t = normalize(raw, spec.norm);
    switch (spec.kind) {
        case WeightKind::Term: return weight_one_term(t, r, std::get<SymbolWeights>(spec.params));
        case WeightKind::Tfidf:
            if (!docs) throw std::logic_error("TF-IDF weight evaluated without a document registry");
            return Weight::real(weight_one_tfidf(t, r, *docs));
        case WeightKind::Pref: return weight_one_pref(t, r, std::get<PrefCosts>(spec.params));
        case WeightKind::Lev:
            return weight_one_distance(t, r, DistanceKernel::lev, std::get<EditCosts>(spec.params));
        case WeightKind::Ted:
            return weight_one_distance(t, r, DistanceKernel::ted, std::get<EditCosts>(spec.params));
        case WeightKind::Struc:
            return weight_one_distance(t, r, DistanceKernel::struc, std::get<StructCosts>(spec.params));
        case WeightKind::Ref:
        case WeightKind::FIFO: break;
    }
    throw std::logic_error("kind has no weight-one kernel");
}

}  // namespace detail

/// Symbol counting with a discount for symbols that occur in the conjecture.
/// Variables are never discounted.
inline Rational conjecture_symbol_weight(const Clause& c, const RelatedSet& r, const SymbolWeights& w) {
    Rational total(0);
    const auto& conj = r.conjecture_symbols();
    for (const Literal& l : c.literals) {
        for_each_subterm(l.atom, [&](const Term& s) {
            Rational base = w.of(s.kind());
            if (!s.is_variable() && conj.contains(s.functor())) base *= w.conj;
            total += base;
        });
    }
    return total;
}

/// Clause weight: the sum over literal atoms of the extended kernel, with
/// polarity ignored. FIFO yields the age, Ref the conjecture symbol weight.
/// The empty clause weighs 0 under every kind.
inline Weight clause_weight(const Clause& c, const WeightFnSpec& spec, const RelatedSet& r,
                            const DocRegistry* docs = nullptr) {
    if (c.empty()) return Weight(Rational(0));
    switch (spec.kind) {
        case WeightKind::FIFO: return Weight(Rational(static_cast<std::int64_t>(c.age)));
        case WeightKind::Ref: return Weight(conjecture_symbol_weight(c, r, std::get<SymbolWeights>(spec.params)));
        default: break;
    }
    Weight total(Rational(0));
    bool first = true;
    for (const Literal& l : c.literals) {
        Weight w = extend(l.atom, spec.ext, [&](const Term& s) { return detail::weight_one(s, spec, r, docs); });
        total = first ? w : total + w;
        first = false;
    }
    return total;
}

inline std::int64_t priority(const Clause& c, PriorityFn p) {
    switch (p) {
        case PriorityFn::ConstPrio: return 0;
        case PriorityFn::PreferGoals:
            return (c.role == ClauseRole::negated_conjecture || c.goal_descendant) ? 0 : 1;
    }
    return 0;
}

inline Evaluation evaluate(const Clause& c, const Cef& cef, const RelatedSet& r, const DocRegistry* docs = nullptr) {
    return {priority(c, cef.priority), clause_weight(c, cef.weight, r, docs)};
}

inline std::string_view kind_name(WeightKind k) {
    switch (k) {
        case WeightKind::Ref: return "Ref";
        case WeightKind::Term: return "ConjectureTermWeight";
        case WeightKind::Tfidf: return "ConjectureTfIdfWeight";
        case WeightKind::Pref: return "ConjecturePrefixWeight";
        case WeightKind::Lev: return "ConjectureLevWeight";
        case WeightKind::Ted: return "ConjectureTedWeight";
        case WeightKind::Struc: return "ConjectureStrucWeight";
        case WeightKind::FIFO: return "FIFOWeight";
    }
    return "?";
}

inline std::string_view extension_name(Extension e) {
    switch (e) {
        case Extension::Sim: return "Sim";
        case Extension::Sum: return "Sum";
        case Extension::Max: return "Max";
    }
    return "?";
}

inline std::string_view priority_name(PriorityFn p) {
    return p == PriorityFn::ConstPrio ? "ConstPrio" : "PreferGoals";
}

}  // namespace simsel
