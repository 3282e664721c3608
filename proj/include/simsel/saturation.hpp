#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <map>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "simsel/inference.hpp"
#include "simsel/related_set.hpp"
#include "simsel/weights.hpp"

namespace simsel {

struct HeuristicItem {
    std::uint32_t count = 1;
    Cef cef;

    friend bool operator==(const HeuristicItem&, const HeuristicItem&) = default;
};

/// Round-robin combination of clause evaluation functions: item i selects
/// `count` given clauses before the turn passes to item i + 1.
struct Heuristic {
    std::vector<HeuristicItem> items;

    void validate() const {
        if (items.empty()) throw std::invalid_argument("heuristic needs at least one CEF");
        for (const HeuristicItem& item : items) {
            if (item.count < 1) throw std::invalid_argument("CEF count must be at least 1");
            item.cef.weight.validate();
        }
    }

    friend bool operator==(const Heuristic&, const Heuristic&) = default;
};

/// Cursor over the expanded schedule CEF_1 x n_1, ..., CEF_k x n_k.
class RoundRobin {
public:
    explicit RoundRobin(const Heuristic& h) {
        h.validate();
        for (std::size_t i = 0; i < h.items.size(); ++i)
            schedule_.insert(schedule_.end(), h.items[i].count, i);
    }

    std::size_t next() {
        std::size_t cef = schedule_[pos_];
        pos_ = (pos_ + 1) % schedule_.size();
        return cef;
    }

    std::size_t period() const { return schedule_.size(); }

private:
    std::vector<std::size_t> schedule_;
    std::size_t pos_ = 0;
};

struct Limits {
    /// Wall-clock seconds; 0 disables the limit.
    double time_seconds = 0;
    /// 0 disables the limit.
    std::uint64_t max_processed = 0;
    std::uint64_t max_generated = 1'000'000;
};

enum class Outcome : std::uint8_t { proof, saturated, resource_out };

inline std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::proof: return "proof";
        case Outcome::saturated: return "saturated";
        case Outcome::resource_out: return "resource_out";
    }
    return "?";
}

struct Statistics {
    std::uint64_t processed = 0;
    std::uint64_t generated = 0;
    /// Given clauses dropped as tautologies or forward-subsumed.
    std::uint64_t discarded = 0;
    std::uint64_t selections = 0;
    std::vector<std::uint64_t> selections_per_cef;
    double elapsed_seconds = 0;
};

struct SaturationResult {
    Outcome outcome = Outcome::saturated;
    Statistics stats;
    /// For a proof: the empty clause and all its ancestors, ordered by age.
    std::vector<Clause> derivation;
};

/// Processed and unprocessed clause sets plus everything the heuristic
/// needs to rank unprocessed clauses.
class ProofState {
public:
    ProofState(std::span<const Clause> inputs, Heuristic heuristic)
        : heuristic_(std::move(heuristic)), schedule_(heuristic_), queues_(heuristic_.items.size()) {
        stats_.selections_per_cef.assign(heuristic_.items.size(), 0);
        for (const HeuristicItem& item : heuristic_.items) {
            const WeightFnSpec& w = item.cef.weight;
            Evaluator ev{item.cef, nullptr, nullptr};
            auto rkey = std::make_pair(w.norm, w.related);
            auto rit = related_.find(rkey);
            if (rit == related_.end()) rit = related_.emplace(rkey, build_related(inputs, w.related, w.norm)).first;
            ev.related = &rit->second;
            if (w.uses_documents()) {
                auto mode = std::get<DocMode>(w.params);
                auto dkey = std::make_pair(w.norm, mode);
                auto dit = docs_.find(dkey);
                if (dit == docs_.end()) {
                    dit = docs_.emplace(dkey, DocRegistry(mode, w.norm)).first;
                    if (mode == DocMode::ax)
                        for (const Clause& c : inputs)
                            if (c.role == ClauseRole::axiom) dit->second.register_document(c);
                }
                ev.docs = &dit->second;
            }
            evaluators_.push_back(ev);
        }
        for (const Clause& c : inputs) {
            Clause copy = c;
            copy.goal_descendant = copy.goal_descendant || copy.role == ClauseRole::negated_conjecture;
            add_unprocessed(std::move(copy));
        }
    }

    const Heuristic& heuristic() const { return heuristic_; }
    const Statistics& stats() const { return stats_; }
    Statistics& stats() { return stats_; }

    const Clause& clause(ClauseId id) const { return clauses_.at(id); }
    std::size_t clause_count() const { return clauses_.size(); }
    std::span<const ClauseId> processed() const { return processed_; }
    std::size_t unprocessed_count() const { return unprocessed_; }
    bool unprocessed_empty() const { return unprocessed_ == 0; }

    /// Evaluation pair of clause `id` under CEF `cef`.
    const Evaluation& evaluation(ClauseId id, std::size_t cef) const {
        return evaluations_.at(id * evaluators_.size() + cef);
    }

    /// CEF that made the most recent selection.
    std::size_t last_cef() const { return last_cef_; }

    /// Stamps the clause with the next age, evaluates it under every CEF and
    /// queues it. Returns its id.
    ClauseId add_unprocessed(Clause c) {
        c.age = clauses_.size();
        const ClauseId id = c.age;
        for (std::size_t k = 0; k < evaluators_.size(); ++k) {
            const Evaluator& ev = evaluators_[k];
            Evaluation e = evaluate(c, ev.cef, *ev.related, ev.docs);
            queues_[k].push({e.priority, e.weight, !c.empty(), id});
            evaluations_.push_back(std::move(e));
        }
        clauses_.push_back(std::move(c));
        in_unprocessed_.push_back(true);
        ++unprocessed_;
        return id;
    }

    /// Removes and returns the best clause of the CEF whose turn it is.
    ClauseId select_given() {
        if (unprocessed_ == 0) throw std::logic_error("select_given on empty unprocessed set");
        std::size_t k = schedule_.next();
        auto& q = queues_[k];
        while (!in_unprocessed_[q.top().id]) q.pop();
        ClauseId id = q.top().id;
        q.pop();
        in_unprocessed_[id] = false;
        --unprocessed_;
        last_cef_ = k;
        ++stats_.selections;
        ++stats_.selections_per_cef[k];
        return id;
    }

    bool forward_subsumed(const Clause& c) const {
        std::vector<ClauseId> candidates;
        for (const Literal& l : c.literals) {
            std::vector<Label> seq = symbol_sequence(l.atom);
            std::uint64_t h = l.positive ? 1 : 2;
            for (std::size_t k = 0; k < std::min(seq.size(), kPrefixKey); ++k) {
                h = mix(h, seq[k]);
                auto it = subsumption_index_.find(h);
                if (it != subsumption_index_.end())
                    candidates.insert(candidates.end(), it->second.begin(), it->second.end());
                if (seq[k] < 0) break;
            }
        }
        std::ranges::sort(candidates);
        auto [first, last] = std::ranges::unique(candidates);
        candidates.erase(first, last);
        return std::ranges::any_of(candidates, [&](ClauseId d) { return subsumes(clauses_[d], c); });
    }

    void move_to_processed(ClauseId id) {
        const Clause& g = clauses_[id];
        processed_.push_back(id);
        ++stats_.processed;
        if (!g.literals.empty()) subsumption_index_[prefix_key(g.literals.front())].push_back(id);
        for (const Literal& l : g.literals) {
            auto& bucket = literal_index_[key(l)];
            if (bucket.empty() || bucket.back() != id) bucket.push_back(id);
        }
        for (auto& [k, registry] : docs_)
            if (registry.mode() == DocMode::pro) registry.register_document(g);
    }

    /// Processed clauses (g included, once processed) holding a literal
    /// complementary in sign and predicate to some literal of g; ascending.
    std::vector<ClauseId> resolution_partners(const Clause& g) const {
        std::vector<ClauseId> out;
        for (const Literal& l : g.literals) {
            auto it = literal_index_.find(key({!l.positive, l.atom}));
            if (it != literal_index_.end()) out.insert(out.end(), it->second.begin(), it->second.end());
        }
        std::ranges::sort(out);
        auto [first, last] = std::ranges::unique(out);
        out.erase(first, last);
        return out;
    }

    std::vector<Clause> derivation_of(ClauseId root) const {
        std::vector<bool> seen(clauses_.size(), false);
        std::vector<ClauseId> stack{root};
        std::vector<ClauseId> ids;
        while (!stack.empty()) {
            ClauseId id = stack.back();
            stack.pop_back();
            if (seen[id]) continue;
            seen[id] = true;
            ids.push_back(id);
            for (ClauseId p : clauses_[id].parents) stack.push_back(p);
        }
        std::ranges::sort(ids);
        std::vector<Clause> out;
        out.reserve(ids.size());
        for (ClauseId id : ids) out.push_back(clauses_[id]);
        return out;
    }

private:
    struct Evaluator {
        Cef cef;
        const RelatedSet* related;
        const DocRegistry* docs;
    };

    struct QueueEntry {
        std::int64_t priority;
        Weight weight;
        bool nonempty;
        ClauseId id;

        /// Ordering for a min-heap: (priority, weight, nonempty, age).
        friend bool operator>(const QueueEntry& a, const QueueEntry& b) {
            if (a.priority != b.priority) return a.priority > b.priority;
            if (a.weight != b.weight) return a.weight > b.weight;
            if (a.nonempty != b.nonempty) return a.nonempty;
            return a.id > b.id;
        }
    };

    /// Subsumption candidates are indexed by the first literal's symbol
    /// prefix up to and including its first variable, at most kPrefixKey
    /// symbols. Any clause subsuming c has a key equal to a prefix of some
    /// literal of c.
    static constexpr std::size_t kPrefixKey = 6;

    static std::uint64_t mix(std::uint64_t h, Label l) {
        h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(l)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }

    static std::uint64_t prefix_key(const Literal& l) {
        std::vector<Label> seq = symbol_sequence(l.atom);
        std::uint64_t h = l.positive ? 1 : 2;
        for (std::size_t k = 0; k < std::min(seq.size(), kPrefixKey); ++k) {
            h = mix(h, seq[k]);
            if (seq[k] < 0) break;
        }
        return h;
    }

    static std::uint64_t key(const Literal& l) {
        return (static_cast<std::uint64_t>(l.atom.functor()) << 1) | (l.positive ? 1u : 0u);
    }

    Heuristic heuristic_;
    RoundRobin schedule_;
    std::map<std::pair<VarNorm, RelatedMode>, RelatedSet> related_;
    std::map<std::pair<VarNorm, DocMode>, DocRegistry> docs_;
    std::vector<Evaluator> evaluators_;
    std::vector<std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>>> queues_;

    std::deque<Clause> clauses_;
    std::vector<Evaluation> evaluations_;
    std::vector<bool> in_unprocessed_;
    std::size_t unprocessed_ = 0;
    std::vector<ClauseId> processed_;
    std::unordered_map<std::uint64_t, std::vector<ClauseId>> subsumption_index_;
    std::unordered_map<std::uint64_t, std::vector<ClauseId>> literal_index_;
    std::size_t last_cef_ = 0;
    Statistics stats_;
};

/// Given-clause loop: binary resolution and factoring, tautology deletion
/// and forward subsumption, clause selection by the round-robin heuristic.
inline SaturationResult saturate(std::span<const Clause> clauses, const Heuristic& h, const Limits& limits) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto elapsed = [&] { return std::chrono::duration<double>(clock::now() - start).count(); };

    ProofState state(clauses, h);
    SaturationResult result;
    auto finish = [&](Outcome outcome) {
        result.outcome = outcome;
        result.stats = state.stats();
        result.stats.elapsed_seconds = elapsed();
        return result;
    };
    auto prove = [&](ClauseId root) {
        result.derivation = state.derivation_of(root);
        return finish(Outcome::proof);
    };

    while (true) {
        const Statistics& st = state.stats();
        if (limits.time_seconds > 0 && elapsed() >= limits.time_seconds) return finish(Outcome::resource_out);
        if (limits.max_processed && st.processed >= limits.max_processed) return finish(Outcome::resource_out);
        if (limits.max_generated && st.generated >= limits.max_generated) return finish(Outcome::resource_out);
        if (state.unprocessed_empty()) return finish(Outcome::saturated);

        const ClauseId gid = state.select_given();
        const Clause& g = state.clause(gid);
        if (g.empty()) return prove(gid);
        if (is_tautology(g) || state.forward_subsumed(g)) {
            ++state.stats().discarded;
            continue;
        }
        state.move_to_processed(gid);

        std::vector<Clause> fresh;
        for (ClauseId pid : state.resolution_partners(g)) {
            std::vector<Clause> rs = resolve(g, state.clause(pid));
            std::ranges::move(rs, std::back_inserter(fresh));
        }
        std::ranges::move(factor(g), std::back_inserter(fresh));
        for (Clause& c : fresh) {
            if (limits.max_generated && st.generated >= limits.max_generated) return finish(Outcome::resource_out);
            ++state.stats().generated;
            bool empty = c.empty();
            ClauseId id = state.add_unprocessed(std::move(c));
            if (empty) return prove(id);
        }
    }
}

inline std::string_view rule_name(Inference r) {
    switch (r) {
        case Inference::input: return "input";
        case Inference::resolution: return "resolution";
        case Inference::factoring: return "factoring";
    }
    return "?";
}

/// One line per clause: `id. <disjunction> [rule, parent ids]`.
inline std::string print_derivation(std::span<const Clause> derivation, const Signature& sig) {
    std::string out;
    for (const Clause& c : derivation) {
        out += std::to_string(c.age);
        out += ". ";
        out += to_string(c, sig);
        out += " [";
        out += rule_name(c.rule);
        for (ClauseId p : c.parents) {
            out += ", ";
            out += std::to_string(p);
        }
        out += "]\n";
    }
    return out;
}

}  // namespace simsel
