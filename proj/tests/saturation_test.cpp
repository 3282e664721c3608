#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace simsel;
using simsel::test::TermBuilder;

namespace {

const char* const kEveryKind[] = {
    "(1*FIFOWeight(ConstPrio))",
    "(1*Ref(ConstPrio,0.5,2,1,1,1))",
    "(1*ConjectureTermWeight(ConstPrio,Alf,Gen,Sum,0.5,2,1,1,1))",
    "(1*ConjectureTfIdfWeight(ConstPrio,Uni,Gen,Sum,ax))",
    "(1*ConjectureTfIdfWeight(ConstPrio,Alf,Ter,Sum,pro))",
    "(1*ConjecturePrefixWeight(ConstPrio,Alf,Top,Sum,1,3))",
    "(1*ConjectureLevWeight(ConstPrio,Uni,Gen,Sim,1,5,5))",
    "(1*ConjectureTedWeight(ConstPrio,Alf,Sub,Max,5,1,1))",
    "(1*ConjectureStrucWeight(ConstPrio,Uni,Ter,Sim,1,1,5))",
};

Limits generous() {
    Limits l;
    l.time_seconds = 20;
    return l;
}

}  // namespace

TEST(RoundRobin, TwoToOnePattern) {
    Heuristic h = parse_heuristic("(2*FIFOWeight(ConstPrio),1*ConjectureTermWeight(ConstPrio,Alf,Gen,Sum,0.5,2,1,1,1))");
    RoundRobin rr(h);
    EXPECT_EQ(rr.period(), 3u);
    std::size_t counts[2] = {0, 0};
    for (int i = 0; i < 100; ++i) {
        std::size_t k = rr.next();
        EXPECT_EQ(k, i % 3 == 2 ? 1u : 0u);
        ++counts[k];
    }
    EXPECT_EQ(counts[0], 67u);
    EXPECT_EQ(counts[1], 33u);
}

TEST(ProofState, SelectionFollowsSchedule) {
    TermBuilder b;
    std::vector<Clause> inputs;
    for (int i = 0; i < 30; ++i) inputs.push_back(b.clause("p(a" + std::to_string(i) + ")"));
    inputs.push_back(b.clause("~p(a29)", ClauseRole::negated_conjecture));
    ProofState state(inputs, parse_heuristic("(2*FIFOWeight(ConstPrio),1*ConjectureLevWeight(ConstPrio,Alf,Sub,Sim,1,1,1))"));
    std::vector<ClauseId> picked;
    for (int i = 0; i < 6; ++i) {
        picked.push_back(state.select_given());
        EXPECT_EQ(state.last_cef(), i % 3 == 2 ? 1u : 0u);
    }
    // FIFO takes ages 0, 1; Lev takes the exact conjecture copy p(a29)
    EXPECT_EQ(picked[0], 0u);
    EXPECT_EQ(picked[1], 1u);
    EXPECT_EQ(picked[2], 29u);
    EXPECT_EQ(picked[3], 2u);
    EXPECT_EQ(state.stats().selections_per_cef, (std::vector<std::uint64_t>{4, 2}));
}

TEST(ProofState, FifoSelectsInAgeOrder) {
    Problem p = load_problem(test::data_dir() + "/micro/m18_addition.p");
    ProofState state(p.clauses, parse_heuristic("(1*FIFOWeight(ConstPrio))"));
    ClauseId last = 0;
    bool first = true;
    for (int step = 0; step < 300 && !state.unprocessed_empty(); ++step) {
        ClauseId g = state.select_given();
        if (state.clause(g).empty()) break;
        if (!first) { EXPECT_GT(g, last); }
        first = false;
        last = g;
        state.move_to_processed(g);
        Clause given = state.clause(g);
        for (ClauseId pid : state.resolution_partners(given))
            for (Clause& c : resolve(given, state.clause(pid))) state.add_unprocessed(std::move(c));
        for (Clause& c : factor(given)) state.add_unprocessed(std::move(c));
    }
}

TEST(ProofState, EmptyClauseSelectedFirst) {
    TermBuilder b;
    std::vector<Clause> inputs{b.clause("p(a)"), b.clause("~p(X) | q(X)"), b.clause("~q(a)", ClauseRole::negated_conjecture),
                               b.clause("q(a)")};
    for (const char* spec : kEveryKind) {
        ProofState state(inputs, parse_heuristic(spec));
        Clause empty;
        empty.role = ClauseRole::derived;
        empty.rule = Inference::resolution;
        ClauseId id = state.add_unprocessed(empty);
        EXPECT_EQ(state.select_given(), id) << spec;
        EXPECT_EQ(state.evaluation(id, 0).priority, 0);
        EXPECT_EQ(state.evaluation(id, 0).weight, Weight(Rational(0)));
    }
}

TEST(ProofState, PreferGoalsTakesGoalClausesFirst) {
    TermBuilder b;
    std::vector<Clause> inputs{b.clause("p(a)"), b.clause("q(b)"), b.clause("~r(c,d,e)", ClauseRole::negated_conjecture)};
    ProofState state(inputs, parse_heuristic("(1*ConjectureTermWeight(PreferGoals,Alf,Sub,Sum,0.5,2,1,1,1))"));
    EXPECT_EQ(state.select_given(), 2u);
}

TEST(Saturate, ComplementaryUnits) {
    TermBuilder b;
    std::vector<Clause> inputs{b.clause("p"), b.clause("~p", ClauseRole::negated_conjecture)};
    for (const char* spec : kEveryKind) {
        SaturationResult r = saturate(inputs, parse_heuristic(spec), generous());
        EXPECT_EQ(r.outcome, Outcome::proof) << spec;
        EXPECT_LE(r.stats.processed, 2u) << spec;
        EXPECT_EQ(r.stats.generated, 1u) << spec;
    }
}

TEST(Saturate, SingleFactSaturates) {
    TermBuilder b;
    std::vector<Clause> inputs{b.clause("p(a)")};
    SaturationResult r = saturate(inputs, parse_heuristic(kEveryKind[6]), generous());
    EXPECT_EQ(r.outcome, Outcome::saturated);
    EXPECT_EQ(r.stats.processed, 1u);
    EXPECT_EQ(r.stats.generated, 0u);
}

TEST(Saturate, ModusPonensDerivation) {
    TermBuilder b;
    std::vector<Clause> inputs{b.clause("p(a)"), b.clause("~p(X) | q(X)"), b.clause("~q(a)", ClauseRole::negated_conjecture)};
    for (const char* spec : kEveryKind) {
        SaturationResult r = saturate(inputs, parse_heuristic(spec), generous());
        ASSERT_EQ(r.outcome, Outcome::proof) << spec;
        EXPECT_TRUE(r.derivation.back().empty());
        std::size_t leaves = 0, steps = 0;
        for (const Clause& c : r.derivation) (c.rule == Inference::input ? leaves : steps)++;
        EXPECT_EQ(leaves, 3u) << spec;
        EXPECT_EQ(steps, 2u) << spec;
        EXPECT_EQ(test::replay_derivation(r.derivation, inputs), "") << spec;
    }
}

TEST(Saturate, DerivationPrintFormat) {
    TermBuilder b;
    std::vector<Clause> inputs{b.clause("p(a)"), b.clause("~p(X) | q(X)"), b.clause("~q(a)", ClauseRole::negated_conjecture)};
    SaturationResult r = saturate(inputs, parse_heuristic("(1*FIFOWeight(ConstPrio))"), generous());
    std::string text = print_derivation(r.derivation, b.sig);
    EXPECT_NE(text.find("0. p(a) [input]\n"), std::string::npos) << text;
    EXPECT_NE(text.find("1. ~p(X1) | q(X1) [input]\n"), std::string::npos) << text;
    EXPECT_NE(text.find("$false [resolution, "), std::string::npos) << text;
}

TEST(Saturate, ResourceLimits) {
    Problem p = load_problem(test::data_dir() + "/perf/ground_facts.p");
    Limits l;
    l.max_processed = 50;
    SaturationResult r = saturate(p.clauses, parse_heuristic("(1*FIFOWeight(ConstPrio))"), l);
    EXPECT_EQ(r.outcome, Outcome::resource_out);
    EXPECT_EQ(r.stats.processed, 50u);
    Limits g;
    g.max_generated = 10;
    r = saturate(p.clauses, parse_heuristic("(1*ConjectureLevWeight(ConstPrio,Alf,Gen,Sim,1,1,1))"), g);
    EXPECT_EQ(r.outcome, Outcome::resource_out);
    EXPECT_EQ(r.stats.generated, 10u);
    Limits t;
    t.time_seconds = 1e-3;
    r = saturate(p.clauses, parse_heuristic("(1*ConjectureTedWeight(ConstPrio,Alf,Gen,Sim,1,1,1))"), t);
    EXPECT_EQ(r.outcome, Outcome::resource_out);
}

TEST(Saturate, NoConjectureStillRuns) {
    Problem p = parse_problem("cnf(a, axiom, p(a)). cnf(b, axiom, ~p(X) | q(X)). cnf(c, axiom, ~q(a)).");
    for (const char* spec : kEveryKind)
        EXPECT_EQ(saturate(p.clauses, parse_heuristic(spec), generous()).outcome, Outcome::proof) << spec;
}

TEST(Saturate, Deterministic) {
    for (const std::string& path : test::micro_problems()) {
        Problem p = load_problem(path);
        for (const char* spec : {kEveryKind[3], kEveryKind[6], kEveryKind[7]}) {
            Heuristic h = parse_heuristic(spec);
            SaturationResult x = saturate(p.clauses, h, generous()), y = saturate(p.clauses, h, generous());
            EXPECT_EQ(x.outcome, y.outcome);
            EXPECT_EQ(x.stats.processed, y.stats.processed);
            EXPECT_EQ(x.stats.generated, y.stats.generated);
            EXPECT_EQ(x.stats.discarded, y.stats.discarded);
            EXPECT_EQ(print_derivation(x.derivation, p.signature), print_derivation(y.derivation, p.signature));
        }
    }
}

TEST(Saturate, MicroSuiteDerivationsReplay) {
    for (const std::string& path : test::micro_problems()) {
        Problem p = load_problem(path);
        for (const char* spec : kEveryKind) {
            SaturationResult r = saturate(p.clauses, parse_heuristic(spec), generous());
            ASSERT_EQ(r.outcome, Outcome::proof) << path << " " << spec;
            EXPECT_EQ(test::replay_derivation(r.derivation, p.clauses), "") << path << " " << spec;
        }
    }
}

TEST(Saturate, GroundSoundnessOnFunctionFreeProblems) {
    std::size_t checked = 0;
    for (const std::string& path : test::micro_problems()) {
        Problem p = load_problem(path);
        std::vector<std::uint32_t> constants;
        bool function_free = true;
        for (std::uint32_t id = 0; id < p.signature.size(); ++id) {
            if (p.signature[id].kind == SymbolKind::constant) constants.push_back(id);
            if (p.signature[id].kind == SymbolKind::function) function_free = false;
        }
        if (!function_free || constants.size() > 3) continue;
        if (constants.empty()) constants.push_back(p.signature.intern("k0", SymbolKind::constant, 0));
        for (const char* spec : {kEveryKind[0], kEveryKind[6]}) {
            SaturationResult r = saturate(p.clauses, parse_heuristic(spec), generous());
            std::map<ClauseId, const Clause*> by_id;
            for (const Clause& c : r.derivation) by_id[c.age] = &c;
            oracle::GroundEntailment check(constants);
            for (const Clause& c : r.derivation) {
                if (c.rule == Inference::input) continue;
                std::vector<Clause> parents;
                for (ClauseId id : c.parents) parents.push_back(*by_id.at(id));
                EXPECT_TRUE(check.entails(parents, c)) << path << " clause " << c.age;
                ++checked;
            }
        }
    }
    EXPECT_GT(checked, 20u);
}
