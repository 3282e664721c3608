#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace simsel;
using simsel::test::TermBuilder;

TEST(Parse, AxiomWithTwoLiterals) {
    Problem p = parse_problem("cnf(a, axiom, p(X) | ~q(X)).");
    ASSERT_EQ(p.clauses.size(), 1u);
    const Clause& c = p.clauses[0];
    EXPECT_EQ(c.role, ClauseRole::axiom);
    ASSERT_EQ(c.literals.size(), 2u);
    EXPECT_TRUE(c.literals[0].positive);
    EXPECT_FALSE(c.literals[1].positive);
    EXPECT_EQ(to_string(c, p.signature), "p(X1) | ~q(X1)");
    EXPECT_EQ(c.literals[0].atom.args()[0], c.literals[1].atom.args()[0]);
    EXPECT_EQ(c.name, "a");
}

TEST(Parse, NegatedConjecture) {
    Problem p = parse_problem("cnf(g, negated_conjecture, ~p(a)).");
    ASSERT_EQ(p.clauses.size(), 1u);
    EXPECT_EQ(p.clauses[0].role, ClauseRole::negated_conjecture);
    EXPECT_EQ(to_string(p.clauses[0], p.signature), "~p(a)");
}

TEST(Parse, ArityClash) {
    try {
        parse_problem("cnf(b, axiom, p(a,b)). cnf(c, axiom, p(a)).");
        FAIL() << "accepted inconsistent arity";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("p"), std::string::npos);
        EXPECT_EQ(e.line(), 1u);
    }
}

TEST(Parse, HypothesisIsAxiom) {
    Problem p = parse_problem("cnf(h, hypothesis, q(b)).");
    EXPECT_EQ(p.clauses[0].role, ClauseRole::axiom);
}

TEST(Parse, UnknownRole) { EXPECT_THROW(parse_problem("cnf(h, lemma, q(b))."), ParseError); }

TEST(Parse, SyntaxErrorLocation) {
    try {
        parse_problem("% comment\ncnf(a, axiom, p(a)).\ncnf(b, axiom, p(a) | ).\n");
        FAIL() << "accepted a dangling disjunction";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_GT(e.column(), 1u);
    }
}

TEST(Parse, IncludeRejected) { EXPECT_THROW(parse_problem("include('Axioms/SET001-0.ax')."), ParseError); }

TEST(Parse, CommentsAnnotationsAndParentheses) {
    Problem p = parse_problem(
        "% leading comment\n"
        "/* block\n comment */\n"
        "cnf(a, axiom, (p(X) | q(f(X,Y),Y)), file('x.p', a)).\n"
        "cnf(b, axiom, ~r | $false).\n");
    ASSERT_EQ(p.clauses.size(), 2u);
    EXPECT_EQ(to_string(p.clauses[0], p.signature), "p(X1) | q(f(X1,X2),X2)");
    EXPECT_EQ(to_string(p.clauses[1], p.signature), "~r");
}

TEST(Parse, VariablesScopedPerClause) {
    Problem p = parse_problem("cnf(a, axiom, p(X, Y)). cnf(b, axiom, p(Y, X)).");
    EXPECT_EQ(p.clauses[0].literals, p.clauses[1].literals);
}

TEST(Parse, EqualityAsPredicate) {
    Problem p = parse_problem("cnf(e, axiom, f(X) = X | a != b).");
    EXPECT_EQ(to_string(p.clauses[0], p.signature), "f(X1) = X1 | a != b");
    EXPECT_EQ(p.clauses[0].literals[0].atom.kind(), SymbolKind::predicate);
}

TEST(Normalize, AlfRenamesByFirstOccurrence) {
    TermBuilder b;
    EXPECT_EQ(normalize(b.term("f(Y,X,Y)"), VarNorm::Alf), b.term("f(X,Y,X)"));
    EXPECT_EQ(b.str(normalize(b.term("f(Y,X,Y)"), VarNorm::Alf)), "f(X1,X2,X1)");
}

TEST(Normalize, UniCollapsesVariables) {
    TermBuilder b;
    EXPECT_EQ(b.str(normalize(b.term("f(Y,X,Y)"), VarNorm::Uni)), "f(X1,X1,X1)");
}

TEST(Normalize, GroundUnchanged) {
    TermBuilder b;
    Term t = b.term("f(a,b)");
    EXPECT_TRUE(normalize(t, VarNorm::Alf).same_node(t));
    EXPECT_TRUE(normalize(t, VarNorm::Uni).same_node(t));
}

TEST(Subterms, Examples) {
    TermBuilder b;
    TermSet s = subterms(b.term("f(g(a),X)"));
    EXPECT_EQ(s.size(), 4u);
    for (const char* x : {"f(g(a),X)", "g(a)", "a", "X"}) EXPECT_TRUE(s.contains(b.term(x))) << x;
    EXPECT_EQ(subterms(b.term("a")).size(), 1u);
    TermSet dup = subterms(b.term("f(a,a)"));
    EXPECT_EQ(dup.size(), 2u);
    EXPECT_TRUE(dup.contains(b.term("a")));
}

TEST(SymbolSequence, PreOrder) {
    TermBuilder b;
    Term t = b.term("f(g(a),X)");
    std::vector<Label> expect{Label(b.symbol("f")), Label(b.symbol("g")), Label(b.symbol("a")), -1};
    EXPECT_EQ(symbol_sequence(t), expect);
    EXPECT_EQ(symbol_sequence(b.term("c")).size(), 1u);
    EXPECT_EQ(symbol_sequence(b.term("f(a,b)")).size(), 3u);
}

TEST(TermSize, Examples) {
    TermBuilder b;
    EXPECT_EQ(term_size(b.term("f(a,b)")), 3u);
    EXPECT_EQ(term_size(b.term("X")), 1u);
    EXPECT_EQ(term_size(b.term("f(g(X),g(X))")), 5u);
}

TEST(Terms, SharedStructureEquality) {
    TermBuilder b;
    Term x = b.term("f(g(a),h(X,b))");
    Term y = b.term("f(g(a),h(X,b))");
    EXPECT_EQ(x, y);
    EXPECT_EQ(x.hash(), y.hash());
    EXPECT_NE(x, b.term("f(g(a),h(b,X))"));
    EXPECT_FALSE(x.ground());
    EXPECT_EQ(x.variable_bound(), 1u);
}

TEST(Matching, OneSided) {
    TermBuilder b;
    EXPECT_TRUE(matches(b.term("f(X,Y)"), b.term("f(a,g(b))")));
    EXPECT_TRUE(matches(b.term("f(X,X)"), b.term("f(a,a)")));
    EXPECT_FALSE(matches(b.term("f(X,X)"), b.term("f(a,b)")));
    EXPECT_FALSE(matches(b.term("f(a,b)"), b.term("f(X,b)")));
}

class TermProperties : public ::testing::Test {
protected:
    TermBuilder b;
    test::RandomTerms gen{b.sig, 11, {{"f", 2}, {"g", 1}, {"h", 3}, {"a", 0}, {"b", 0}}, 3};
};

TEST_F(TermProperties, NormalizeIdempotent) {
    for (int i = 0; i < 500; ++i) {
        Term t = gen.term(12);
        for (VarNorm v : {VarNorm::Alf, VarNorm::Uni}) EXPECT_EQ(normalize(normalize(t, v), v), normalize(t, v));
    }
}

TEST_F(TermProperties, UniFactorsThroughAlf) {
    for (int i = 0; i < 500; ++i) {
        Term t = gen.term(12);
        EXPECT_EQ(normalize(t, VarNorm::Uni), normalize(normalize(t, VarNorm::Alf), VarNorm::Uni));
    }
}

TEST_F(TermProperties, SequenceLengthIsSize) {
    for (int i = 0; i < 500; ++i) {
        Term t = gen.term(15);
        EXPECT_EQ(symbol_sequence(t).size(), term_size(t));
        EXPECT_EQ(static_cast<std::int64_t>(term_size(t)), oracle::nodes(t));
    }
}

TEST_F(TermProperties, SubtermsClosed) {
    for (int i = 0; i < 300; ++i) {
        TermSet all = subterms(gen.term(12));
        for (const Term& s : all)
            for (const Term& u : subterms(s)) EXPECT_TRUE(all.contains(u));
    }
}

TEST_F(TermProperties, PrintParseRoundTrip) {
    std::mt19937_64& rng = gen.rng();
    std::string text;
    for (int i = 0; i < 60; ++i) {
        Clause c;
        c.role = i % 7 == 0 ? ClauseRole::negated_conjecture : ClauseRole::axiom;
        c.name = "c" + std::to_string(i);
        int n = 1 + static_cast<int>(rng() % 3);
        for (int k = 0; k < n; ++k) {
            const char* pred = k % 2 ? "p" : "q";
            Term arg = gen.term(8);
            std::string atom = std::string(pred) + "(" + to_string(arg, b.sig) + ")";
            text += (k ? " | " : "");
            text += (rng() % 2 ? "~" : "") + atom;
        }
        text = "cnf(" + c.name + ", " + std::string(role_name(c.role)) + ", " + text + ").\n";
        Problem once = parse_problem(text);
        Problem twice = parse_problem(print_problem(once));
        ASSERT_EQ(once.clauses.size(), twice.clauses.size());
        for (std::size_t j = 0; j < once.clauses.size(); ++j) {
            EXPECT_EQ(once.clauses[j].literals, twice.clauses[j].literals);
            EXPECT_EQ(once.clauses[j].role, twice.clauses[j].role);
        }
        EXPECT_EQ(print_problem(once), print_problem(twice));
        text.clear();
    }
}

TEST(Printing, MicroSuiteRoundTrips) {
    for (const std::string& path : test::micro_problems()) {
        Problem once = load_problem(path);
        Problem twice = parse_problem(print_problem(once));
        ASSERT_EQ(once.clauses.size(), twice.clauses.size()) << path;
        for (std::size_t j = 0; j < once.clauses.size(); ++j)
            EXPECT_EQ(once.clauses[j].literals, twice.clauses[j].literals) << path;
    }
}

TEST(Rationals, ParseAndPrint) {
    EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
    EXPECT_EQ(Rational::parse("7/4"), Rational(7, 4));
    EXPECT_EQ(Rational::parse("-2"), Rational(-2));
    EXPECT_EQ(Rational(1, 4).decimal_str(), "0.25");
    EXPECT_EQ(Rational(1, 3).decimal_str(), "1/3");
    EXPECT_EQ(Rational(5).decimal_str(), "5");
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
}
