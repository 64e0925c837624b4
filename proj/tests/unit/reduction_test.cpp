#include <gtest/gtest.h>

#include <cmath>

#include "sup/error.hpp"
#include "sup/stdlib.hpp"
#include "sup/typecheck.hpp"
#include "support.hpp"

namespace sup {
namespace {

using test::plain;
using test::scalar;
using test::showPlain;
using test::showScalar;

TEST(FindRedexes, BetaAtRoot) {
    const auto r = findRedexes(plain("(\\x:T. x) *"), Config{});
    ASSERT_EQ(r.size(), 1u);
    EXPECT_EQ(r[0].rule, RuleId::Beta);
    EXPECT_TRUE(r[0].position.empty());
    EXPECT_FALSE(r[0].probability.has_value());
}

TEST(FindRedexes, BornProbabilitiesOnSettledSup) {
    const auto r = findRedexes(scalar("case_sup(1 . * + 0 . *, [x] false, [y] true)"), Config::quantum());
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].rule, RuleId::ElimSupLeft);
    EXPECT_EQ(r[1].rule, RuleId::ElimSupRight);
    EXPECT_EQ(r[0].probability, 1.0);
    EXPECT_EQ(r[1].probability, 0.0);
}

TEST(FindRedexes, QuantumDefersOpenScrutinee) {
    EXPECT_TRUE(findRedexes(scalar("case_sup(z, [x] false, [y] true)"), Config::quantum()).empty());
    // A sum with a free variable is open too.
    EXPECT_TRUE(findRedexes(scalar("case_sup(1 . z + 1 . *, [x] false, [y] true)"), Config::quantum()).empty());
}

TEST(FindRedexes, QuantumDefersReducibleScrutinee) {
    const Term t = scalar("case_sup(1 . (\\x:T. x) * + 1 . *, [x] false, [y] true)");
    const auto q = findRedexes(t, Config::quantum());
    ASSERT_EQ(q.size(), 1u);
    EXPECT_EQ(q[0].rule, RuleId::Beta);
    EXPECT_EQ(q[0].position, (Path{0, 0}));
    // Without the strategy the case_sup fires too, carrying no probability.
    const auto any = findRedexes(t, test::scalarAny());
    ASSERT_EQ(any.size(), 3u);
    EXPECT_EQ(any[0].rule, RuleId::ElimSupLeft);
    EXPECT_FALSE(any[0].probability.has_value());
}

TEST(FindRedexes, OrderedByPreorderThenRule) {
    const Term t = plain("<(\\x:T. x) *, case_or(inl(*), [x] x, [y] y)>");
    const auto r = findRedexes(t, Config{});
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].position, Path{0});
    EXPECT_EQ(r[1].position, Path{1});
    const auto nested = findRedexes(plain("(\\x:T. x) ((\\y:T. y) *)"), Config{});
    ASSERT_EQ(nested.size(), 2u);
    EXPECT_TRUE(nested[0].position.empty());
    EXPECT_EQ(nested[1].position, Path{1});
}

TEST(FindRedexes, ReportsOverlaps) {
    // Both ParSum and idempotence apply at the root; the inner beta as well.
    const Term t = plain("(* + (\\x:T. x) *) || (* + (\\x:T. x) *)");
    const auto r = findRedexes(t, Config{});
    ASSERT_EQ(r.size(), 4u);
    EXPECT_EQ(r[0].rule, RuleId::ParSum);
    EXPECT_EQ(r[1].rule, RuleId::ParIdem);
}

TEST(BranchProbabilities, QubitShape) {
    const auto [l, r] = branchProbabilities(scalar("1/sqrt(2) . * + 1/sqrt(2) . *"));
    EXPECT_NEAR(l, 0.5, 1e-15);
    EXPECT_NEAR(r, 0.5, 1e-15);
    const auto [a, b] = branchProbabilities(scalar("(0.6) . * + 0.8i . *"));
    EXPECT_NEAR(a, 0.36, 1e-12);
    EXPECT_NEAR(b, 0.64, 1e-12);
}

TEST(BranchProbabilities, AllZeroIsUniform) {
    const auto [l, r] = branchProbabilities(scalar("0 . * + 0 . *"));
    EXPECT_EQ(l, 0.5);
    EXPECT_EQ(r, 0.5);
}

TEST(BranchProbabilities, TwoQubitShape) {
    const auto [l, r] = branchProbabilities(scalar("1 . (1 . * + 0 . *) + 1 . (0 . * + 0 . *)"));
    EXPECT_EQ(l, 1.0);
    EXPECT_EQ(r, 0.0);
    const auto [a, b] = branchProbabilities(scalar("1 . (1 . * + 1 . *) + 1 . (1 . * + 0 . *)"));
    EXPECT_NEAR(a, 2.0 / 3.0, 1e-15);
    EXPECT_NEAR(b, 1.0 / 3.0, 1e-15);
}

TEST(BranchProbabilities, OtherShapesAreUniform) {
    const auto [l, r] = branchProbabilities(scalar("1 . false + 0 . true"));
    EXPECT_EQ(l, 0.5);
    EXPECT_EQ(r, 0.5);
    // Outer weights other than one break the two-qubit shape.
    const auto [a, b] = branchProbabilities(scalar("2 . (1 . * + 0 . *) + 1 . (0 . * + 0 . *)"));
    EXPECT_EQ(a, 0.5);
    EXPECT_EQ(b, 0.5);
}

TEST(BranchProbabilities, NotASum) {
    try {
        branchProbabilities(Term::star());
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotASum);
    }
}

TEST(Normalize, Examples) {
    EXPECT_EQ(showPlain(normalize(plain("(\\x:T. x) *"), Config{})), "*");
    const Term u = plain("<*, *>");
    const Term test = stdlib::mkTest(stdlib::bit(false), u, plain("<*, false>"));
    EXPECT_TRUE(alphaEq(normalize(test, Config{}), u));
    const Term q = Term::app(stdlib::qubits(), stdlib::twoBit(true, false));
    EXPECT_EQ(showScalar(normalize(q, Config::quantum(Nondet::ForceLeft))),
              "1 . (0 . * + 0 . *) + 1 . (1 . * + 0 . *)");
}

TEST(Normalize, ForcePolicies) {
    const Term t = scalar("case_sup(1 . * + 0 . *, [x] false, [y] true)");
    EXPECT_EQ(showPlain(normalize(t, Config::quantum(Nondet::ForceLeft))), "false");
    EXPECT_EQ(showPlain(normalize(t, Config::quantum(Nondet::ForceRight))), "true");
    const Term p = plain("case_sup(* + *, [x] false, [y] true)");
    Config cfg;
    cfg.nondet = Nondet::ForceRight;
    EXPECT_EQ(showPlain(normalize(p, cfg)), "true");
}

TEST(Normalize, SampleIsSeeded) {
    const Term t = stdlib::measure(stdlib::qubit(Scalar(0.6), Scalar(0.8)));
    Config cfg = Config::quantum(Nondet::Sample);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        cfg.seed = seed;
        EXPECT_TRUE(alphaEq(normalize(t, cfg), normalize(t, cfg)));
    }
}

TEST(Normalize, SampleNeverTakesZeroBranch) {
    const Term t = stdlib::measure(stdlib::qubit(scalarOne(), scalarZero()));
    Rng rng(5);
    for (int i = 0; i < 200; ++i) {
        EXPECT_EQ(showPlain(normalize(t, Config::quantum(Nondet::Sample), rng)), "false");
    }
}

TEST(Normalize, StepLimit) {
    Config cfg;
    cfg.maxSteps = 1;
    try {
        normalize(plain("(\\x:T. x) ((\\x:T. x) *)"), cfg);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::StepLimitExceeded);
    }
}

TEST(Normalize, RejectsEnumerateAll) {
    EXPECT_THROW(normalize(Term::star(), Config::quantum(Nondet::EnumerateAll)), std::invalid_argument);
}

TEST(Config, QuantumNeedsScalarMode) {
    Config cfg;
    cfg.strategy = Strategy::Quantum;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    EXPECT_NO_THROW(Config::quantum().validate());
}

TEST(Enumerate, MeasuringPlusGivesFairCoin) {
    const Term t = stdlib::measure(scalar("1/sqrt(2) . * + 1/sqrt(2) . *"));
    const Distribution d = enumerate(t, Config::quantum());
    ASSERT_EQ(d.size(), 2u);
    EXPECT_NEAR(d.probabilityOf(stdlib::bit(false)), 0.5, 1e-15);
    EXPECT_NEAR(d.probabilityOf(stdlib::bit(true)), 0.5, 1e-15);
}

TEST(Enumerate, NormalTermIsPointMass) {
    const Term t = plain("<*, false>");
    const Distribution d = enumerate(t, Config::quantum());
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.probabilityOf(t), 1.0);
}

TEST(Enumerate, CertainOutcome) {
    const Distribution d = enumerate(stdlib::measure(scalar("1 . * + 0 . *")), Config::quantum());
    ASSERT_EQ(d.size(), 1u);
    EXPECT_EQ(d.probabilityOf(stdlib::bit(false)), 1.0);
}

TEST(Enumerate, MergesAlphaEquivalentResults) {
    const Term t = scalar("case_sup(1 . * + 1 . *, [x] \\a:T. a, [y] \\b:T. b)");
    const Distribution d = enumerate(t, Config::quantum());
    ASSERT_EQ(d.size(), 1u);
    EXPECT_DOUBLE_EQ(d.total(), 1.0);
}

TEST(Enumerate, SortedOutput) {
    const Distribution d = enumerate(stdlib::measure(scalar("0.6 . * + 0.8 . *")), Config::quantum());
    const auto rows = d.sorted();
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(showPlain(rows[0].term), "true");
    EXPECT_GT(rows[0].probability, rows[1].probability);
}

TEST(Enumerate, UndefinedForUnsettledSup) {
    Config cfg;
    cfg.nondet = Nondet::EnumerateAll;
    try {
        enumerate(plain("case_sup((\\x:T. x) * + *, [x] false, [y] true)"), cfg);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::EnumerationUndefined);
    }
}

TEST(Enumerate, NestedMeasurementsMultiply) {
    // Measure |+>, then measure 0.6|0> + 0.8|1> on the false branch.
    const Term inner = stdlib::measure(scalar("0.6 . * + 0.8 . *"));
    const Term t = Term::elimSup(scalar("1/sqrt(2) . * + 1/sqrt(2) . *"), "_", inner, "_", stdlib::bit(true));
    const Distribution d = enumerate(t, Config::quantum());
    EXPECT_NEAR(d.probabilityOf(stdlib::bit(false)), 0.5 * 0.36, 1e-12);
    EXPECT_NEAR(d.probabilityOf(stdlib::bit(true)), 0.5 + 0.5 * 0.64, 1e-12);
    EXPECT_NEAR(d.total(), 1.0, 1e-12);
}

TEST(Graph, SingleNode) {
    const ReductionGraph g = reductionGraph(Term::star(), Config{}, 10);
    EXPECT_EQ(g.nodes.size(), 1u);
    EXPECT_TRUE(g.edges.empty());
    EXPECT_TRUE(g.acyclic);
    EXPECT_EQ(g.longestPath, 0u);
}

TEST(Graph, ParallelOfEqualPairs) {
    const ReductionGraph g = reductionGraph(plain("<*, *> || <*, *>"), Config{}, 100);
    bool idem = false;
    for (const auto& e : g.edges) {
        if (e.rule == RuleId::ParIdem && e.from == 0 && showPlain(g.nodes[e.to]) == "<*, *>") idem = true;
    }
    EXPECT_TRUE(idem);
    ASSERT_EQ(g.terminals.size(), 1u);
    EXPECT_EQ(showPlain(g.nodes[g.terminals[0]]), "<*, *>");
}

TEST(Graph, TwoBranchSup) {
    const ReductionGraph g =
        reductionGraph(scalar("case_sup(1 . * + 1 . *, [x] false, [y] true)"), test::scalarAny(), 100);
    ASSERT_EQ(g.terminals.size(), 2u);
    EXPECT_EQ(showPlain(g.nodes[g.terminals[0]]), "false");
    EXPECT_EQ(showPlain(g.nodes[g.terminals[1]]), "true");
}

TEST(Graph, LongestPath) {
    const ReductionGraph g = reductionGraph(plain("(\\x:T. x) ((\\x:T. x) *)"), Config{}, 100);
    EXPECT_TRUE(g.acyclic);
    EXPECT_EQ(g.longestPath, 2u);
    EXPECT_EQ(g.nodes.size(), 3u);
}

TEST(Graph, Budget) {
    try {
        reductionGraph(plain("(\\x:T. x) ((\\x:T. x) *)"), Config{}, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::GraphBudgetExceeded);
    }
}

TEST(Graph, UltraAddsEdges) {
    Config cfg;
    cfg.ultra = true;
    const ReductionGraph g = reductionGraph(plain("false || true"), cfg, 100);
    EXPECT_EQ(g.nodes.size(), 3u);
    EXPECT_EQ(g.edges.size(), 2u);
}

TEST(Graph, SubjectReductionOnEdges) {
    const Term t = plain("case_or(false || true, [x] <x, *>, [y] <y, *>)");
    const Prop a = inferOrThrow({}, t);
    Config cfg;
    cfg.ultra = true;
    const ReductionGraph g = reductionGraph(t, cfg, 1000);
    for (const auto& n : g.nodes) EXPECT_EQ(inferOrThrow({}, n), a) << showPlain(n);
}

}  // namespace
}  // namespace sup
