#include <gtest/gtest.h>

#include "sup/binding.hpp"
#include "support.hpp"

namespace sup {
namespace {

using test::plain;
using test::scalar;
using test::showPlain;

TEST(Substitute, ReplacesAxiom) {
    EXPECT_TRUE(alphaEq(substitute(Term::var("x"), {{"x", Term::star()}}), Term::star()));
}

TEST(Substitute, AvoidsCapture) {
    const Term t = Term::lam("y", Prop::top(), Term::var("x"));
    const Term r = substitute(t, {{"x", Term::var("y")}});
    ASSERT_EQ(r.kind(), TermKind::Lam);
    EXPECT_NE(r.binder(), "y");
    EXPECT_EQ(r.child(0).kind(), TermKind::Var);
    EXPECT_EQ(r.child(0).name(), "y");
    EXPECT_EQ(freeVars(r), NameSet{"y"});
}

TEST(Substitute, IsSimultaneous) {
    const Term r = substitute(plain("x x"), {{"x", Term::star()}});
    EXPECT_EQ(showPlain(r), "* *");
    // x := y and y := x swap rather than chain.
    const Term swapped = substitute(plain("<x, y>"), {{"x", Term::var("y")}, {"y", Term::var("x")}});
    EXPECT_EQ(showPlain(swapped), "<y, x>");
}

TEST(Substitute, LeavesBoundOccurrences) {
    const Term t = plain("\\x:T. x");
    EXPECT_TRUE(alphaEq(substitute(t, {{"x", Term::star()}}), t));
    const Term c = plain("case_or(z, [x] x, [y] x)");
    EXPECT_EQ(showPlain(substitute(c, {{"x", Term::star()}})), "case_or(z, [x] x, [y] *)");
}

TEST(Substitute, RenamesOnlyWhenNeeded) {
    const Term t = plain("\\y:T. <x, y>");
    const Term r = substitute(t, {{"x", Term::var("z")}});
    EXPECT_EQ(showPlain(r), "\\y:T. <z, y>");
}

TEST(Substitute, ElimAndBindsBoth) {
    const Term t = plain("case_and(p, [a, b] <a, c>)");
    const Term r = substitute(t, {{"c", Term::var("a")}});
    ASSERT_EQ(r.kind(), TermKind::ElimAnd);
    EXPECT_NE(r.binder(), "a");
    EXPECT_EQ(freeVars(r), (NameSet{"a", "p"}));
}

TEST(AlphaEq, RenamedBinders) {
    EXPECT_TRUE(alphaEq(plain("\\x:T. x"), plain("\\y:T. y")));
    EXPECT_FALSE(alphaEq(plain("\\x:T. x"), plain("\\y:T. x")));
    EXPECT_FALSE(alphaEq(plain("\\x:T. x"), plain("\\x:F. x")));
    EXPECT_TRUE(alphaEq(plain("case_sup(t, [a] a, [b] b)"), plain("case_sup(t, [x] x, [y] y)")));
    EXPECT_FALSE(alphaEq(plain("case_sup(t, [a] a, [b] a)"), plain("case_sup(t, [x] x, [y] y)")));
}

TEST(AlphaEq, DistinguishesShapes) {
    EXPECT_FALSE(alphaEq(Term::star(), plain("<*, *>")));
    EXPECT_FALSE(alphaEq(plain("inl(*)"), plain("inr(*)")));
    EXPECT_FALSE(alphaEq(plain("inl(*)"), plain("inl(*, F)")));
}

TEST(AlphaEq, SumIsNotCommutative) {
    EXPECT_FALSE(alphaEq(scalar("1 . * + 0 . *"), scalar("0 . * + 1 . *")));
    EXPECT_TRUE(alphaEq(scalar("1 . * + 0 . *"), scalar("1 . * + 0 . *")));
}

TEST(AlphaEq, CanonicalKeyAgrees) {
    const Term a = plain("\\x:T. \\y:T. <x, y>");
    const Term b = plain("\\u:T. \\v:T. <u, v>");
    const Term c = plain("\\u:T. \\v:T. <v, u>");
    EXPECT_EQ(canonicalKey(a), canonicalKey(b));
    EXPECT_NE(canonicalKey(a), canonicalKey(c));
    EXPECT_NE(canonicalKey(scalar("0.5 . * + 1 . *")), canonicalKey(scalar("1 . * + 0.5 . *")));
    EXPECT_NE(canonicalKey(plain("x")), canonicalKey(plain("y")));
}

TEST(FreeVars, Examples) {
    EXPECT_TRUE(freeVars(plain("\\x:T. x")).empty());
    EXPECT_EQ(freeVars(plain("f x")), (NameSet{"f", "x"}));
    EXPECT_EQ(freeVars(plain("case_sup(t, [x] x, [y] z)")), (NameSet{"t", "z"}));
    EXPECT_EQ(freeVars(plain("case_and(p, [x, y] <x, q>)")), (NameSet{"p", "q"}));
}

TEST(FreshName, AvoidsTakenNames) {
    EXPECT_EQ(freshName("x", {}), "x");
    EXPECT_EQ(freshName("x", {"x"}), "x1");
    EXPECT_EQ(freshName("x", {"x", "x1"}), "x2");
    EXPECT_EQ(freshName("x3", {"x3"}), "x1");
}

}  // namespace
}  // namespace sup
