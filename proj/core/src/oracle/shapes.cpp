#include "sup/oracle/shapes.hpp"

#include "sup/syntax.hpp"

namespace sup::oracle {

namespace {

std::string describe(const Term& t, const Prop& a, const char* why) {
    return printTerm(t) + " : " + toString(a) + " " + why;
}

}  // namespace

std::optional<std::string> introductionViolation(const Term& t, const Prop& a) {
    switch (a.kind()) {
    case PropKind::Top:
        if (t.kind() != TermKind::Star) return describe(t, a, "is not *");
        return std::nullopt;
    case PropKind::Bottom: return describe(t, a, "is a closed irreducible proof of F");
    case PropKind::Implies:
        if (t.kind() != TermKind::Lam) return describe(t, a, "is not an abstraction");
        return std::nullopt;
    case PropKind::And:
        if (t.kind() != TermKind::Pair) return describe(t, a, "is not a pair");
        if (auto v = introductionViolation(t.child(0), a.left())) return v;
        return introductionViolation(t.child(1), a.right());
    case PropKind::Or:
        if (t.kind() == TermKind::Inl) return introductionViolation(t.child(0), a.left());
        if (t.kind() == TermKind::Inr) return introductionViolation(t.child(0), a.right());
        if (t.kind() == TermKind::Par) {
            if (auto v = introductionViolation(t.child(0), a)) return v;
            return introductionViolation(t.child(1), a);
        }
        return describe(t, a, "is not an injection or a parallel");
    case PropKind::Sup:
        if (t.kind() != TermKind::Sum) return describe(t, a, "is not a sum");
        if (auto v = introductionViolation(t.child(0), a.left())) return v;
        return introductionViolation(t.child(1), a.right());
    }
    return std::nullopt;
}

bool hasDisjunctionWitness(const Term& t) {
    switch (t.kind()) {
    case TermKind::Inl:
    case TermKind::Inr: return true;
    case TermKind::Par: return hasDisjunctionWitness(t.child(0)) && hasDisjunctionWitness(t.child(1));
    default: return false;
    }
}

}  // namespace sup::oracle
