#include "sup/term.hpp"

#include <cassert>

namespace sup {

const char* termKindName(TermKind kind) {
    switch (kind) {
    case TermKind::Var: return "Var";
    case TermKind::Par: return "Par";
    case TermKind::Star: return "Star";
    case TermKind::ElimBot: return "ElimBot";
    case TermKind::Lam: return "Lam";
    case TermKind::App: return "App";
    case TermKind::Pair: return "Pair";
    case TermKind::ElimAnd: return "ElimAnd";
    case TermKind::Inl: return "Inl";
    case TermKind::Inr: return "Inr";
    case TermKind::ElimOr: return "ElimOr";
    case TermKind::Sum: return "Sum";
    case TermKind::ElimSup: return "ElimSup";
    case TermKind::ElimSupPar: return "ElimSupPar";
    }
    return "?";
}

bool isIntroduction(TermKind kind) {
    switch (kind) {
    case TermKind::Star:
    case TermKind::Lam:
    case TermKind::Pair:
    case TermKind::Inl:
    case TermKind::Inr:
    case TermKind::Sum: return true;
    default: return false;
    }
}

bool isElimination(TermKind kind) {
    switch (kind) {
    case TermKind::ElimBot:
    case TermKind::App:
    case TermKind::ElimAnd:
    case TermKind::ElimOr:
    case TermKind::ElimSup:
    case TermKind::ElimSupPar: return true;
    default: return false;
    }
}

Term Term::make(TermNode node) { return Term(std::make_shared<const TermNode>(std::move(node))); }

Term Term::var(std::string name) {
    TermNode n;
    n.kind = TermKind::Var;
    n.name = std::move(name);
    return make(std::move(n));
}

Term Term::par(Weighted left, Weighted right) {
    TermNode n;
    n.kind = TermKind::Par;
    n.kids[0] = std::move(left.body);
    n.kids[1] = std::move(right.body);
    n.weights = {left.weight, right.weight};
    return make(std::move(n));
}

Term Term::par(Term left, Term right) {
    return par(Weighted{scalarOne(), std::move(left)}, Weighted{scalarOne(), std::move(right)});
}

Term Term::star() {
    static const Term node = [] {
        TermNode n;
        n.kind = TermKind::Star;
        return make(std::move(n));
    }();
    return node;
}

Term Term::elimBot(Term scrutinee, Prop target) {
    TermNode n;
    n.kind = TermKind::ElimBot;
    n.kids[0] = std::move(scrutinee);
    n.prop = std::move(target);
    return make(std::move(n));
}

Term Term::lam(std::string binder, Prop domain, Term body) {
    TermNode n;
    n.kind = TermKind::Lam;
    n.name = std::move(binder);
    n.prop = std::move(domain);
    n.kids[0] = std::move(body);
    return make(std::move(n));
}

Term Term::app(Term fun, Term arg) {
    TermNode n;
    n.kind = TermKind::App;
    n.kids[0] = std::move(fun);
    n.kids[1] = std::move(arg);
    return make(std::move(n));
}

Term Term::pair(Term first, Term second) {
    TermNode n;
    n.kind = TermKind::Pair;
    n.kids[0] = std::move(first);
    n.kids[1] = std::move(second);
    return make(std::move(n));
}

Term Term::elimAnd(Term scrutinee, std::string x, std::string y, Term body) {
    TermNode n;
    n.kind = TermKind::ElimAnd;
    n.name = std::move(x);
    n.name2 = std::move(y);
    n.kids[0] = std::move(scrutinee);
    n.kids[1] = std::move(body);
    return make(std::move(n));
}

namespace {

TermNode injection(TermKind kind, Term inner, Prop other, bool annotated) {
    TermNode n;
    n.kind = kind;
    n.kids[0] = std::move(inner);
    n.prop = std::move(other);
    n.annotated = annotated;
    return n;
}

}  // namespace

Term Term::inl(Term inner) { return make(injection(TermKind::Inl, std::move(inner), Prop::top(), false)); }

Term Term::inr(Term inner) { return make(injection(TermKind::Inr, std::move(inner), Prop::top(), false)); }

Term Term::inl(Term inner, Prop other) {
    return make(injection(TermKind::Inl, std::move(inner), std::move(other), true));
}

Term Term::inr(Term inner, Prop other) {
    return make(injection(TermKind::Inr, std::move(inner), std::move(other), true));
}

namespace {

TermNode caseNode(TermKind kind, Term scrutinee, std::string x, Term left, std::string y, Term right) {
    TermNode n;
    n.kind = kind;
    n.name = std::move(x);
    n.name2 = std::move(y);
    n.kids[0] = std::move(scrutinee);
    n.kids[1] = std::move(left);
    n.kids[2] = std::move(right);
    return n;
}

}  // namespace

Term Term::elimOr(Term scrutinee, std::string x, Term left, std::string y, Term right) {
    return make(caseNode(TermKind::ElimOr, std::move(scrutinee), std::move(x), std::move(left),
                         std::move(y), std::move(right)));
}

Term Term::sum(Weighted left, Weighted right) {
    TermNode n;
    n.kind = TermKind::Sum;
    n.kids[0] = std::move(left.body);
    n.kids[1] = std::move(right.body);
    n.weights = {left.weight, right.weight};
    return make(std::move(n));
}

Term Term::sum(Term left, Term right) {
    return sum(Weighted{scalarOne(), std::move(left)}, Weighted{scalarOne(), std::move(right)});
}

Term Term::elimSup(Term scrutinee, std::string x, Term left, std::string y, Term right) {
    return make(caseNode(TermKind::ElimSup, std::move(scrutinee), std::move(x), std::move(left),
                         std::move(y), std::move(right)));
}

Term Term::elimSupPar(Term scrutinee, std::string x, Term left, std::string y, Term right) {
    return make(caseNode(TermKind::ElimSupPar, std::move(scrutinee), std::move(x), std::move(left),
                         std::move(y), std::move(right)));
}

TermKind Term::kind() const {
    assert(node_);
    return node_->kind;
}

const std::string& Term::name() const { return node_->name; }
const std::string& Term::binder2() const { return node_->name2; }
const Prop& Term::prop() const { return node_->prop; }

bool Term::annotated() const { return node_->annotated; }

std::size_t Term::arity() const {
    switch (kind()) {
    case TermKind::Var:
    case TermKind::Star: return 0;
    case TermKind::ElimBot:
    case TermKind::Lam:
    case TermKind::Inl:
    case TermKind::Inr: return 1;
    case TermKind::Par:
    case TermKind::Sum:
    case TermKind::App:
    case TermKind::Pair:
    case TermKind::ElimAnd: return 2;
    case TermKind::ElimOr:
    case TermKind::ElimSup:
    case TermKind::ElimSupPar: return 3;
    }
    return 0;
}

const Term& Term::child(std::size_t i) const {
    assert(i < arity());
    return node_->kids[i];
}

const Scalar& Term::weight(std::size_t i) const {
    assert(kind() == TermKind::Par || kind() == TermKind::Sum);
    return node_->weights[i];
}

Weighted Term::weighted(std::size_t i) const { return Weighted{weight(i), child(i)}; }

std::vector<std::string> Term::bindersOf(std::size_t i) const {
    switch (kind()) {
    case TermKind::Lam: return {node_->name};
    case TermKind::ElimAnd:
        if (i == 1) return {node_->name, node_->name2};
        return {};
    case TermKind::ElimOr:
    case TermKind::ElimSup:
    case TermKind::ElimSupPar:
        if (i == 1) return {node_->name};
        if (i == 2) return {node_->name2};
        return {};
    default: return {};
    }
}

Term Term::withChild(std::size_t i, Term replacement) const {
    assert(i < arity());
    TermNode n = *node_;
    n.kids[i] = std::move(replacement);
    return make(std::move(n));
}

Term Term::withWeighted(std::size_t i, Weighted replacement) const {
    assert(kind() == TermKind::Par || kind() == TermKind::Sum);
    TermNode n = *node_;
    n.kids[i] = std::move(replacement.body);
    n.weights[i] = replacement.weight;
    return make(std::move(n));
}

Term Term::withBinders(std::string first, std::string second) const {
    TermNode n = *node_;
    n.name = std::move(first);
    n.name2 = std::move(second);
    return make(std::move(n));
}

std::size_t Term::size() const {
    std::size_t total = 1;
    for (std::size_t i = 0; i < arity(); ++i) total += child(i).size();
    return total;
}

const Term& subtermAt(const Term& t, const Path& path) {
    const Term* cur = &t;
    for (auto step : path) cur = &cur->child(step);
    return *cur;
}

namespace {

Term replaceFrom(const Term& t, const Path& path, std::size_t depth, Term replacement) {
    if (depth == path.size()) return replacement;
    const auto slot = path[depth];
    return t.withChild(slot, replaceFrom(t.child(slot), path, depth + 1, std::move(replacement)));
}

}  // namespace

Term replaceAt(const Term& t, const Path& path, Term replacement) {
    return replaceFrom(t, path, 0, std::move(replacement));
}

bool hasOnlyUnitWeights(const Term& t) {
    if (t.kind() == TermKind::Par || t.kind() == TermKind::Sum) {
        if (!exactlyEqual(t.weight(0), scalarOne()) || !exactlyEqual(t.weight(1), scalarOne())) {
            return false;
        }
    }
    for (std::size_t i = 0; i < t.arity(); ++i) {
        if (!hasOnlyUnitWeights(t.child(i))) return false;
    }
    return true;
}

}  // namespace sup
