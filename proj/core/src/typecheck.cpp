#include "sup/typecheck.hpp"

#include "sup/error.hpp"

namespace sup {

Context::Context(std::initializer_list<std::pair<std::string, Prop>> bindings) : bindings_(bindings) {}

Context Context::extended(const std::string& name, const Prop& type) const {
    Context c = *this;
    c.push(name, type);
    return c;
}

const Prop* Context::lookup(const std::string& name) const {
    for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
        if (it->first == name) return &it->second;
    }
    return nullptr;
}

const char* typeErrorKindName(TypeErrorKind kind) {
    switch (kind) {
    case TypeErrorKind::UnboundVariable: return "UnboundVariable";
    case TypeErrorKind::Mismatch: return "Mismatch";
    case TypeErrorKind::NotAFunction: return "NotAFunction";
    case TypeErrorKind::NotAPair: return "NotAPair";
    case TypeErrorKind::NotASum: return "NotASum";
    case TypeErrorKind::NotAnOr: return "NotAnOr";
    case TypeErrorKind::BranchDisagree: return "BranchDisagree";
    }
    return "?";
}

std::string TypeError::describe() const {
    std::string out = typeErrorKindName(kind);
    out += " at [";
    for (std::size_t i = 0; i < location.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(location[i]);
    }
    out += ']';
    if (!variable.empty()) out += ": unbound variable '" + variable + "'";
    if (expected) out += ": expected " + toString(*expected);
    if (found) out += (expected ? ", found " : ": found ") + toString(*found);
    return out;
}

namespace {

// Inference threads one mutable context and path to avoid copying them at
// every binder; both are restored on return.
class Inferrer {
public:
    explicit Inferrer(const Context& ctx) : ctx_(ctx) {}

    InferResult run(const Term& t) {
        switch (t.kind()) {
        case TermKind::Var: {
            if (const Prop* p = ctx_.lookup(t.name())) return *p;
            TypeError e{TypeErrorKind::UnboundVariable, path_, std::nullopt, std::nullopt, t.name()};
            return e;
        }
        case TermKind::Star: return Prop::top();
        case TermKind::Par: {
            auto l = child(t, 0);
            if (!isOk(l)) return l;
            auto r = child(t, 1);
            if (!isOk(r)) return r;
            if (std::get<Prop>(l) != std::get<Prop>(r)) {
                return errorAt(1, TypeErrorKind::Mismatch, std::get<Prop>(l), std::get<Prop>(r));
            }
            return l;
        }
        case TermKind::Sum: {
            auto l = child(t, 0);
            if (!isOk(l)) return l;
            auto r = child(t, 1);
            if (!isOk(r)) return r;
            return Prop::sup(std::get<Prop>(l), std::get<Prop>(r));
        }
        case TermKind::ElimBot: {
            auto s = child(t, 0);
            if (!isOk(s)) return s;
            if (std::get<Prop>(s).kind() != PropKind::Bottom) {
                return errorAt(0, TypeErrorKind::Mismatch, Prop::bottom(), std::get<Prop>(s));
            }
            return t.prop();
        }
        case TermKind::Lam: {
            ctx_.push(t.binder(), t.prop());
            auto body = child(t, 0);
            ctx_.pop();
            if (!isOk(body)) return body;
            return Prop::implies(t.prop(), std::get<Prop>(body));
        }
        case TermKind::App: {
            auto f = child(t, 0);
            if (!isOk(f)) return f;
            const Prop& ft = std::get<Prop>(f);
            if (ft.kind() != PropKind::Implies) {
                return errorAt(0, TypeErrorKind::NotAFunction, std::nullopt, ft);
            }
            auto a = child(t, 1);
            if (!isOk(a)) return a;
            if (std::get<Prop>(a) != ft.left()) {
                return errorAt(1, TypeErrorKind::Mismatch, ft.left(), std::get<Prop>(a));
            }
            return ft.right();
        }
        case TermKind::Pair: {
            auto l = child(t, 0);
            if (!isOk(l)) return l;
            auto r = child(t, 1);
            if (!isOk(r)) return r;
            return Prop::conj(std::get<Prop>(l), std::get<Prop>(r));
        }
        case TermKind::ElimAnd: {
            auto s = child(t, 0);
            if (!isOk(s)) return s;
            const Prop& st = std::get<Prop>(s);
            if (st.kind() != PropKind::And) return errorAt(0, TypeErrorKind::NotAPair, std::nullopt, st);
            ctx_.push(t.binder(), st.left());
            ctx_.push(t.binder2(), st.right());
            auto body = child(t, 1);
            ctx_.pop();
            ctx_.pop();
            return body;
        }
        case TermKind::Inl: {
            auto inner = child(t, 0);
            if (!isOk(inner)) return inner;
            return Prop::disj(std::get<Prop>(inner), t.prop());
        }
        case TermKind::Inr: {
            auto inner = child(t, 0);
            if (!isOk(inner)) return inner;
            return Prop::disj(t.prop(), std::get<Prop>(inner));
        }
        case TermKind::ElimOr: return caseAnalysis(t, PropKind::Or, TypeErrorKind::NotAnOr);
        case TermKind::ElimSup:
        case TermKind::ElimSupPar: return caseAnalysis(t, PropKind::Sup, TypeErrorKind::NotASum);
        }
        return Prop::top();
    }

    // Checking mode: the expected proposition flows into introductions, so an
    // injection without annotation takes its other disjunct from it.
    std::optional<TypeError> against(const Term& t, const Prop& a) {
        switch (t.kind()) {
        case TermKind::Inl:
        case TermKind::Inr:
            if (t.annotated() || a.kind() != PropKind::Or) break;
            return childAgainst(t, 0, t.kind() == TermKind::Inl ? a.left() : a.right());
        case TermKind::Lam:
            if (a.kind() != PropKind::Implies || a.left() != t.prop()) break;
            {
                ctx_.push(t.binder(), t.prop());
                auto e = childAgainst(t, 0, a.right());
                ctx_.pop();
                return e;
            }
        case TermKind::Pair:
            if (a.kind() != PropKind::And) break;
            if (auto e = childAgainst(t, 0, a.left())) return e;
            return childAgainst(t, 1, a.right());
        case TermKind::Sum:
            if (a.kind() != PropKind::Sup) break;
            if (auto e = childAgainst(t, 0, a.left())) return e;
            return childAgainst(t, 1, a.right());
        case TermKind::Par:
            if (auto e = childAgainst(t, 0, a)) return e;
            return childAgainst(t, 1, a);
        case TermKind::ElimAnd: {
            auto s = child(t, 0);
            if (!isOk(s)) return std::get<TypeError>(s);
            const Prop st = std::get<Prop>(s);
            if (st.kind() != PropKind::And) return errorAt(0, TypeErrorKind::NotAPair, std::nullopt, st);
            ctx_.push(t.binder(), st.left());
            ctx_.push(t.binder2(), st.right());
            auto e = childAgainst(t, 1, a);
            ctx_.pop();
            ctx_.pop();
            return e;
        }
        case TermKind::ElimOr:
        case TermKind::ElimSup:
        case TermKind::ElimSupPar: {
            const bool isOr = t.kind() == TermKind::ElimOr;
            auto s = child(t, 0);
            if (!isOk(s)) return std::get<TypeError>(s);
            const Prop st = std::get<Prop>(s);
            if (st.kind() != (isOr ? PropKind::Or : PropKind::Sup)) {
                return errorAt(0, isOr ? TypeErrorKind::NotAnOr : TypeErrorKind::NotASum, std::nullopt, st);
            }
            ctx_.push(t.binder(), st.left());
            auto e = childAgainst(t, 1, a);
            ctx_.pop();
            if (e) return e;
            ctx_.push(t.binder2(), st.right());
            e = childAgainst(t, 2, a);
            ctx_.pop();
            return e;
        }
        default: break;
        }
        auto r = run(t);
        if (!isOk(r)) return std::get<TypeError>(r);
        if (std::get<Prop>(r) != a) return TypeError{TypeErrorKind::Mismatch, path_, a, std::get<Prop>(r), {}};
        return std::nullopt;
    }

private:
    std::optional<TypeError> childAgainst(const Term& t, std::size_t i, const Prop& a) {
        path_.push_back(static_cast<std::uint8_t>(i));
        auto e = against(t.child(i), a);
        path_.pop_back();
        return e;
    }

    InferResult child(const Term& t, std::size_t i) {
        path_.push_back(static_cast<std::uint8_t>(i));
        auto r = run(t.child(i));
        path_.pop_back();
        return r;
    }

    TypeError errorAt(std::size_t slot, TypeErrorKind kind, std::optional<Prop> expected,
                      std::optional<Prop> found) {
        Path where = path_;
        where.push_back(static_cast<std::uint8_t>(slot));
        return TypeError{kind, std::move(where), std::move(expected), std::move(found), {}};
    }

    InferResult caseAnalysis(const Term& t, PropKind scrutineeKind, TypeErrorKind notThat) {
        auto s = child(t, 0);
        if (!isOk(s)) return s;
        const Prop st = std::get<Prop>(s);
        if (st.kind() != scrutineeKind) return errorAt(0, notThat, std::nullopt, st);
        ctx_.push(t.binder(), st.left());
        auto l = child(t, 1);
        ctx_.pop();
        if (!isOk(l)) return l;
        ctx_.push(t.binder2(), st.right());
        auto r = child(t, 2);
        ctx_.pop();
        if (!isOk(r)) return r;
        if (std::get<Prop>(l) != std::get<Prop>(r)) {
            return errorAt(2, TypeErrorKind::BranchDisagree, std::get<Prop>(l), std::get<Prop>(r));
        }
        return l;
    }

    Context ctx_;
    Path path_;
};

}  // namespace

InferResult infer(const Context& ctx, const Term& t) { return Inferrer(ctx).run(t); }

std::optional<TypeError> check(const Context& ctx, const Term& t, const Prop& expected) {
    return Inferrer(ctx).against(t, expected);
}

Prop inferOrThrow(const Context& ctx, const Term& t) {
    auto r = infer(ctx, t);
    if (auto* err = std::get_if<TypeError>(&r)) throw Error(ErrorKind::Type, err->describe());
    return std::get<Prop>(r);
}

}  // namespace sup
