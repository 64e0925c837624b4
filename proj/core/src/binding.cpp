#include "sup/binding.hpp"

#include <bit>
#include <cctype>
#include <cstdio>
#include <vector>

namespace sup {

namespace {

void collectFree(const Term& t, std::vector<std::string>& bound, NameSet& out) {
    if (t.kind() == TermKind::Var) {
        for (auto it = bound.rbegin(); it != bound.rend(); ++it) {
            if (*it == t.name()) return;
        }
        out.insert(t.name());
        return;
    }
    for (std::size_t i = 0; i < t.arity(); ++i) {
        const auto binders = t.bindersOf(i);
        for (const auto& b : binders) bound.push_back(b);
        collectFree(t.child(i), bound, out);
        bound.resize(bound.size() - binders.size());
    }
}

bool occursFreeImpl(const Term& t, const std::string& name) {
    if (t.kind() == TermKind::Var) return t.name() == name;
    for (std::size_t i = 0; i < t.arity(); ++i) {
        bool shadowed = false;
        for (const auto& b : t.bindersOf(i)) shadowed = shadowed || b == name;
        if (!shadowed && occursFreeImpl(t.child(i), name)) return true;
    }
    return false;
}

struct Binding {
    Term value;
    NameSet valueFree;
};

using Env = std::map<std::string, Binding>;

Term substImpl(const Term& t, const Env& env);

// Substitutes into child slot `i` of a binder node, renaming the slot's
// binders that would capture. Returns the new child and fills `renamed`.
Term substUnderBinders(const Term& t, std::size_t i, const Env& env, std::vector<std::string>& renamed) {
    const Term& body = t.child(i);
    renamed = t.bindersOf(i);

    Env inner;
    for (const auto& [key, binding] : env) {
        bool shadowed = false;
        for (const auto& b : renamed) shadowed = shadowed || b == key;
        if (!shadowed && occursFreeImpl(body, key)) inner.emplace(key, binding);
    }
    if (inner.empty()) return body;

    NameSet rangeFree;
    for (const auto& [key, binding] : inner) rangeFree.insert(binding.valueFree.begin(), binding.valueFree.end());

    NameSet avoid;
    bool needsRename = false;
    for (const auto& b : renamed) needsRename = needsRename || rangeFree.count(b) > 0;
    if (needsRename) {
        avoid = freeVars(body);
        avoid.insert(rangeFree.begin(), rangeFree.end());
        for (const auto& [key, binding] : inner) avoid.insert(key);
        for (const auto& b : renamed) avoid.insert(b);
    }
    for (auto& b : renamed) {
        if (rangeFree.count(b) == 0) continue;
        const std::string fresh = freshName(b, avoid);
        avoid.insert(fresh);
        inner[b] = Binding{Term::var(fresh), NameSet{fresh}};
        b = fresh;
    }
    return substImpl(body, inner);
}

Term substImpl(const Term& t, const Env& env) {
    if (env.empty()) return t;
    switch (t.kind()) {
    case TermKind::Var: {
        auto it = env.find(t.name());
        return it == env.end() ? t : it->second.value;
    }
    case TermKind::Star: return t;
    default: break;
    }

    Term result = t;
    std::string first = t.binder();
    std::string second = t.binder2();
    bool bindersChanged = false;
    for (std::size_t i = 0; i < t.arity(); ++i) {
        Term replaced;
        if (t.bindersOf(i).empty()) {
            replaced = substImpl(t.child(i), env);
        } else {
            std::vector<std::string> renamed;
            replaced = substUnderBinders(t, i, env, renamed);
            if (t.kind() == TermKind::ElimAnd || t.kind() == TermKind::Lam) {
                if (renamed[0] != first) { first = renamed[0]; bindersChanged = true; }
                if (renamed.size() > 1 && renamed[1] != second) { second = renamed[1]; bindersChanged = true; }
            } else if (i == 1) {
                if (renamed[0] != first) { first = renamed[0]; bindersChanged = true; }
            } else {
                if (renamed[0] != second) { second = renamed[0]; bindersChanged = true; }
            }
        }
        if (replaced.identity() != t.child(i).identity()) result = result.withChild(i, std::move(replaced));
    }
    if (bindersChanged) result = result.withBinders(first, second);
    return result;
}

bool alphaEqImpl(const Term& a, const Term& b, std::vector<std::string>& boundA,
                 std::vector<std::string>& boundB) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
    case TermKind::Var: {
        auto indexOf = [](const std::vector<std::string>& bound, const std::string& name) -> long {
            for (long i = static_cast<long>(bound.size()) - 1; i >= 0; --i) {
                if (bound[static_cast<std::size_t>(i)] == name) return i;
            }
            return -1;
        };
        const long ia = indexOf(boundA, a.name());
        const long ib = indexOf(boundB, b.name());
        if (ia < 0 && ib < 0) return a.name() == b.name();
        return ia == ib;
    }
    case TermKind::Star: return true;
    case TermKind::Par:
    case TermKind::Sum:
        if (!exactlyEqual(a.weight(0), b.weight(0)) || !exactlyEqual(a.weight(1), b.weight(1))) return false;
        break;
    case TermKind::Lam:
    case TermKind::ElimBot:
    case TermKind::Inl:
    case TermKind::Inr:
        if (a.prop() != b.prop()) return false;
        break;
    default: break;
    }
    // Structural sharing makes this common after substitution.
    if (a.identity() == b.identity() && boundA == boundB) return true;
    for (std::size_t i = 0; i < a.arity(); ++i) {
        const auto ba = a.bindersOf(i);
        const auto bb = b.bindersOf(i);
        boundA.insert(boundA.end(), ba.begin(), ba.end());
        boundB.insert(boundB.end(), bb.begin(), bb.end());
        const bool same = alphaEqImpl(a.child(i), b.child(i), boundA, boundB);
        boundA.resize(boundA.size() - ba.size());
        boundB.resize(boundB.size() - bb.size());
        if (!same) return false;
    }
    return true;
}

void appendHex(std::string& out, double x) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(std::bit_cast<std::uint64_t>(x + 0.0)));
    out += buf;
}

void keyImpl(const Term& t, std::vector<std::string>& bound, std::string& out) {
    out += static_cast<char>('a' + static_cast<int>(t.kind()));
    switch (t.kind()) {
    case TermKind::Var: {
        for (std::size_t i = bound.size(); i-- > 0;) {
            if (bound[i] == t.name()) {
                out += '#';
                out += std::to_string(bound.size() - 1 - i);
                return;
            }
        }
        out += '$';
        out += t.name();
        out += ';';
        return;
    }
    case TermKind::Par:
    case TermKind::Sum:
        for (int i = 0; i < 2; ++i) {
            appendHex(out, t.weight(i).real());
            appendHex(out, t.weight(i).imag());
        }
        break;
    case TermKind::Lam:
    case TermKind::ElimBot:
    case TermKind::Inl:
    case TermKind::Inr:
        out += '{';
        out += toString(t.prop());
        out += '}';
        break;
    default: break;
    }
    out += '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
        const auto binders = t.bindersOf(i);
        bound.insert(bound.end(), binders.begin(), binders.end());
        keyImpl(t.child(i), bound, out);
        bound.resize(bound.size() - binders.size());
        out += ',';
    }
    out += ')';
}

}  // namespace

NameSet freeVars(const Term& t) {
    NameSet out;
    std::vector<std::string> bound;
    collectFree(t, bound, out);
    return out;
}

bool occursFree(const Term& t, const std::string& name) { return occursFreeImpl(t, name); }

std::string freshName(const std::string& base, const NameSet& avoid) {
    if (!base.empty() && avoid.count(base) == 0) return base;
    std::string stem = base;
    while (!stem.empty() && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
    if (stem.empty()) stem = "v";
    for (unsigned k = 1;; ++k) {
        std::string candidate = stem + std::to_string(k);
        if (avoid.count(candidate) == 0) return candidate;
    }
}

Term substitute(const Term& t, const Substitution& bindings) {
    Env env;
    for (const auto& [name, value] : bindings) env.emplace(name, Binding{value, freeVars(value)});
    return substImpl(t, env);
}

bool alphaEq(const Term& t, const Term& u) {
    std::vector<std::string> boundA;
    std::vector<std::string> boundB;
    return alphaEqImpl(t, u, boundA, boundB);
}

std::string canonicalKey(const Term& t) {
    std::string out;
    std::vector<std::string> bound;
    keyImpl(t, bound, out);
    return out;
}

}  // namespace sup
