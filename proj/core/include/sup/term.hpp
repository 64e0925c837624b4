#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sup/prop.hpp"
#include "sup/scalar.hpp"

namespace sup {

enum class TermKind : std::uint8_t {
    Var,
    Par,
    Star,
    ElimBot,
    Lam,
    App,
    Pair,
    ElimAnd,
    Inl,
    Inr,
    ElimOr,
    Sum,
    ElimSup,
    ElimSupPar,
};

const char* termKindName(TermKind kind);

/// Star, Lam, Pair, Inl, Inr, Sum.
bool isIntroduction(TermKind kind);
/// ElimBot, App, ElimAnd, ElimOr, ElimSup, ElimSupPar.
bool isElimination(TermKind kind);

/// Plain: the calculus without scalars (all weights one). Scalar: weights are
/// complex and parallel idempotence acts on weighted proofs.
enum class Mode { Plain, Scalar };

struct TermNode;
struct Weighted;

/// A proof term of the unified calculus.
///
/// Immutable handle; copies share structure. Child slots are numbered in
/// source order and that numbering is what a Path walks:
///
///   Par, Sum        0 = left body, 1 = right body (weights live beside them)
///   ElimBot         0 = scrutinee
///   Lam             0 = body (binds `binder()`)
///   App, Pair       0, 1
///   ElimAnd         0 = scrutinee, 1 = body (binds `binder()` and `binder2()`)
///   Inl, Inr        0 = inner
///   ElimOr, ElimSup, ElimSupPar
///                   0 = scrutinee, 1 = left body (binds `binder()`),
///                   2 = right body (binds `binder2()`)
class Term {
public:
    Term() = default;

    static Term var(std::string name);
    static Term par(Weighted left, Weighted right);
    static Term par(Term left, Term right);  // unit weights
    static Term star();
    static Term elimBot(Term scrutinee, Prop target);
    static Term lam(std::string binder, Prop domain, Term body);
    static Term app(Term fun, Term arg);
    static Term pair(Term first, Term second);
    static Term elimAnd(Term scrutinee, std::string x, std::string y, Term body);
    // `other` is the disjunct the injection does not inhabit: inl(t : A) has
    // type A \/ other. Without it, inference assumes T and checking accepts
    // any disjunct.
    static Term inl(Term inner);
    static Term inr(Term inner);
    static Term inl(Term inner, Prop other);
    static Term inr(Term inner, Prop other);
    static Term elimOr(Term scrutinee, std::string x, Term left, std::string y, Term right);
    static Term sum(Weighted left, Weighted right);
    static Term sum(Term left, Term right);  // unit weights
    static Term elimSup(Term scrutinee, std::string x, Term left, std::string y, Term right);
    static Term elimSupPar(Term scrutinee, std::string x, Term left, std::string y, Term right);

    explicit operator bool() const { return node_ != nullptr; }

    TermKind kind() const;
    // Var name, or the first binder.
    const std::string& name() const;
    const std::string& binder() const { return name(); }
    const std::string& binder2() const;
    // Lam domain, ElimBot target, Inl/Inr other disjunct (T when unannotated).
    const Prop& prop() const;
    // Whether an Inl/Inr was given its other disjunct explicitly.
    bool annotated() const;

    std::size_t arity() const;
    const Term& child(std::size_t i) const;
    const Scalar& weight(std::size_t i) const;
    Weighted weighted(std::size_t i) const;

    /// Names bound in child slot i (empty, one or two names).
    std::vector<std::string> bindersOf(std::size_t i) const;

    /// Copy with child slot i replaced.
    Term withChild(std::size_t i, Term replacement) const;
    /// Copy with the weighted slot i of a Par/Sum replaced.
    Term withWeighted(std::size_t i, Weighted replacement) const;
    /// Copy with binder names replaced (same kind, same children).
    Term withBinders(std::string first, std::string second) const;

    std::size_t size() const;

    const TermNode* identity() const { return node_.get(); }

private:
    explicit Term(std::shared_ptr<const TermNode> node) : node_(std::move(node)) {}
    static Term make(TermNode node);

    std::shared_ptr<const TermNode> node_;
};

/// The weighted proof a.t. In plain-calculus mode the weight is always one.
struct Weighted {
    Scalar weight = scalarOne();
    Term body;
};

struct TermNode {
    TermKind kind = TermKind::Star;
    std::string name;
    std::string name2;
    Prop prop;
    bool annotated = false;
    std::array<Term, 3> kids;
    std::array<Scalar, 2> weights{scalarOne(), scalarOne()};
};

/// A path from the root: the child slot taken at each step.
using Path = std::vector<std::uint8_t>;

/// The subterm at `path`.
const Term& subtermAt(const Term& t, const Path& path);
/// Copy of `t` with the subterm at `path` replaced.
Term replaceAt(const Term& t, const Path& path, Term replacement);

/// True iff every weight in the term is exactly one.
bool hasOnlyUnitWeights(const Term& t);

}  // namespace sup
