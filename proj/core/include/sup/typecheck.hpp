#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sup/prop.hpp"
#include "sup/term.hpp"

namespace sup {

/// Ordered variable bindings. Lookup finds the innermost binding of a name.
class Context {
public:
    Context() = default;
    Context(std::initializer_list<std::pair<std::string, Prop>> bindings);

    Context extended(const std::string& name, const Prop& type) const;
    void push(const std::string& name, const Prop& type) { bindings_.emplace_back(name, type); }
    void pop() { bindings_.pop_back(); }

    const Prop* lookup(const std::string& name) const;
    bool empty() const { return bindings_.empty(); }
    const std::vector<std::pair<std::string, Prop>>& bindings() const { return bindings_; }

private:
    std::vector<std::pair<std::string, Prop>> bindings_;
};

enum class TypeErrorKind {
    UnboundVariable,
    Mismatch,
    NotAFunction,
    NotAPair,
    NotASum,
    NotAnOr,
    BranchDisagree,
};

const char* typeErrorKindName(TypeErrorKind kind);

struct TypeError {
    TypeErrorKind kind;
    Path location;  // the offending subterm
    std::optional<Prop> expected;
    std::optional<Prop> found;
    std::string variable;  // set for UnboundVariable

    std::string describe() const;
};

using InferResult = std::variant<Prop, TypeError>;

/// Syntax-directed inference. Weights are irrelevant to typing.
InferResult infer(const Context& ctx, const Term& t);

/// ok (nullopt) iff t has type `expected`. Agrees with infer except that an
/// injection without annotation may inhabit any disjunction of the right side.
std::optional<TypeError> check(const Context& ctx, const Term& t, const Prop& expected);

/// Inference that throws Error(Type) with the described TypeError.
Prop inferOrThrow(const Context& ctx, const Term& t);

inline bool isOk(const InferResult& r) { return std::holds_alternative<Prop>(r); }

}  // namespace sup
