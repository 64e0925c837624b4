#pragma once

#include <cstdint>
#include <memory>
#include <string>

namespace sup {

enum class PropKind : std::uint8_t { Top, Bottom, Implies, And, Or, Sup };

struct PropNode;

/// A proposition of the type language: T, F, A -> B, A /\ B, A \/ B, A (+) B.
///
/// Immutable handle with structural equality. Copies share the tree.
class Prop {
public:
    Prop();  // Top

    static Prop top();
    static Prop bottom();
    static Prop implies(Prop left, Prop right);
    static Prop conj(Prop left, Prop right);
    static Prop disj(Prop left, Prop right);
    static Prop sup(Prop left, Prop right);
    static Prop binary(PropKind kind, Prop left, Prop right);

    PropKind kind() const;
    bool isBinary() const;
    // Only valid on binary kinds.
    const Prop& left() const;
    const Prop& right() const;

    std::size_t size() const;

    friend bool operator==(const Prop& a, const Prop& b);
    friend bool operator!=(const Prop& a, const Prop& b) { return !(a == b); }

private:
    explicit Prop(std::shared_ptr<const PropNode> node) : node_(std::move(node)) {}
    std::shared_ptr<const PropNode> node_;
};

struct PropNode {
    PropKind kind;
    Prop left;
    Prop right;
};

/// ASCII rendering with minimal parentheses (re-parseable).
std::string toString(const Prop& p);
/// Unicode rendering for display only.
std::string toUnicode(const Prop& p);

}  // namespace sup
