#include "sup/prop.hpp"

#include <cassert>

namespace sup {

namespace {

// Binding strength used by the printers; higher binds tighter.
int precedence(PropKind kind) {
    switch (kind) {
    case PropKind::Implies: return 1;
    case PropKind::Sup: return 2;
    case PropKind::Or: return 3;
    case PropKind::And: return 4;
    default: return 5;
    }
}

struct Glyphs {
    const char* top;
    const char* bottom;
    const char* implies;
    const char* conj;
    const char* disj;
    const char* sup;
};

constexpr Glyphs kAscii{"T", "F", " -> ", " /\\ ", " \\/ ", " (+) "};
constexpr Glyphs kUnicode{"⊤", "⊥", " ⇒ ", " ∧ ", " ∨ ", " ⊙ "};

void render(const Prop& p, const Glyphs& g, std::string& out) {
    const char* op = nullptr;
    switch (p.kind()) {
    case PropKind::Top: out += g.top; return;
    case PropKind::Bottom: out += g.bottom; return;
    case PropKind::Implies: op = g.implies; break;
    case PropKind::And: op = g.conj; break;
    case PropKind::Or: op = g.disj; break;
    case PropKind::Sup: op = g.sup; break;
    }
    // All binary connectives associate to the right.
    const int prec = precedence(p.kind());
    const bool parenLeft = precedence(p.left().kind()) <= prec;
    const bool parenRight = precedence(p.right().kind()) < prec;
    if (parenLeft) out += '(';
    render(p.left(), g, out);
    if (parenLeft) out += ')';
    out += op;
    if (parenRight) out += '(';
    render(p.right(), g, out);
    if (parenRight) out += ')';
}

}  // namespace

Prop::Prop() : Prop(top()) {}

Prop Prop::top() {
    static const Prop node(std::make_shared<const PropNode>(
        PropNode{PropKind::Top, Prop(nullptr), Prop(nullptr)}));
    return node;
}

Prop Prop::bottom() {
    static const Prop node(std::make_shared<const PropNode>(
        PropNode{PropKind::Bottom, Prop(nullptr), Prop(nullptr)}));
    return node;
}

Prop Prop::binary(PropKind kind, Prop left, Prop right) {
    assert(kind != PropKind::Top && kind != PropKind::Bottom);
    return Prop(std::make_shared<const PropNode>(PropNode{kind, std::move(left), std::move(right)}));
}

Prop Prop::implies(Prop left, Prop right) { return binary(PropKind::Implies, std::move(left), std::move(right)); }
Prop Prop::conj(Prop left, Prop right) { return binary(PropKind::And, std::move(left), std::move(right)); }
Prop Prop::disj(Prop left, Prop right) { return binary(PropKind::Or, std::move(left), std::move(right)); }
Prop Prop::sup(Prop left, Prop right) { return binary(PropKind::Sup, std::move(left), std::move(right)); }

PropKind Prop::kind() const { return node_->kind; }

bool Prop::isBinary() const { return kind() != PropKind::Top && kind() != PropKind::Bottom; }

const Prop& Prop::left() const {
    assert(isBinary());
    return node_->left;
}

const Prop& Prop::right() const {
    assert(isBinary());
    return node_->right;
}

std::size_t Prop::size() const {
    return isBinary() ? 1 + left().size() + right().size() : 1;
}

bool operator==(const Prop& a, const Prop& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind()) return false;
    if (!a.isBinary()) return true;
    return a.left() == b.left() && a.right() == b.right();
}

std::string toString(const Prop& p) {
    std::string out;
    render(p, kAscii, out);
    return out;
}

std::string toUnicode(const Prop& p) {
    std::string out;
    render(p, kUnicode, out);
    return out;
}

}  // namespace sup
