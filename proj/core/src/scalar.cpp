#include "sup/scalar.hpp"

#include <bit>
#include <charconv>
#include <cstdint>

#include "sup/error.hpp"

namespace sup {

std::uint64_t representationBits(double x) { return std::bit_cast<std::uint64_t>(x + 0.0); }

bool exactlyEqual(const Scalar& a, const Scalar& b) {
    return representationBits(a.real()) == representationBits(b.real()) &&
           representationBits(a.imag()) == representationBits(b.imag());
}

double normSquared(const Scalar& a) { return a.real() * a.real() + a.imag() * a.imag(); }

std::string formatReal(double x) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
    (void)ec;
    return std::string(buf, end);
}

std::string formatScalar(const Scalar& a) {
    if (a.imag() == 0.0) return formatReal(a.real());
    std::string out = formatReal(a.real());
    const std::string im = formatReal(a.imag());
    if (im.front() != '-') out += '+';
    out += im;
    out += 'i';
    return out;
}

ScalarExpr ScalarExpr::literal(double v, bool imaginary) {
    ScalarExpr e;
    e.kind = Kind::Literal;
    e.value = v;
    e.imaginary = imaginary;
    return e;
}

ScalarExpr ScalarExpr::imaginaryUnit() {
    ScalarExpr e;
    e.kind = Kind::ImaginaryUnit;
    return e;
}

ScalarExpr ScalarExpr::unary(Kind kind, ScalarExpr operand) {
    ScalarExpr e;
    e.kind = kind;
    e.operands.push_back(std::move(operand));
    return e;
}

ScalarExpr ScalarExpr::binary(Kind kind, ScalarExpr lhs, ScalarExpr rhs) {
    ScalarExpr e;
    e.kind = kind;
    e.operands.push_back(std::move(lhs));
    e.operands.push_back(std::move(rhs));
    return e;
}

namespace {

// Constants are folded in extended precision and rounded once, so 1/sqrt(2)
// is the double nearest to the true value.
using Wide = std::complex<long double>;

Wide evalWide(const ScalarExpr& e) {
    using K = ScalarExpr::Kind;
    switch (e.kind) {
    case K::Literal:
        return e.imaginary ? Wide(0.0L, e.value) : Wide(e.value, 0.0L);
    case K::ImaginaryUnit: return Wide(0.0L, 1.0L);
    case K::Negate: return -evalWide(e.operands.at(0));
    case K::Sqrt: {
        const Wide v = evalWide(e.operands.at(0));
        // Signed zeros are identified, so -0 imaginary parts take the principal root.
        if (v.imag() == 0.0L) {
            return v.real() >= 0.0L ? Wide(std::sqrt(v.real()), 0.0L) : Wide(0.0L, std::sqrt(-v.real()));
        }
        return std::sqrt(v);
    }
    default: break;
    }
    const Wide lhs = evalWide(e.operands.at(0));
    const Wide rhs = evalWide(e.operands.at(1));
    switch (e.kind) {
    case K::Add: return lhs + rhs;
    case K::Subtract: return lhs - rhs;
    case K::Multiply: return lhs * rhs;
    case K::Divide:
        if (rhs.real() == 0.0L && rhs.imag() == 0.0L) {
            throw Error(ErrorKind::DivisionByZero, "division by zero in scalar constant");
        }
        // Real division stays on the real axis.
        if (lhs.imag() == 0.0L && rhs.imag() == 0.0L) return Wide(lhs.real() / rhs.real(), 0.0L);
        return lhs / rhs;
    default: return {};
    }
}

}  // namespace

Scalar evalScalar(const ScalarExpr& e) {
    const Wide w = evalWide(e);
    return Scalar(static_cast<double>(w.real()), static_cast<double>(w.imag()));
}

}  // namespace sup
