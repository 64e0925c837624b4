#pragma once

#include <complex>
#include <concepts>
#include <string>
#include <vector>

namespace sup {

/// The weight carried by weighted proofs. Only complex doubles are shipped.
using Scalar = std::complex<double>;

/// What the rewrite rules need from a scalar domain: a unit, addition and
/// multiplication.
template <class S>
concept ScalarSemiring = requires(S a, S b) {
    { S(0) } -> std::same_as<S>;
    { S(1) } -> std::same_as<S>;
    { a + b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
};

static_assert(ScalarSemiring<Scalar>);

inline Scalar scalarZero() { return Scalar(0.0, 0.0); }
inline Scalar scalarOne() { return Scalar(1.0, 0.0); }

/// Bitwise equality on (re, im) with -0 identified with +0. This is the
/// equality rewrite rules use.
bool exactlyEqual(const Scalar& a, const Scalar& b);

/// |a|^2 = re^2 + im^2.
double normSquared(const Scalar& a);

/// Shortest round-trip decimal: "0.5", "-1", "0.5+0.25i", "0-1i".
std::string formatScalar(const Scalar& a);
/// Shortest round-trip decimal of one double.
std::string formatReal(double x);

/// Surface syntax of scalar constants before evaluation.
struct ScalarExpr {
    enum class Kind { Literal, ImaginaryUnit, Negate, Add, Subtract, Multiply, Divide, Sqrt };

    Kind kind = Kind::Literal;
    // Literal value; for an imaginary literal such as `0.5i` this is the
    // coefficient and `imaginary` is set.
    double value = 0.0;
    bool imaginary = false;
    std::vector<ScalarExpr> operands;

    static ScalarExpr literal(double v, bool imaginary = false);
    static ScalarExpr imaginaryUnit();
    static ScalarExpr unary(Kind kind, ScalarExpr operand);
    static ScalarExpr binary(Kind kind, ScalarExpr lhs, ScalarExpr rhs);
};

/// Complex evaluation. Throws Error(DivisionByZero) when a denominator is 0+0i.
Scalar evalScalar(const ScalarExpr& e);

}  // namespace sup
