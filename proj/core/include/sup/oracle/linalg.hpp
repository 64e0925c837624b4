#pragma once

#include <array>
#include <vector>

#include "sup/reduction.hpp"
#include "sup/scalar.hpp"
#include "sup/stdlib.hpp"
#include "sup/term.hpp"

// Direct complex arithmetic on amplitude tuples. Nothing here calls the
// rewrite engine; it exists to check the engine's answers.
namespace sup::oracle {

using Vec2 = std::array<Scalar, 2>;
using Vec4 = std::array<Scalar, 4>;

Vec2 matVec(const stdlib::Matrix2& m, const Vec2& v);
Vec4 matVec(const stdlib::Matrix4& m, const Vec4& v);
stdlib::Matrix4 matMul(const stdlib::Matrix4& a, const stdlib::Matrix4& b);

/// The permutation matrix of U_f |x,y> = |x, y xor f(x)>, basis index 2x+y.
stdlib::Matrix4 oracleMatrix(stdlib::BitFunction f);

/// (1/2, -1/2, 1/2, -1/2).
Vec4 plusMinusVector();

/// Amplitudes of a.* + b.* (two entries) or 1.(a.*+b.*) + 1.(c.*+d.*) (four).
/// Throws Error(Shape) for anything else, including residual parallels and
/// outer weights other than one.
std::vector<Scalar> amplitudesOf(const Term& t);

double maxAbsDiff(const std::vector<Scalar>& a, const std::vector<Scalar>& b);

template <std::size_t N>
std::vector<Scalar> toVector(const std::array<Scalar, N>& v) {
    return std::vector<Scalar>(v.begin(), v.end());
}

/// Components with real and imaginary parts uniform in [-1, 1).
Scalar randomScalar(Rng& rng);
stdlib::Matrix2 randomMatrix2(Rng& rng);
stdlib::Matrix4 randomMatrix4(Rng& rng);
Vec2 randomVec2(Rng& rng);
Vec4 randomVec4(Rng& rng);

}  // namespace sup::oracle
