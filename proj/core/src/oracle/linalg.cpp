#include "sup/oracle/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "sup/error.hpp"

namespace sup::oracle {

Vec2 matVec(const stdlib::Matrix2& m, const Vec2& v) {
    Vec2 r{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) r[i] += m.m[i][j] * v[j];
    }
    return r;
}

Vec4 matVec(const stdlib::Matrix4& m, const Vec4& v) {
    Vec4 r{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) r[i] += m.m[i][j] * v[j];
    }
    return r;
}

stdlib::Matrix4 matMul(const stdlib::Matrix4& a, const stdlib::Matrix4& b) {
    stdlib::Matrix4 r;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            Scalar s{};
            for (std::size_t k = 0; k < 4; ++k) s += a.m[i][k] * b.m[k][j];
            r.m[i][j] = s;
        }
    }
    return r;
}

stdlib::Matrix4 oracleMatrix(stdlib::BitFunction f) {
    stdlib::Matrix4 r;
    for (int x = 0; x < 2; ++x) {
        for (int y = 0; y < 2; ++y) {
            const int fx = stdlib::applyBitFunction(f, x != 0) ? 1 : 0;
            r.m[2 * x + (y ^ fx)][2 * x + y] = scalarOne();
        }
    }
    return r;
}

Vec4 plusMinusVector() { return {Scalar(0.5), Scalar(-0.5), Scalar(0.5), Scalar(-0.5)}; }

namespace {

bool isWeightedStar(const Term& sum, std::size_t i) { return sum.child(i).kind() == TermKind::Star; }

[[noreturn]] void shapeError(const std::string& why) { throw Error(ErrorKind::Shape, "amplitudesOf: " + why); }

}  // namespace

std::vector<Scalar> amplitudesOf(const Term& t) {
    if (t.kind() != TermKind::Sum) shapeError("not a sum");
    if (isWeightedStar(t, 0) && isWeightedStar(t, 1)) return {t.weight(0), t.weight(1)};
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < 2; ++i) {
        const Term& half = t.child(i);
        if (half.kind() != TermKind::Sum || !isWeightedStar(half, 0) || !isWeightedStar(half, 1)) {
            shapeError("half " + std::to_string(i) + " is not a.* + b.*");
        }
        if (t.weight(i) != scalarOne()) shapeError("outer weight is not 1");
        out.push_back(half.weight(0));
        out.push_back(half.weight(1));
    }
    return out;
}

double maxAbsDiff(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    if (a.size() != b.size()) return INFINITY;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

Scalar randomScalar(Rng& rng) {
    const double re = 2.0 * uniform01(rng) - 1.0;
    const double im = 2.0 * uniform01(rng) - 1.0;
    return {re, im};
}

stdlib::Matrix2 randomMatrix2(Rng& rng) {
    stdlib::Matrix2 m;
    for (auto& row : m.m) {
        for (auto& x : row) x = randomScalar(rng);
    }
    return m;
}

stdlib::Matrix4 randomMatrix4(Rng& rng) {
    stdlib::Matrix4 m;
    for (auto& row : m.m) {
        for (auto& x : row) x = randomScalar(rng);
    }
    return m;
}

Vec2 randomVec2(Rng& rng) { return {randomScalar(rng), randomScalar(rng)}; }

Vec4 randomVec4(Rng& rng) { return {randomScalar(rng), randomScalar(rng), randomScalar(rng), randomScalar(rng)}; }

}  // namespace sup::oracle
