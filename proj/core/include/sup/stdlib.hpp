#pragma once

#include <array>
#include <string>
#include <vector>

#include "sup/prop.hpp"
#include "sup/scalar.hpp"
#include "sup/term.hpp"

namespace sup::stdlib {

// Propositions used by the quantum encodings.
Prop bitType();       // B = T \/ T
Prop twoBitType();    // B^2 = B /\ B
Prop qubitType();     // Q = T (+) T
Prop twoQubitType();  // Q(x)2 = Q (+) Q

/// false = inl(*), true = inr(*).
Term bit(bool value);
/// <bit(first), bit(second)>.
Term twoBit(bool first, bool second);

/// case_or(t, [x] u, [y] v) with x, y not free in t, u or v.
Term mkTest(const Term& t, const Term& u, const Term& v);

/// \x:B. \y:B. test(x, y, test(y, true, false)) : B -> B -> B.
Term exclusiveOr();

/// a.* + b.*
Term qubit(Scalar a, Scalar b);
/// 1.(a.* + b.*) + 1.(c.* + d.*)
Term qubit2(Scalar a, Scalar b, Scalar c, Scalar d);

// Measurement operators on Q (first three) and on the first qubit of Q(x)2.
Term measure(const Term& t);            // case_sup(t, [_] false, [_] true)
Term measureState(const Term& t);       // post-measurement state
Term measurePair(const Term& t);        // <outcome, state>
Term measureFirst(const Term& t);       // same shape as measure()
Term measureFirstState(const Term& t);
Term measureFirstPair(const Term& t);

struct Matrix2 {
    std::array<std::array<Scalar, 2>, 2> m{};  // m[row][column]
    static Matrix2 identity();
    static Matrix2 hadamard();
};

struct Matrix4 {
    std::array<std::array<Scalar, 4>, 4> m{};
    static Matrix4 identity();
    /// H (x) I acting on the first qubit.
    static Matrix4 hadamardFirst();
};

/// \x:B. test(x, M0, M1) with column i = m0i.* + m1i.*.
Term mkMatrix(const Matrix2& m);
/// \x:B^2. case_and(x, [y,z] test(y, test(z, M0, M1), test(z, M2, M3))).
Term mkMatrix4(const Matrix4& m);
/// Column i of the 4x4 encoding: 1.(m0i.* + m1i.*) + 1.(m2i.* + m3i.*).
Term column4(const Matrix4& m, std::size_t i);

/// The identity matrix on 2-bits: maps each 2-bit to its 2-qubit.
Term qubits();

/// \M. \t. case_sup_par(t, [x] M false, [y] M true) : (B -> Q) -> Q -> Q.
Term appDef();
/// The Q(x)2 version with nested case_sup_par.
Term app2Def();
Term app(const Term& matrix, const Term& vector);
Term app2(const Term& matrix, const Term& vector);

/// \f:B->B. the matrix of U_f |x,y> = |x, y xor f(x)>, built from qubits and xor.
Term oracleOperator();
/// 1.(1/2.* + -1/2.*) + 1.(1/2.* + -1/2.*)
Term plusMinus();
/// \f. measureFirst(app2 (H(x)I) (app2 (U f) |+->)) : (B -> B) -> B.
Term deutschDef();
Term deutsch(const Term& f);
/// The state measured by deutsch(f).
Term deutschState(const Term& f);

enum class BitFunction { Const0, Const1, Identity, Negation };
Term bitFunction(BitFunction f);
bool applyBitFunction(BitFunction f, bool x);

struct NamedDef {
    std::string name;
    Prop proposition;
    Term body;
};

/// Every named definition, each checked against its proposition on first use.
const std::vector<NamedDef>& definitions();
const NamedDef& definition(const std::string& name);

}  // namespace sup::stdlib
