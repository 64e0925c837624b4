#include "sup/stdlib.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sup/binding.hpp"
#include "sup/error.hpp"
#include "sup/typecheck.hpp"

namespace sup::stdlib {

Prop bitType() { return Prop::disj(Prop::top(), Prop::top()); }
Prop twoBitType() { return Prop::conj(bitType(), bitType()); }
Prop qubitType() { return Prop::sup(Prop::top(), Prop::top()); }
Prop twoQubitType() { return Prop::sup(qubitType(), qubitType()); }

Term bit(bool value) { return value ? Term::inr(Term::star()) : Term::inl(Term::star()); }

Term twoBit(bool first, bool second) { return Term::pair(bit(first), bit(second)); }

Term mkTest(const Term& t, const Term& u, const Term& v) {
    NameSet avoid = freeVars(t);
    for (const Term* w : {&u, &v}) {
        const NameSet fv = freeVars(*w);
        avoid.insert(fv.begin(), fv.end());
    }
    const std::string x = freshName("x", avoid);
    avoid.insert(x);
    const std::string y = freshName("y", avoid);
    return Term::elimOr(t, x, u, y, v);
}

Term exclusiveOr() {
    const Term x = Term::var("x");
    const Term y = Term::var("y");
    return Term::lam("x", bitType(),
                     Term::lam("y", bitType(), mkTest(x, y, mkTest(y, bit(true), bit(false)))));
}

Term qubit(Scalar a, Scalar b) { return Term::sum(Weighted{a, Term::star()}, Weighted{b, Term::star()}); }

Term qubit2(Scalar a, Scalar b, Scalar c, Scalar d) {
    return Term::sum(Weighted{scalarOne(), qubit(a, b)}, Weighted{scalarOne(), qubit(c, d)});
}

namespace {

Term weightedSum(Scalar a, Term t, Scalar b, Term u) {
    return Term::sum(Weighted{a, std::move(t)}, Weighted{b, std::move(u)});
}

Term zeroQubit() { return qubit(scalarZero(), scalarZero()); }

}  // namespace

Term measure(const Term& t) { return Term::elimSup(t, "_", bit(false), "_", bit(true)); }

Term measureState(const Term& t) {
    return Term::elimSup(t, "x", weightedSum(scalarOne(), Term::var("x"), scalarZero(), Term::star()), "y",
                         weightedSum(scalarZero(), Term::star(), scalarOne(), Term::var("y")));
}

Term measurePair(const Term& t) {
    return Term::elimSup(
        t, "x", Term::pair(bit(false), weightedSum(scalarOne(), Term::var("x"), scalarZero(), Term::star())), "y",
        Term::pair(bit(true), weightedSum(scalarZero(), Term::star(), scalarOne(), Term::var("y"))));
}

Term measureFirst(const Term& t) { return measure(t); }

Term measureFirstState(const Term& t) {
    return Term::elimSup(t, "x", weightedSum(scalarOne(), Term::var("x"), scalarOne(), zeroQubit()), "y",
                         weightedSum(scalarOne(), zeroQubit(), scalarOne(), Term::var("y")));
}

Term measureFirstPair(const Term& t) {
    return Term::elimSup(
        t, "x", Term::pair(bit(false), weightedSum(scalarOne(), Term::var("x"), scalarOne(), zeroQubit())), "y",
        Term::pair(bit(true), weightedSum(scalarOne(), zeroQubit(), scalarOne(), Term::var("y"))));
}

Matrix2 Matrix2::identity() {
    Matrix2 r;
    r.m[0][0] = r.m[1][1] = scalarOne();
    return r;
}

Matrix2 Matrix2::hadamard() {
    const double s = std::numbers::sqrt2 / 2.0;
    Matrix2 r;
    r.m[0][0] = r.m[0][1] = r.m[1][0] = Scalar(s, 0.0);
    r.m[1][1] = Scalar(-s, 0.0);
    return r;
}

Matrix4 Matrix4::identity() {
    Matrix4 r;
    for (std::size_t i = 0; i < 4; ++i) r.m[i][i] = scalarOne();
    return r;
}

Matrix4 Matrix4::hadamardFirst() {
    const Scalar s(std::numbers::sqrt2 / 2.0, 0.0);
    Matrix4 r;
    r.m[0][0] = r.m[2][0] = r.m[1][1] = r.m[3][1] = r.m[0][2] = r.m[1][3] = s;
    r.m[2][2] = r.m[3][3] = -s;
    return r;
}

Term mkMatrix(const Matrix2& m) {
    const Term col0 = qubit(m.m[0][0], m.m[1][0]);
    const Term col1 = qubit(m.m[0][1], m.m[1][1]);
    return Term::lam("x", bitType(), mkTest(Term::var("x"), col0, col1));
}

Term column4(const Matrix4& m, std::size_t i) {
    return qubit2(m.m[0][i], m.m[1][i], m.m[2][i], m.m[3][i]);
}

namespace {

// \x:B^2. case_and(x, [y,z] test(y, test(z, c0, c1), test(z, c2, c3)))
Term twoBitDispatch(const Term& c0, const Term& c1, const Term& c2, const Term& c3) {
    NameSet avoid;
    for (const Term* c : {&c0, &c1, &c2, &c3}) {
        const NameSet fv = freeVars(*c);
        avoid.insert(fv.begin(), fv.end());
    }
    const std::string x = freshName("x", avoid);
    avoid.insert(x);
    const std::string y = freshName("y", avoid);
    avoid.insert(y);
    const std::string z = freshName("z", avoid);
    const Term zv = Term::var(z);
    return Term::lam(x, twoBitType(),
                     Term::elimAnd(Term::var(x), y, z,
                                   mkTest(Term::var(y), mkTest(zv, c0, c1), mkTest(zv, c2, c3))));
}

}  // namespace

Term mkMatrix4(const Matrix4& m) {
    return twoBitDispatch(column4(m, 0), column4(m, 1), column4(m, 2), column4(m, 3));
}

Term qubits() { return mkMatrix4(Matrix4::identity()); }

Term appDef() {
    const Term mv = Term::var("M");
    return Term::lam(
        "M", Prop::implies(bitType(), qubitType()),
        Term::lam("t", qubitType(),
                  Term::elimSupPar(Term::var("t"), "x", Term::app(mv, bit(false)), "y", Term::app(mv, bit(true)))));
}

Term app2Def() {
    const Term mv = Term::var("M");
    auto half = [&](const std::string& v, bool first) {
        return Term::elimSupPar(Term::var(v), "_", Term::app(mv, twoBit(first, false)), "_",
                                Term::app(mv, twoBit(first, true)));
    };
    return Term::lam("M", Prop::implies(twoBitType(), twoQubitType()),
                     Term::lam("t", twoQubitType(),
                               Term::elimSupPar(Term::var("t"), "y", half("y", false), "z", half("z", true))));
}

Term app(const Term& matrix, const Term& vector) { return Term::app(Term::app(appDef(), matrix), vector); }

Term app2(const Term& matrix, const Term& vector) { return Term::app(Term::app(app2Def(), matrix), vector); }

Term oracleOperator() {
    const Term f = Term::var("f");
    // M_i = qubits <x, xor y (f x)> for the column i = 2x + y.
    auto col = [&](bool x, bool y) {
        return Term::app(qubits(),
                         Term::pair(bit(x), Term::app(Term::app(exclusiveOr(), bit(y)), Term::app(f, bit(x)))));
    };
    return Term::lam("f", Prop::implies(bitType(), bitType()),
                     twoBitDispatch(col(false, false), col(false, true), col(true, false), col(true, true)));
}

Term plusMinus() {
    const Scalar half(0.5, 0.0);
    return qubit2(half, -half, half, -half);
}

Term deutschState(const Term& f) {
    return app2(mkMatrix4(Matrix4::hadamardFirst()), app2(Term::app(oracleOperator(), f), plusMinus()));
}

Term deutschDef() {
    return Term::lam("f", Prop::implies(bitType(), bitType()), measureFirst(deutschState(Term::var("f"))));
}

Term deutsch(const Term& f) { return Term::app(deutschDef(), f); }

Term bitFunction(BitFunction f) {
    switch (f) {
    case BitFunction::Const0: return Term::lam("x", bitType(), bit(false));
    case BitFunction::Const1: return Term::lam("x", bitType(), bit(true));
    case BitFunction::Identity: return Term::lam("x", bitType(), Term::var("x"));
    case BitFunction::Negation: return Term::lam("x", bitType(), mkTest(Term::var("x"), bit(true), bit(false)));
    }
    return {};
}

bool applyBitFunction(BitFunction f, bool x) {
    switch (f) {
    case BitFunction::Const0: return false;
    case BitFunction::Const1: return true;
    case BitFunction::Identity: return x;
    case BitFunction::Negation: return !x;
    }
    return false;
}

namespace {

std::vector<NamedDef> buildDefinitions() {
    const Prop b = bitType();
    const Prop b2 = twoBitType();
    const Prop q = qubitType();
    const Prop q2 = twoQubitType();
    const Prop bb = Prop::implies(b, b);
    const Scalar s(std::numbers::sqrt2 / 2.0, 0.0);

    auto lamQ = [](const std::string& name, const Prop& dom, Term (*op)(const Term&)) {
        return Term::lam(name, dom, op(Term::var(name)));
    };

    std::vector<NamedDef> defs = {
        {"xor", Prop::implies(b, Prop::implies(b, b)), exclusiveOr()},
        {"const0", bb, bitFunction(BitFunction::Const0)},
        {"const1", bb, bitFunction(BitFunction::Const1)},
        {"id", bb, bitFunction(BitFunction::Identity)},
        {"not", bb, bitFunction(BitFunction::Negation)},
        {"ket0", q, qubit(scalarOne(), scalarZero())},
        {"ket1", q, qubit(scalarZero(), scalarOne())},
        {"plus", q, qubit(s, s)},
        {"bell", q2, qubit2(s, scalarZero(), scalarZero(), s)},
        {"pm", q2, plusMinus()},
        {"meas", Prop::implies(q, b), lamQ("t", q, measure)},
        {"meas_state", Prop::implies(q, q), lamQ("t", q, measureState)},
        {"meas_pair", Prop::implies(q, Prop::conj(b, q)), lamQ("t", q, measurePair)},
        {"meas1", Prop::implies(q2, b), lamQ("t", q2, measureFirst)},
        {"meas1_state", Prop::implies(q2, q2), lamQ("t", q2, measureFirstState)},
        {"meas1_pair", Prop::implies(q2, Prop::conj(b, q2)), lamQ("t", q2, measureFirstPair)},
        {"had", Prop::implies(b, q), mkMatrix(Matrix2::hadamard())},
        {"qubits", Prop::implies(b2, q2), qubits()},
        {"hi", Prop::implies(b2, q2), mkMatrix4(Matrix4::hadamardFirst())},
        {"app", Prop::implies(Prop::implies(b, q), Prop::implies(q, q)), appDef()},
        {"app2", Prop::implies(Prop::implies(b2, q2), Prop::implies(q2, q2)), app2Def()},
        {"U", Prop::implies(bb, Prop::implies(b2, q2)), oracleOperator()},
        {"deutsch", Prop::implies(bb, b), deutschDef()},
    };
    for (const auto& d : defs) {
        if (auto err = check(Context{}, d.body, d.proposition)) {
            throw Error(ErrorKind::Type, "stdlib definition '" + d.name + "': " + err->describe());
        }
    }
    return defs;
}

}  // namespace

const std::vector<NamedDef>& definitions() {
    static const std::vector<NamedDef> defs = buildDefinitions();
    return defs;
}

const NamedDef& definition(const std::string& name) {
    for (const auto& d : definitions()) {
        if (d.name == name) return d;
    }
    throw std::out_of_range("no stdlib definition named '" + name + "'");
}

}  // namespace sup::stdlib
