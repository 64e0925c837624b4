#include "sup/syntax.hpp"

namespace sup {

namespace {

// Binding levels, loosest first. A subterm printed at a context level tighter
// than its own gets parentheses.
enum Level { LAM = 0, PAR = 1, SUM = 2, WEIGHTED = 3, APP = 4, ATOM = 5 };

class Printer {
public:
    explicit Printer(const PrintOptions& opts) : opts_(opts) {}

    std::string run(const Term& t) {
        term(t, LAM);
        return std::move(out_);
    }

private:
    bool scalar() const { return opts_.mode == Mode::Scalar; }
    bool uni() const { return opts_.unicode; }

    void prop(const Prop& p) { out_ += uni() ? toUnicode(p) : toString(p); }

    static Level levelOf(const Term& t) {
        switch (t.kind()) {
        case TermKind::Lam: return LAM;
        case TermKind::Par: return PAR;
        case TermKind::Sum: return SUM;
        case TermKind::App: return APP;
        default: return ATOM;
        }
    }

    void term(const Term& t, Level ctx) {
        const Level own = levelOf(t);
        // Lambdas extend as far right as possible, so they are only bare at the top.
        const bool parens = own < ctx || (own == LAM && ctx != LAM);
        if (parens) out_ += '(';
        body(t);
        if (parens) out_ += ')';
    }

    void weighted(const Term& parent, std::size_t i, Level ctx) {
        if (!scalar()) {
            term(parent.child(i), ctx);
            return;
        }
        out_ += printWeight(parent.weight(i));
        out_ += " . ";
        term(parent.child(i), APP);
    }

    void binary(const Term& t, const char* op) {
        const Level own = levelOf(t);
        weighted(t, 0, own);
        out_ += op;
        weighted(t, 1, static_cast<Level>(own + 1));
    }

    void branchCase(const char* keyword, const Term& t) {
        out_ += keyword;
        out_ += '(';
        term(t.child(0), LAM);
        out_ += ", [";
        out_ += t.binder();
        out_ += "] ";
        term(t.child(1), LAM);
        out_ += ", [";
        out_ += t.binder2();
        out_ += "] ";
        term(t.child(2), LAM);
        out_ += ')';
    }

    void injection(const char* keyword, const Term& t) {
        if (t.child(0).kind() == TermKind::Star && !t.annotated()) {
            out_ += t.kind() == TermKind::Inl ? "false" : "true";
            return;
        }
        out_ += keyword;
        out_ += '(';
        term(t.child(0), LAM);
        if (t.annotated()) {
            out_ += ", ";
            prop(t.prop());
        }
        out_ += ')';
    }

    void body(const Term& t) {
        switch (t.kind()) {
        case TermKind::Var: out_ += t.name(); return;
        case TermKind::Star: out_ += uni() ? "∗" : "*"; return;
        case TermKind::Par: binary(t, uni() ? " ∥ " : " || "); return;
        case TermKind::Sum: binary(t, " + "); return;
        case TermKind::Lam:
            out_ += uni() ? "λ" : "\\";
            out_ += t.binder();
            out_ += ':';
            prop(t.prop());
            out_ += ". ";
            term(t.child(0), LAM);
            return;
        case TermKind::App:
            term(t.child(0), APP);
            out_ += ' ';
            term(t.child(1), ATOM);
            return;
        case TermKind::Pair:
            out_ += uni() ? "⟨" : "<";
            term(t.child(0), LAM);
            out_ += ", ";
            term(t.child(1), LAM);
            out_ += uni() ? "⟩" : ">";
            return;
        case TermKind::ElimBot:
            out_ += "absurd(";
            term(t.child(0), LAM);
            out_ += ", ";
            prop(t.prop());
            out_ += ')';
            return;
        case TermKind::ElimAnd:
            out_ += "case_and(";
            term(t.child(0), LAM);
            out_ += ", [";
            out_ += t.binder();
            out_ += ", ";
            out_ += t.binder2();
            out_ += "] ";
            term(t.child(1), LAM);
            out_ += ')';
            return;
        case TermKind::Inl: injection("inl", t); return;
        case TermKind::Inr: injection("inr", t); return;
        case TermKind::ElimOr: branchCase("case_or", t); return;
        case TermKind::ElimSup: branchCase("case_sup", t); return;
        case TermKind::ElimSupPar: branchCase("case_sup_par", t); return;
        }
    }

    const PrintOptions& opts_;
    std::string out_;
};

}  // namespace

std::string printWeight(const Scalar& a) {
    const std::string s = formatScalar(a);
    return a.imag() == 0.0 ? s : "(" + s + ")";
}

std::string printTerm(const Term& t, const PrintOptions& opts) { return Printer(opts).run(t); }

}  // namespace sup
