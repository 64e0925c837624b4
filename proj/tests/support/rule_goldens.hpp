#pragma once

// One golden per reduction rule: the contractum, printed, must match the
// rule's right-hand side exactly.

#include <algorithm>
#include <string>
#include <vector>

#include "support.hpp"

namespace sup::test {

struct Golden {
    const char* name;
    Mode mode;
    const char* redex;
    RuleId rule;
    Path position;
    const char* contractum;
};

inline std::string contract(const Golden& g, bool ultra = false) {
    Config cfg;
    cfg.mode = g.mode;
    cfg.ultra = ultra;
    const Term t = parseTerm(g.redex, g.mode);
    const auto redexes = findRedexes(t, cfg);
    const auto it = std::find_if(redexes.begin(), redexes.end(),
                                 [&](const Redex& r) { return r.rule == g.rule && r.position == g.position; });
    if (it == redexes.end()) return std::string("<no ") + ruleName(g.rule) + " redex>";
    return printTerm(applyRule(t, *it), {g.mode, false});
}

inline constexpr Mode P = Mode::Plain;
inline constexpr Mode S = Mode::Scalar;

inline std::vector<Golden> plainGoldens() {
    return {
        Golden{"Beta", P, "(\\x:T. <x, x>) u", RuleId::Beta, {}, "<u, u>"},
        Golden{"ElimAndPair", P, "case_and(<t, u>, [x, y] <y, x>)", RuleId::ElimAndPair, {}, "<u, t>"},
        Golden{"ElimOrInl", P, "case_or(inl(t), [x] <x, x>, [y] w)", RuleId::ElimOrInl, {}, "<t, t>"},
        Golden{"ElimOrInr", P, "case_or(inr(u), [x] v, [y] <y, y>)", RuleId::ElimOrInr, {}, "<u, u>"},
        Golden{"ElimSupLeft", P, "case_sup(t + u, [x] <x, x>, [y] <y, y>)", RuleId::ElimSupLeft, {}, "<t, t>"},
        Golden{"ElimSupRight", P, "case_sup(t + u, [x] <x, x>, [y] <y, y>)", RuleId::ElimSupRight, {}, "<u, u>"},
        Golden{"ElimSupPar", P, "case_sup_par(t + u, [x] <x, x>, [y] <y, y>)", RuleId::ElimSupPar, {},
               "<t, t> || <u, u>"},
        Golden{"ParLam", P, "(\\x:T. t) || (\\x:T. u)", RuleId::ParLam, {}, "\\x:T. t || u"},
        Golden{"ParPair", P, "<t, u> || <v, w>", RuleId::ParPair, {}, "<t || v, u || w>"},
        Golden{"ParElimOr", P, "case_or(t || u, [x] v, [y] w)", RuleId::ParElimOr, {},
               "case_or(t, [x] v, [y] w) || case_or(u, [x] v, [y] w)"},
        Golden{"ParSum", P, "(t + u) || (v + w)", RuleId::ParSum, {}, "(t || v) + (u || w)"},
        Golden{"ParIdem", P, "t || t", RuleId::ParIdem, {}, "t"},
        Golden{"ParIdemUpToAlpha", P, "(\\x:T. x) || (\\y:T. y)", RuleId::ParIdem, {}, "\\x:T. x"},
        Golden{"BetaInContext", P, "<*, (\\x:T. x) *>", RuleId::Beta, {1}, "<*, *>"},
    };
}

inline std::vector<Golden> scalarGoldens() {
    return {
        Golden{"Beta", S, "(\\x:T. 2 . x + 3 . x) u", RuleId::Beta, {}, "2 . u + 3 . u"},
        Golden{"ElimAndPair", S, "case_and(<t, u>, [x, y] <y, x>)", RuleId::ElimAndPair, {}, "<u, t>"},
        Golden{"ElimOrInl", S, "case_or(inl(t), [x] <x, x>, [y] w)", RuleId::ElimOrInl, {}, "<t, t>"},
        Golden{"ElimOrInr", S, "case_or(inr(u), [x] v, [y] <y, y>)", RuleId::ElimOrInr, {}, "<u, u>"},
        Golden{"ElimSupLeft", S, "case_sup(2 . t + 3 . u, [x] <x, x>, [y] <y, y>)", RuleId::ElimSupLeft, {},
               "<t, t>"},
        Golden{"ElimSupRight", S, "case_sup(2 . t + 3 . u, [x] <x, x>, [y] <y, y>)", RuleId::ElimSupRight, {},
               "<u, u>"},
        Golden{"ElimSupPar", S, "case_sup_par(2 . t + 3 . u, [x] <x, x>, [y] <y, y>)", RuleId::ElimSupPar, {},
               "2 . <t, t> || 3 . <u, u>"},
        Golden{"ParLam", S, "2 . (\\x:T. t) || 3 . (\\x:T. u)", RuleId::ParLam, {}, "\\x:T. 2 . t || 3 . u"},
        Golden{"ParPair", S, "2 . <t, u> || 3 . <v, w>", RuleId::ParPair, {}, "<2 . t || 3 . v, 2 . u || 3 . w>"},
        Golden{"ParElimOr", S, "case_or(2 . t || 3 . u, [x] v, [y] w)", RuleId::ParElimOr, {},
               "2 . case_or(t, [x] v, [y] w) || 3 . case_or(u, [x] v, [y] w)"},
        Golden{"ParSum", S, "2 . (5 . t + 7 . u) || 3 . (11 . v + 13 . w)", RuleId::ParSum, {},
               "1 . (10 . t || 33 . v) + 1 . (14 . u || 39 . w)"},
        Golden{"ParIdem", S, "1 . (2 . t || 3 . t) + 1 . u", RuleId::ParIdem, {0}, "5 . t + 1 . u"},
        Golden{"ParIdemScaled", S, "2 . (2 . t || 3 . t) + 0 . u", RuleId::ParIdem, {0}, "10 . t + 0 . u"},
        Golden{"ParIdemComplex", S, "i . ((0.5+1i) . t || 2 . t) + 1 . u", RuleId::ParIdem, {0},
               "(-1+2.5i) . t + 1 . u"},
    };
}

inline std::vector<Golden> ultraGoldens() {
    return {
        Golden{"UltraLeft", P, "t || u", RuleId::UltraLeft, {}, "t"},
        Golden{"UltraRight", P, "t || u", RuleId::UltraRight, {}, "u"},
        Golden{"UltraLeftScalar", S, "2 . t || 3 . u", RuleId::UltraLeft, {}, "t"},
        Golden{"UltraRightScalar", S, "2 . t || 3 . u", RuleId::UltraRight, {}, "u"},
    };
}

}  // namespace sup::test
