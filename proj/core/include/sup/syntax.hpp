#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "sup/error.hpp"
#include "sup/prop.hpp"
#include "sup/scalar.hpp"
#include "sup/term.hpp"

namespace sup {

// Concrete syntax (ASCII):
//
//   terms   x  *  false  true  \x:A. t  t u  <t, u>  inl(t)  inl(t, B)  inr(t, A)
//           absurd(t, C)  case_and(t, [x, y] u)  case_or(t, [x] u, [y] v)
//           case_sup(t, [x] u, [y] v)  case_sup_par(t, [x] u, [y] v)
//           t || u  t + u  a . t   (weights only in scalar mode)
//   props   T  F  A -> B  A (+) B  A \/ B  A /\ B   (loosest to tightest, all
//           right-associative)
//   scalars decimals, `i`, `2.5i`, + - * /, sqrt(...), parentheses
//
// `||` binds looser than `+`, both associate left. A weight applies to an
// application-level term. `inl(t)` abbreviates `inl(t, T)`; `false` and `true`
// abbreviate inl(*) and inr(*). Comments run from `--` to the end of the line.

struct PrintOptions {
    Mode mode = Mode::Plain;
    bool unicode = false;  // display only; not re-parseable
};

std::string printTerm(const Term& t, const PrintOptions& opts = {});
std::string printWeight(const Scalar& a);

/// Throws ParseError (kind Parse, Mode or DivisionByZero).
Term parseTerm(std::string_view text, Mode mode);
Prop parseProp(std::string_view text);
ScalarExpr parseScalarExpr(std::string_view text);
Scalar parseScalar(std::string_view text);

/// One `def name : Prop = term` of a source file.
struct Definition {
    std::string name;
    Prop proposition;
    Term body;        // as written; may mention earlier definitions
    Term elaborated;  // earlier definitions substituted in
    SourceLocation where;
};

/// A `.sup` file: an optional `#mode plain|scalar` pragma (default plain)
/// followed by definitions. Names must be defined before use and only once.
struct SourceFile {
    Mode mode = Mode::Plain;
    std::vector<Definition> definitions;

    const Definition* find(const std::string& name) const;
};

SourceFile parseSource(std::string_view text);
SourceFile loadSource(const std::filesystem::path& path);

}  // namespace sup
