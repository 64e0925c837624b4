#pragma once

#include <map>
#include <set>
#include <string>

#include "sup/term.hpp"

namespace sup {

using NameSet = std::set<std::string>;
using Substitution = std::map<std::string, Term>;

/// Variables with a free occurrence in t.
NameSet freeVars(const Term& t);

/// True iff `name` occurs free in t.
bool occursFree(const Term& t, const std::string& name);

/// A name derived from `base` that is not in `avoid`.
std::string freshName(const std::string& base, const NameSet& avoid);

/// Simultaneous capture-avoiding substitution. Binders are renamed only when
/// they would capture a free variable of a substituted term.
Term substitute(const Term& t, const Substitution& bindings);

/// Equality up to consistent renaming of bound variables. Weights compare
/// exactly (exactlyEqual) and annotations structurally.
bool alphaEq(const Term& t, const Term& u);

/// A string that is equal for two terms iff they are alpha-equivalent. Bound
/// variables become binding-depth indices and scalars their bit patterns.
std::string canonicalKey(const Term& t);

}  // namespace sup
