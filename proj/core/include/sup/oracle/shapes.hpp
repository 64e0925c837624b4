#pragma once

#include <optional>
#include <string>

#include "sup/prop.hpp"
#include "sup/term.hpp"

namespace sup::oracle {

/// Checks a closed irreducible proof `t` of `A` against the introduction
/// shapes: T is *, F has no proof, A -> B is a lambda, A /\ B a pair,
/// A \/ B an injection or a parallel, A (+) B a sum. Closed immediate
/// subproofs (pair components, injected proofs, sum and parallel bodies) are
/// checked too. Returns a description of the first violation.
std::optional<std::string> introductionViolation(const Term& t, const Prop& a);

/// Whether descending through the parallels of a closed irreducible proof of
/// a disjunction always reaches an inl or an inr.
bool hasDisjunctionWitness(const Term& t);

}  // namespace sup::oracle
