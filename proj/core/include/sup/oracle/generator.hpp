#pragma once

#include <cstddef>
#include <optional>

#include "sup/prop.hpp"
#include "sup/reduction.hpp"
#include "sup/term.hpp"

namespace sup::oracle {

struct GenOptions {
    Mode mode = Mode::Plain;  // Scalar draws random weights for sums and parallels
    // Upper bound on the term size; keeps exhaustive reduction graphs small.
    std::size_t maxSize = 20;
    // Relative chance of an elimination over an introduction at shallow depth.
    double eliminationBias = 0.45;
    double parallelChance = 0.15;
    // Attempts the backtracking search may make before giving up.
    std::size_t budget = 20'000;
};

/// A random proposition of the given depth (depth 0 is T or F).
Prop genProp(Rng& rng, std::size_t depth);

/// A closed well-typed term of depth at most maxDepth, built by running the
/// typing rules backwards. With no target a random inhabited proposition is
/// chosen. Throws Error(GenerationFailed) when the search runs out (for
/// example on target F).
Term genTypedTerm(Rng& rng, std::size_t maxDepth, std::optional<Prop> target = std::nullopt,
                  const GenOptions& options = {});

}  // namespace sup::oracle
