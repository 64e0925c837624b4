#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "sup/reduction.hpp"

namespace sup::oracle {

/// Observed counts keyed by canonicalKey of the normal form.
using Counts = std::map<std::string, std::size_t>;

struct ChiSquare {
    double statistic = 0.0;
    std::size_t degreesOfFreedom = 0;
    double pValue = 1.0;
};

/// Pearson statistic of `observed` against `expected`. Outcomes with zero
/// expected mass are left out unless observed, which makes the statistic
/// infinite.
double chiSquare(const Counts& observed, const Distribution& expected);

/// Statistic plus the upper-tail p-value with (cells - 1) degrees of freedom.
ChiSquare chiSquareTest(const Counts& observed, const Distribution& expected);

/// |hits - n p| <= k sqrt(n p (1 - p)).
bool withinSigma(std::size_t hits, std::size_t n, double p, double k = 3.0);

}  // namespace sup::oracle
