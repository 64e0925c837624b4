#include "sup/oracle/stats.hpp"

#include <cmath>
#include <limits>

#include <boost/math/distributions/chi_squared.hpp>

namespace sup::oracle {

namespace {

std::size_t total(const Counts& observed) {
    std::size_t n = 0;
    for (const auto& [key, count] : observed) n += count;
    return n;
}

}  // namespace

double chiSquare(const Counts& observed, const Distribution& expected) {
    const double n = static_cast<double>(total(observed));
    double stat = 0.0;
    for (const auto& [key, entry] : expected.byKey()) {
        const auto it = observed.find(key);
        const double o = it == observed.end() ? 0.0 : static_cast<double>(it->second);
        const double e = n * entry.probability;
        if (e == 0.0) {
            if (o > 0.0) return std::numeric_limits<double>::infinity();
            continue;
        }
        stat += (o - e) * (o - e) / e;
    }
    for (const auto& [key, count] : observed) {
        if (count > 0 && !expected.byKey().count(key)) return std::numeric_limits<double>::infinity();
    }
    return stat;
}

ChiSquare chiSquareTest(const Counts& observed, const Distribution& expected) {
    ChiSquare r;
    r.statistic = chiSquare(observed, expected);
    std::size_t cells = 0;
    for (const auto& [key, entry] : expected.byKey()) {
        if (entry.probability > 0.0) ++cells;
    }
    r.degreesOfFreedom = cells > 1 ? cells - 1 : 0;
    if (std::isinf(r.statistic)) {
        r.pValue = 0.0;
    } else if (r.degreesOfFreedom == 0) {
        r.pValue = 1.0;
    } else {
        const boost::math::chi_squared dist(static_cast<double>(r.degreesOfFreedom));
        r.pValue = boost::math::cdf(boost::math::complement(dist, r.statistic));
    }
    return r;
}

bool withinSigma(std::size_t hits, std::size_t n, double p, double k) {
    const double mean = static_cast<double>(n) * p;
    const double sigma = std::sqrt(static_cast<double>(n) * p * (1.0 - p));
    return std::abs(static_cast<double>(hits) - mean) <= k * sigma;
}

}  // namespace sup::oracle
