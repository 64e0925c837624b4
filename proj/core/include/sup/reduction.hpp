#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "sup/term.hpp"

namespace sup {

enum class RuleId : std::uint8_t {
    Beta,
    ElimAndPair,
    ElimOrInl,
    ElimOrInr,
    ElimSupLeft,
    ElimSupRight,
    ElimSupPar,
    ParLam,
    ParPair,
    ParElimOr,
    ParSum,
    ParIdem,
    UltraLeft,
    UltraRight,
};

const char* ruleName(RuleId rule);

/// AnyRedex reduces everywhere. Quantum only fires case_sup / case_sup_par on
/// closed scrutinees that have no redex left.
enum class Strategy { AnyRedex, Quantum };

/// How the choice between the two case_sup reducts is made.
enum class Nondet { Sample, EnumerateAll, ForceLeft, ForceRight };

struct Config {
    Mode mode = Mode::Plain;
    Strategy strategy = Strategy::AnyRedex;
    Nondet nondet = Nondet::ForceLeft;
    std::uint64_t seed = 0;  // root seed for Nondet::Sample
    bool ultra = false;      // adds t || u -> t and t || u -> u
    std::size_t maxSteps = 1'000'000;

    /// Throws std::invalid_argument for Quantum without Scalar mode.
    void validate() const;

    static Config quantum(Nondet nondet = Nondet::EnumerateAll) {
        Config c;
        c.mode = Mode::Scalar;
        c.strategy = Strategy::Quantum;
        c.nondet = nondet;
        return c;
    }
};

struct Redex {
    Path position;
    RuleId rule;
    // Born probability, present only on case_sup alternatives whose scrutinee
    // is closed and irreducible.
    std::optional<double> probability;
    // Scalar-mode ParIdem rewrites the weighted proof a.(b.t || c.t) that
    // encloses the parallel at `position`.
    bool onWeighted = false;

    friend bool operator==(const Redex&, const Redex&) = default;
};

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from 53 random bits; identical on every platform.
double uniform01(Rng& rng);

/// Every redex of the active rule table, in preorder of position (outermost
/// and leftmost first), ties broken by rule order.
std::vector<Redex> findRedexes(const Term& t, const Config& cfg);

/// The contractum of `r` placed back into `t`.
Term applyRule(const Term& t, const Redex& r);

/// Born weights for case_sup on a closed irreducible sum. Q-shaped
/// a.* + b.* gives |a|^2 : |b|^2; Q(x)2-shaped 1.(a.*+b.*) + 1.(c.*+d.*) gives
/// |a|^2+|b|^2 : |c|^2+|d|^2; all-zero or other shapes give 1/2 : 1/2.
/// Throws Error(NotASum) when the scrutinee is not a Sum.
std::pair<double, double> branchProbabilities(const Term& scrutinee);

/// Leftmost-outermost normalization. case_sup choices follow cfg.nondet
/// (Sample draws from `rng`). Throws Error(StepLimitExceeded).
Term normalize(const Term& t, const Config& cfg, Rng& rng);
Term normalize(const Term& t, const Config& cfg);

/// Finite distribution over alpha-classes of normal forms.
class Distribution {
public:
    struct Entry {
        Term term;
        double probability = 0.0;
    };

    void add(const Term& t, double probability);

    double total() const;
    double probabilityOf(const Term& t) const;
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    /// Descending probability; equal probabilities by canonical key.
    std::vector<Entry> sorted() const;
    const std::map<std::string, Entry>& byKey() const { return entries_; }

private:
    std::map<std::string, Entry> entries_;
};

/// Exact distribution of normal forms under the configured strategy, splitting
/// mass at each case_sup. Requires cfg.nondet == EnumerateAll. Throws
/// Error(EnumerationUndefined) when a case_sup fires without a probability.
Distribution enumerate(const Term& t, const Config& cfg);

struct ReductionEdge {
    std::size_t from;
    std::size_t to;
    RuleId rule;
};

struct ReductionGraph {
    std::vector<Term> nodes;  // nodes[0] is the start term
    std::vector<ReductionEdge> edges;
    std::vector<std::size_t> terminals;  // nodes without outgoing edges
    bool acyclic = true;
    std::size_t longestPath = 0;  // in edges; meaningful when acyclic
};

/// All one-step reducts, transitively, with alpha-equivalent terms merged.
/// Throws Error(GraphBudgetExceeded) if more than maxNodes terms are reached.
ReductionGraph reductionGraph(const Term& t, const Config& cfg, std::size_t maxNodes);

}  // namespace sup
