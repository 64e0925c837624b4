#include "sup/reduction.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "sup/binding.hpp"
#include "sup/error.hpp"

namespace sup {

const char* ruleName(RuleId rule) {
    switch (rule) {
    case RuleId::Beta: return "Beta";
    case RuleId::ElimAndPair: return "ElimAndPair";
    case RuleId::ElimOrInl: return "ElimOrInl";
    case RuleId::ElimOrInr: return "ElimOrInr";
    case RuleId::ElimSupLeft: return "ElimSupLeft";
    case RuleId::ElimSupRight: return "ElimSupRight";
    case RuleId::ElimSupPar: return "ElimSupPar";
    case RuleId::ParLam: return "ParLam";
    case RuleId::ParPair: return "ParPair";
    case RuleId::ParElimOr: return "ParElimOr";
    case RuleId::ParSum: return "ParSum";
    case RuleId::ParIdem: return "ParIdem";
    case RuleId::UltraLeft: return "UltraLeft";
    case RuleId::UltraRight: return "UltraRight";
    }
    return "?";
}

void Config::validate() const {
    if (strategy == Strategy::Quantum && mode != Mode::Scalar) {
        throw std::invalid_argument("the quantum strategy requires scalar mode");
    }
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::pair<double, double> branchProbabilities(const Term& scrutinee) {
    if (scrutinee.kind() != TermKind::Sum) {
        throw Error(ErrorKind::NotASum, "branch probabilities need a sum scrutinee");
    }
    auto isQubit = [](const Term& s) {
        return s.kind() == TermKind::Sum && s.child(0).kind() == TermKind::Star &&
               s.child(1).kind() == TermKind::Star;
    };
    double left = 0.0;
    double right = 0.0;
    if (isQubit(scrutinee)) {
        left = normSquared(scrutinee.weight(0));
        right = normSquared(scrutinee.weight(1));
    } else if (isQubit(scrutinee.child(0)) && isQubit(scrutinee.child(1)) &&
               exactlyEqual(scrutinee.weight(0), scalarOne()) &&
               exactlyEqual(scrutinee.weight(1), scalarOne())) {
        const Term& hi = scrutinee.child(0);
        const Term& lo = scrutinee.child(1);
        left = normSquared(hi.weight(0)) + normSquared(hi.weight(1));
        right = normSquared(lo.weight(0)) + normSquared(lo.weight(1));
    } else {
        return {0.5, 0.5};
    }
    const double total = left + right;
    if (total == 0.0) return {0.5, 0.5};
    return {left / total, right / total};
}

namespace {

class RedexFinder {
public:
    explicit RedexFinder(const Config& cfg) : cfg_(cfg) {}

    std::vector<Redex> run(const Term& t) {
        visit(t, false);
        std::stable_sort(found_.begin(), found_.end(), [](const Redex& a, const Redex& b) {
            if (a.position != b.position) return a.position < b.position;
            return a.rule < b.rule;
        });
        return std::move(found_);
    }

private:
    // Returns whether the subtree rooted at t contains a redex.
    bool visit(const Term& t, bool inWeightedSlot) {
        const bool weightedChildren = t.kind() == TermKind::Par || t.kind() == TermKind::Sum;
        bool any = false;
        bool scrutineeReducible = false;
        for (std::size_t i = 0; i < t.arity(); ++i) {
            path_.push_back(static_cast<std::uint8_t>(i));
            const bool sub = visit(t.child(i), weightedChildren);
            path_.pop_back();
            if (i == 0) scrutineeReducible = sub;
            any = any || sub;
        }
        return ownRedexes(t, inWeightedSlot, scrutineeReducible) || any;
    }

    void emit(RuleId rule, std::optional<double> p = std::nullopt, bool onWeighted = false) {
        found_.push_back(Redex{path_, rule, p, onWeighted});
    }

    bool ownRedexes(const Term& t, bool inWeightedSlot, bool scrutineeReducible) {
        const std::size_t before = found_.size();
        switch (t.kind()) {
        case TermKind::App:
            if (t.child(0).kind() == TermKind::Lam) emit(RuleId::Beta);
            break;
        case TermKind::ElimAnd:
            if (t.child(0).kind() == TermKind::Pair) emit(RuleId::ElimAndPair);
            break;
        case TermKind::ElimOr:
            switch (t.child(0).kind()) {
            case TermKind::Inl: emit(RuleId::ElimOrInl); break;
            case TermKind::Inr: emit(RuleId::ElimOrInr); break;
            case TermKind::Par: emit(RuleId::ParElimOr); break;
            default: break;
            }
            break;
        case TermKind::ElimSup:
        case TermKind::ElimSupPar: {
            const Term& s = t.child(0);
            if (s.kind() != TermKind::Sum) break;
            const bool settled = !scrutineeReducible && freeVars(s).empty();
            if (cfg_.strategy == Strategy::Quantum && !settled) break;
            if (t.kind() == TermKind::ElimSupPar) {
                emit(RuleId::ElimSupPar);
                break;
            }
            if (settled) {
                const auto [pl, pr] = branchProbabilities(s);
                emit(RuleId::ElimSupLeft, pl);
                emit(RuleId::ElimSupRight, pr);
            } else {
                emit(RuleId::ElimSupLeft);
                emit(RuleId::ElimSupRight);
            }
            break;
        }
        case TermKind::Par: {
            const Term& l = t.child(0);
            const Term& r = t.child(1);
            if (l.kind() == TermKind::Lam && r.kind() == TermKind::Lam && l.prop() == r.prop()) {
                emit(RuleId::ParLam);
            }
            if (l.kind() == TermKind::Pair && r.kind() == TermKind::Pair) emit(RuleId::ParPair);
            if (l.kind() == TermKind::Sum && r.kind() == TermKind::Sum) emit(RuleId::ParSum);
            if (cfg_.mode == Mode::Plain) {
                if (alphaEq(l, r)) emit(RuleId::ParIdem);
            } else if (inWeightedSlot && alphaEq(l, r)) {
                emit(RuleId::ParIdem, std::nullopt, true);
            }
            if (cfg_.ultra) {
                emit(RuleId::UltraLeft);
                emit(RuleId::UltraRight);
            }
            break;
        }
        default: break;
        }
        return found_.size() != before;
    }

    const Config& cfg_;
    Path path_;
    std::vector<Redex> found_;
};

Term contractParLam(const Term& par) {
    const Term& l = par.child(0);
    const Term& r = par.child(1);
    const std::string& x = l.binder();
    const std::string& y = r.binder();
    Term leftBody = l.child(0);
    Term rightBody = r.child(0);
    std::string z = x;
    if (x != y) {
        if (!occursFree(rightBody, x)) {
            rightBody = substitute(rightBody, {{y, Term::var(x)}});
        } else {
            NameSet avoid = freeVars(leftBody);
            const NameSet rf = freeVars(rightBody);
            avoid.insert(rf.begin(), rf.end());
            avoid.insert(x);
            avoid.insert(y);
            z = freshName(x, avoid);
            leftBody = substitute(leftBody, {{x, Term::var(z)}});
            rightBody = substitute(rightBody, {{y, Term::var(z)}});
        }
    }
    return Term::lam(z, l.prop(),
                     Term::par(Weighted{par.weight(0), leftBody}, Weighted{par.weight(1), rightBody}));
}

Term contract(const Term& t, RuleId rule) {
    switch (rule) {
    case RuleId::Beta: {
        const Term& f = t.child(0);
        return substitute(f.child(0), {{f.binder(), t.child(1)}});
    }
    case RuleId::ElimAndPair: {
        const Term& p = t.child(0);
        Substitution s;
        s[t.binder()] = p.child(0);
        s[t.binder2()] = p.child(1);  // y shadows x when the names coincide
        return substitute(t.child(1), s);
    }
    case RuleId::ElimOrInl: return substitute(t.child(1), {{t.binder(), t.child(0).child(0)}});
    case RuleId::ElimOrInr: return substitute(t.child(2), {{t.binder2(), t.child(0).child(0)}});
    case RuleId::ElimSupLeft: return substitute(t.child(1), {{t.binder(), t.child(0).child(0)}});
    case RuleId::ElimSupRight: return substitute(t.child(2), {{t.binder2(), t.child(0).child(1)}});
    case RuleId::ElimSupPar: {
        const Term& s = t.child(0);
        return Term::par(Weighted{s.weight(0), substitute(t.child(1), {{t.binder(), s.child(0)}})},
                         Weighted{s.weight(1), substitute(t.child(2), {{t.binder2(), s.child(1)}})});
    }
    case RuleId::ParLam: return contractParLam(t);
    case RuleId::ParPair: {
        const Term& l = t.child(0);
        const Term& r = t.child(1);
        const Scalar a = t.weight(0);
        const Scalar b = t.weight(1);
        return Term::pair(Term::par(Weighted{a, l.child(0)}, Weighted{b, r.child(0)}),
                          Term::par(Weighted{a, l.child(1)}, Weighted{b, r.child(1)}));
    }
    case RuleId::ParElimOr: {
        const Term& p = t.child(0);
        auto branch = [&](std::size_t i) {
            return Term::elimOr(p.child(i), t.binder(), t.child(1), t.binder2(), t.child(2));
        };
        return Term::par(Weighted{p.weight(0), branch(0)}, Weighted{p.weight(1), branch(1)});
    }
    case RuleId::ParSum: {
        // a.(c.t + d.u) || b.(e.v + f.w) -> 1.(ac.t || be.v) + 1.(ad.u || bf.w)
        const Term& l = t.child(0);
        const Term& r = t.child(1);
        const Scalar a = t.weight(0);
        const Scalar b = t.weight(1);
        Term first = Term::par(Weighted{a * l.weight(0), l.child(0)}, Weighted{b * r.weight(0), r.child(0)});
        Term second = Term::par(Weighted{a * l.weight(1), l.child(1)}, Weighted{b * r.weight(1), r.child(1)});
        return Term::sum(Weighted{scalarOne(), first}, Weighted{scalarOne(), second});
    }
    case RuleId::ParIdem:
    case RuleId::UltraLeft: return t.child(0);
    case RuleId::UltraRight: return t.child(1);
    }
    return t;
}

}  // namespace

std::vector<Redex> findRedexes(const Term& t, const Config& cfg) { return RedexFinder(cfg).run(t); }

Term applyRule(const Term& t, const Redex& r) {
    if (r.onWeighted) {
        // a.(b.t || c.t) -> (a(b+c)).t, rewritten in the enclosing slot.
        Path parentPath(r.position.begin(), r.position.end() - 1);
        const std::size_t slot = r.position.back();
        const Term& parent = subtermAt(t, parentPath);
        const Term& par = parent.child(slot);
        const Scalar a = parent.weight(slot);
        const Scalar merged = a * (par.weight(0) + par.weight(1));
        return replaceAt(t, parentPath, parent.withWeighted(slot, Weighted{merged, par.child(0)}));
    }
    return replaceAt(t, r.position, contract(subtermAt(t, r.position), r.rule));
}

namespace {

// The redex the deterministic strategy takes: the first one, except that a
// case_sup pair is resolved by the configured policy.
const Redex& choose(const std::vector<Redex>& redexes, const Config& cfg, Rng& rng) {
    const Redex& first = redexes.front();
    if (first.rule != RuleId::ElimSupLeft) return first;
    const Redex& second = redexes.at(1);
    switch (cfg.nondet) {
    case Nondet::ForceLeft: return first;
    case Nondet::ForceRight: return second;
    case Nondet::Sample: return uniform01(rng) < first.probability.value_or(0.5) ? first : second;
    case Nondet::EnumerateAll: break;
    }
    throw std::invalid_argument("normalize needs a Sample, ForceLeft or ForceRight policy");
}

[[noreturn]] void stepLimit(std::size_t limit) {
    throw Error(ErrorKind::StepLimitExceeded, "step limit of " + std::to_string(limit) + " exceeded");
}

}  // namespace

Term normalize(const Term& t, const Config& cfg, Rng& rng) {
    cfg.validate();
    if (cfg.nondet == Nondet::EnumerateAll) {
        throw std::invalid_argument("normalize needs a Sample, ForceLeft or ForceRight policy");
    }
    Term current = t;
    for (std::size_t steps = 0;; ++steps) {
        const auto redexes = findRedexes(current, cfg);
        if (redexes.empty()) return current;
        if (steps >= cfg.maxSteps) stepLimit(cfg.maxSteps);
        current = applyRule(current, choose(redexes, cfg, rng));
    }
}

Term normalize(const Term& t, const Config& cfg) {
    Rng rng(cfg.seed);
    return normalize(t, cfg, rng);
}

void Distribution::add(const Term& t, double probability) {
    auto key = canonicalKey(t);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(std::move(key), Entry{t, probability});
    } else {
        it->second.probability += probability;
    }
}

double Distribution::total() const {
    double sum = 0.0;
    for (const auto& [key, e] : entries_) sum += e.probability;
    return sum;
}

double Distribution::probabilityOf(const Term& t) const {
    auto it = entries_.find(canonicalKey(t));
    return it == entries_.end() ? 0.0 : it->second.probability;
}

std::vector<Distribution::Entry> Distribution::sorted() const {
    std::vector<std::pair<std::string, Entry>> items(entries_.begin(), entries_.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        return a.second.probability > b.second.probability;
    });
    std::vector<Entry> out;
    out.reserve(items.size());
    for (auto& [key, e] : items) out.push_back(std::move(e));
    return out;
}

namespace {

class Enumerator {
public:
    explicit Enumerator(const Config& cfg) : cfg_(cfg) {}

    void explore(Term t, double mass, std::size_t steps) {
        for (;; ++steps) {
            const auto redexes = findRedexes(t, cfg_);
            if (redexes.empty()) {
                result.add(t, mass);
                return;
            }
            if (steps >= cfg_.maxSteps) stepLimit(cfg_.maxSteps);
            const Redex& first = redexes.front();
            if (first.rule == RuleId::ElimSupLeft) {
                const Redex& second = redexes.at(1);
                if (!first.probability || !second.probability) {
                    throw Error(ErrorKind::EnumerationUndefined,
                                "case_sup fires on an open or reducible scrutinee; "
                                "its branch probabilities are undefined");
                }
                if (*first.probability > 0.0) explore(applyRule(t, first), mass * *first.probability, steps + 1);
                if (*second.probability > 0.0) explore(applyRule(t, second), mass * *second.probability, steps + 1);
                return;
            }
            t = applyRule(t, first);
        }
    }

    Distribution result;

private:
    const Config& cfg_;
};

}  // namespace

Distribution enumerate(const Term& t, const Config& cfg) {
    cfg.validate();
    if (cfg.nondet != Nondet::EnumerateAll) {
        throw std::invalid_argument("enumerate needs the EnumerateAll policy");
    }
    Enumerator e(cfg);
    e.explore(t, 1.0, 0);
    return std::move(e.result);
}

ReductionGraph reductionGraph(const Term& t, const Config& cfg, std::size_t maxNodes) {
    cfg.validate();
    ReductionGraph g;
    std::unordered_map<std::string, std::size_t> index;
    g.nodes.push_back(t);
    index.emplace(canonicalKey(t), 0);

    for (std::size_t next = 0; next < g.nodes.size(); ++next) {
        const Term current = g.nodes[next];
        for (const Redex& r : findRedexes(current, cfg)) {
            Term reduct = applyRule(current, r);
            auto key = canonicalKey(reduct);
            auto it = index.find(key);
            std::size_t target;
            if (it == index.end()) {
                if (g.nodes.size() >= maxNodes) {
                    throw Error(ErrorKind::GraphBudgetExceeded,
                                "reduction graph exceeds " + std::to_string(maxNodes) + " nodes");
                }
                target = g.nodes.size();
                g.nodes.push_back(std::move(reduct));
                index.emplace(std::move(key), target);
            } else {
                target = it->second;
            }
            g.edges.push_back(ReductionEdge{next, target, r.rule});
        }
    }

    // Kahn's algorithm; longest path from the start node along the way.
    const std::size_t n = g.nodes.size();
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& e : g.edges) {
        out[e.from].push_back(e.to);
        ++indegree[e.to];
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (out[v].empty()) g.terminals.push_back(v);
    }
    std::vector<std::size_t> depth(n, 0);
    std::deque<std::size_t> ready;
    for (std::size_t v = 0; v < n; ++v) {
        if (indegree[v] == 0) ready.push_back(v);
    }
    std::size_t processed = 0;
    while (!ready.empty()) {
        const std::size_t v = ready.front();
        ready.pop_front();
        ++processed;
        g.longestPath = std::max(g.longestPath, depth[v]);
        for (std::size_t w : out[v]) {
            depth[w] = std::max(depth[w], depth[v] + 1);
            if (--indegree[w] == 0) ready.push_back(w);
        }
    }
    g.acyclic = processed == n;
    return g;
}

}  // namespace sup
