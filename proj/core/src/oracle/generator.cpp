#include "sup/oracle/generator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "sup/error.hpp"

namespace sup::oracle {

namespace {

// Without atoms every proposition is provably equivalent to T or F, with
// (+) behaving like /\. So provability from hypotheses is truth evaluation.
bool holds(const Prop& p) {
    switch (p.kind()) {
    case PropKind::Top: return true;
    case PropKind::Bottom: return false;
    case PropKind::Implies: return !holds(p.left()) || holds(p.right());
    case PropKind::Or: return holds(p.left()) || holds(p.right());
    default: return holds(p.left()) && holds(p.right());
    }
}

struct OutOfBudget {};

class Generator {
public:
    Generator(Rng& rng, const GenOptions& opts) : rng_(rng), opts_(opts) {}

    std::optional<Term> run(const Prop& target, std::size_t maxDepth) {
        attempts_ = 0;
        sizeLeft_ = opts_.maxSize;
        ctx_.clear();
        try {
            return gen(target, maxDepth);
        } catch (const OutOfBudget&) {
            return std::nullopt;
        }
    }

private:
    using Option = std::function<std::optional<Term>()>;

    double coin() { return uniform01(rng_); }

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(coin() * static_cast<double>(n)); }

    std::string freshName() {
        static constexpr const char* stems[] = {"x", "y", "z", "u", "v", "w"};
        const std::size_t k = counter_++;
        std::string name = stems[k % 6];
        if (k >= 6) name += std::to_string(k / 6);
        return name;
    }

    Scalar weight() {
        if (opts_.mode == Mode::Plain) return scalarOne();
        static const Scalar choices[] = {
            Scalar(1.0), Scalar(0.0), Scalar(0.5), Scalar(-1.0), Scalar(0.0, 1.0), Scalar(1.0 / std::sqrt(2.0)),
        };
        return choices[below(std::size(choices))];
    }

    // A proposition for the hidden premise of an elimination.
    Prop cut(const Prop& goal) {
        std::vector<Prop> pool{Prop::top(), goal};
        for (const auto& [name, p] : ctx_) pool.push_back(p);
        if (goal.isBinary()) {
            pool.push_back(goal.left());
            pool.push_back(goal.right());
        }
        if (coin() < 0.4) return genProp(rng_, below(2));
        return pool[below(pool.size())];
    }

    bool inconsistent() const {
        return std::any_of(ctx_.begin(), ctx_.end(), [](const auto& b) { return !holds(b.second); });
    }

    template <class F>
    std::optional<Term> underBinders(std::vector<std::pair<std::string, Prop>> binders, F&& body) {
        const std::size_t mark = ctx_.size();
        for (auto& b : binders) ctx_.push_back(std::move(b));
        std::optional<Term> r = body();
        ctx_.resize(mark);
        return r;
    }

    std::optional<Term> gen(const Prop& a, std::size_t depth) {
        if (++attempts_ > opts_.budget) throw OutOfBudget{};
        if (depth == 0 || sizeLeft_ == 0) return std::nullopt;
        if (!holds(a) && !inconsistent()) return std::nullopt;

        std::vector<std::pair<double, Option>> options;
        auto offer = [&](double w, Option o) {
            if (w > 0.0) options.emplace_back(-std::log(1.0 - coin()) / w, std::move(o));
        };

        for (const auto& [name, p] : ctx_) {
            if (p == a) {
                const std::string n = name;
                offer(1.0, [n] { return Term::var(n); });
            }
        }
        if (a.kind() == PropKind::Top) offer(1.0, [] { return Term::star(); });

        if (depth > 1) {
            const std::size_t d = depth - 1;
            const double elim = opts_.eliminationBias / (1.0 - opts_.eliminationBias);
            switch (a.kind()) {
            case PropKind::Implies:
                offer(1.0, [this, a, d] {
                    const std::string x = freshName();
                    return underBinders({{x, a.left()}}, [&]() -> std::optional<Term> {
                        auto body = gen(a.right(), d);
                        if (!body) return std::nullopt;
                        return Term::lam(x, a.left(), *body);
                    });
                });
                break;
            case PropKind::And:
                offer(1.0, [this, a, d]() -> std::optional<Term> {
                    auto l = gen(a.left(), d);
                    if (!l) return std::nullopt;
                    auto r = gen(a.right(), d);
                    if (!r) return std::nullopt;
                    return Term::pair(*l, *r);
                });
                break;
            case PropKind::Or:
                offer(0.5, [this, a, d]() -> std::optional<Term> {
                    auto l = gen(a.left(), d);
                    if (!l) return std::nullopt;
                    return Term::inl(*l, a.right());
                });
                offer(0.5, [this, a, d]() -> std::optional<Term> {
                    auto r = gen(a.right(), d);
                    if (!r) return std::nullopt;
                    return Term::inr(*r, a.left());
                });
                break;
            case PropKind::Sup:
                offer(1.0, [this, a, d]() -> std::optional<Term> {
                    auto l = gen(a.left(), d);
                    if (!l) return std::nullopt;
                    auto r = gen(a.right(), d);
                    if (!r) return std::nullopt;
                    return Term::sum(Weighted{weight(), *l}, Weighted{weight(), *r});
                });
                break;
            default: break;
            }

            offer(opts_.parallelChance / (1.0 - opts_.parallelChance), [this, a, d]() -> std::optional<Term> {
                auto l = gen(a, d);
                if (!l) return std::nullopt;
                auto r = gen(a, d);
                if (!r) return std::nullopt;
                return Term::par(Weighted{weight(), *l}, Weighted{weight(), *r});
            });

            offer(elim, [this, a, d]() -> std::optional<Term> {
                const Prop b = cut(a);
                auto f = gen(Prop::implies(b, a), d);
                if (!f) return std::nullopt;
                auto x = gen(b, d);
                if (!x) return std::nullopt;
                return Term::app(*f, *x);
            });
            offer(elim * 0.5, [this, a, d]() -> std::optional<Term> {
                const Prop b = cut(a);
                const Prop c = cut(a);
                auto s = gen(Prop::conj(b, c), d);
                if (!s) return std::nullopt;
                const std::string x = freshName();
                const std::string y = freshName();
                auto body = underBinders({{x, b}, {y, c}}, [&] { return gen(a, d); });
                if (!body) return std::nullopt;
                return Term::elimAnd(*s, x, y, *body);
            });
            for (TermKind k : {TermKind::ElimOr, TermKind::ElimSup, TermKind::ElimSupPar}) {
                offer(elim * 0.5, [this, a, d, k]() -> std::optional<Term> {
                    const Prop b = cut(a);
                    const Prop c = cut(a);
                    auto s = gen(k == TermKind::ElimOr ? Prop::disj(b, c) : Prop::sup(b, c), d);
                    if (!s) return std::nullopt;
                    const std::string x = freshName();
                    auto left = underBinders({{x, b}}, [&] { return gen(a, d); });
                    if (!left) return std::nullopt;
                    const std::string y = freshName();
                    auto right = underBinders({{y, c}}, [&] { return gen(a, d); });
                    if (!right) return std::nullopt;
                    if (k == TermKind::ElimOr) return Term::elimOr(*s, x, *left, y, *right);
                    if (k == TermKind::ElimSup) return Term::elimSup(*s, x, *left, y, *right);
                    return Term::elimSupPar(*s, x, *left, y, *right);
                });
            }
            if (inconsistent()) {
                offer(elim * 0.5, [this, a, d]() -> std::optional<Term> {
                    auto s = gen(Prop::bottom(), d);
                    if (!s) return std::nullopt;
                    return Term::elimBot(*s, a);
                });
            }
        }

        std::sort(options.begin(), options.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        for (auto& [key, option] : options) {
            const std::size_t sizeMark = sizeLeft_;
            const std::size_t counterMark = counter_;
            --sizeLeft_;
            if (auto t = option()) return t;
            sizeLeft_ = sizeMark;
            counter_ = counterMark;
        }
        return std::nullopt;
    }

    Rng& rng_;
    const GenOptions& opts_;
    std::size_t attempts_ = 0;
    std::size_t sizeLeft_ = 0;
    std::size_t counter_ = 0;
    std::vector<std::pair<std::string, Prop>> ctx_;
};

}  // namespace

Prop genProp(Rng& rng, std::size_t depth) {
    const double u = uniform01(rng);
    if (depth == 0) return u < 0.85 ? Prop::top() : Prop::bottom();
    if (u < 0.25) return genProp(rng, 0);
    static constexpr PropKind kinds[] = {PropKind::Implies, PropKind::And, PropKind::Or, PropKind::Sup};
    const PropKind k = kinds[static_cast<std::size_t>(uniform01(rng) * 4.0)];
    Prop l = genProp(rng, depth - 1);
    Prop r = genProp(rng, depth - 1);
    return Prop::binary(k, std::move(l), std::move(r));
}

Term genTypedTerm(Rng& rng, std::size_t maxDepth, std::optional<Prop> target, const GenOptions& options) {
    if (maxDepth == 0) throw Error(ErrorKind::GenerationFailed, "maxDepth must be at least 1");
    Generator g(rng, options);
    for (int tries = 0; tries < 64; ++tries) {
        const Prop a = target ? *target : genProp(rng, 1 + static_cast<std::size_t>(uniform01(rng) * 2.0));
        if (auto t = g.run(a, maxDepth)) return *t;
        if (target && a.kind() == PropKind::Bottom) break;
    }
    throw Error(ErrorKind::GenerationFailed,
                target ? "no closed proof of " + toString(*target) + " found" : "generation failed");
}

}  // namespace sup::oracle
