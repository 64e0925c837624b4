#include "sup/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <ostream>
#include <string_view>

#include <CLI11.hpp>

#include "sup/binding.hpp"
#include "sup/oracle/stats.hpp"
#include "sup/reduction.hpp"
#include "sup/stdlib.hpp"
#include "sup/syntax.hpp"
#include "sup/typecheck.hpp"

namespace sup::cli {

std::string formatProbability(double p) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", p);
    std::string s = buf;
    if (std::isfinite(p) && s.find_first_of(".e") == std::string::npos) s += ".0";
    return s;
}

namespace {

struct UsageProblem {
    std::string message;
};

struct Options {
    bool unicode = false;
    std::string file;
    std::string def;
    std::string policy = "sample";
    std::uint64_t seed = 0;
    std::size_t maxSteps = 1'000'000;
    std::size_t samples = 10'000;
    std::string fn;
};

bool colorEnabled() {
    const char* v = std::getenv("SUP_COLOR");
    return v != nullptr && std::string_view(v) == "1";
}

void diagnose(std::ostream& err, const std::string& message) {
    if (colorEnabled()) {
        err << "\x1b[1;31merror:\x1b[0m " << message << '\n';
    } else {
        err << "error: " << message << '\n';
    }
}

SourceFile load(const std::string& path) {
    if (!std::filesystem::is_regular_file(path)) throw UsageProblem{"cannot read '" + path + "'"};
    return loadSource(path);
}

// Free names that match a prelude definition resolve to it.
Term withPrelude(const Term& t) {
    Substitution prelude;
    for (const auto& name : freeVars(t)) {
        for (const auto& d : stdlib::definitions()) {
            if (d.name == name) prelude.emplace(name, d.body);
        }
    }
    return prelude.empty() ? t : substitute(t, prelude);
}

struct Program {
    SourceFile source;
    Term term;
    Prop type;
};

Program loadDefinition(const Options& o) {
    Program p{load(o.file), {}, {}};
    const Definition* d = p.source.find(o.def);
    if (d == nullptr) throw UsageProblem{"no definition named '" + o.def + "' in " + o.file};
    p.term = withPrelude(d->elaborated);
    if (auto e = check(Context{}, p.term, d->proposition)) {
        throw Error(ErrorKind::Type, o.def + ": " + e->describe());
    }
    p.type = d->proposition;
    return p;
}

Config configFor(Mode mode, Nondet nondet, const Options& o) {
    Config c = mode == Mode::Scalar ? Config::quantum(nondet) : Config{};
    c.nondet = nondet;
    c.seed = o.seed;
    c.maxSteps = o.maxSteps;
    return c;
}

PrintOptions printing(Mode mode, const Options& o) { return PrintOptions{mode, o.unicode}; }

int cmdCheck(const Options& o, std::ostream& out) {
    const SourceFile src = load(o.file);
    for (const auto& d : src.definitions) {
        const Term t = withPrelude(d.elaborated);
        if (auto e = check(Context{}, t, d.proposition)) {
            throw Error(ErrorKind::Type, std::to_string(d.where.line) + ":" + std::to_string(d.where.column) +
                                             ": " + d.name + ": " + e->describe());
        }
        out << d.name << " : " << (o.unicode ? toUnicode(d.proposition) : toString(d.proposition)) << '\n';
    }
    return Ok;
}

int cmdRun(const Options& o, std::ostream& out) {
    const Program p = loadDefinition(o);
    Nondet nondet = Nondet::Sample;
    if (o.policy == "left") nondet = Nondet::ForceLeft;
    if (o.policy == "right") nondet = Nondet::ForceRight;
    const Term nf = normalize(p.term, configFor(p.source.mode, nondet, o));
    out << printTerm(nf, printing(p.source.mode, o)) << '\n';
    return Ok;
}

void printDistribution(const Distribution& dist, Mode mode, const Options& o, std::ostream& out,
                       const std::string& firstSuffix = {}) {
    bool first = true;
    for (const auto& e : dist.sorted()) {
        out << printTerm(e.term, printing(mode, o)) << " : " << formatProbability(e.probability);
        if (first) out << firstSuffix;
        out << '\n';
        first = false;
    }
}

int cmdDist(const Options& o, std::ostream& out) {
    const Program p = loadDefinition(o);
    const Distribution dist = enumerate(p.term, configFor(p.source.mode, Nondet::EnumerateAll, o));
    printDistribution(dist, p.source.mode, o, out);
    return Ok;
}

int cmdSample(const Options& o, std::ostream& out) {
    if (o.samples == 0) throw UsageProblem{"--samples must be positive"};
    const Program p = loadDefinition(o);
    const Config cfg = configFor(p.source.mode, Nondet::Sample, o);
    Rng rng(o.seed);
    std::map<std::string, std::pair<Term, std::size_t>> seen;
    for (std::size_t i = 0; i < o.samples; ++i) {
        const Term nf = normalize(p.term, cfg, rng);
        auto [it, fresh] = seen.try_emplace(canonicalKey(nf), nf, 0);
        ++it->second.second;
    }
    std::vector<std::pair<std::string, std::pair<Term, std::size_t>>> rows(seen.begin(), seen.end());
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.second.second > b.second.second; });
    oracle::Counts counts;
    for (const auto& [key, row] : rows) {
        counts[key] = row.second;
        out << printTerm(row.first, printing(p.source.mode, o)) << " : "
            << formatProbability(static_cast<double>(row.second) / static_cast<double>(o.samples)) << '\n';
    }
    const Distribution expected = enumerate(p.term, configFor(p.source.mode, Nondet::EnumerateAll, o));
    const auto chi = oracle::chiSquareTest(counts, expected);
    out << "chi-square : " << formatProbability(chi.statistic) << " (df " << chi.degreesOfFreedom
        << ", p = " << formatProbability(chi.pValue) << ")\n";
    return Ok;
}

int cmdDeutsch(const Options& o, std::ostream& out) {
    static const std::map<std::string, stdlib::BitFunction> functions = {
        {"const0", stdlib::BitFunction::Const0},
        {"const1", stdlib::BitFunction::Const1},
        {"id", stdlib::BitFunction::Identity},
        {"not", stdlib::BitFunction::Negation},
    };
    const Term program = stdlib::deutsch(stdlib::bitFunction(functions.at(o.fn)));
    const Distribution dist = enumerate(program, configFor(Mode::Scalar, Nondet::EnumerateAll, o));
    const auto top = dist.sorted().front();
    const bool constant = alphaEq(top.term, stdlib::bit(false));
    printDistribution(dist, Mode::Scalar, o, out, constant ? "  => constant" : "  => balanced");
    return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Interpreter for the sup proof-term calculus"};
    app.name(args.empty() ? "sup" : std::filesystem::path(args[0]).filename().string());
    app.require_subcommand(1);
    Options o;
    app.add_flag("--unicode", o.unicode, "Print with Unicode symbols");

    auto* check = app.add_subcommand("check", "Typecheck every definition of FILE");
    check->add_option("file", o.file, "Source file")->required();

    auto addDef = [&](CLI::App* cmd) {
        cmd->add_option("file", o.file, "Source file")->required();
        cmd->add_option("--def", o.def, "Definition to evaluate")->required();
        cmd->add_option("--max-steps", o.maxSteps, "Reduction step limit")->check(CLI::PositiveNumber);
    };
    auto* run = app.add_subcommand("run", "Normalize a definition");
    addDef(run);
    run->add_option("--policy", o.policy, "case_sup choice")->check(CLI::IsMember({"sample", "left", "right"}));
    run->add_option("--seed", o.seed, "Seed for --policy sample");

    auto* dist = app.add_subcommand("dist", "Exact distribution of normal forms");
    addDef(dist);

    auto* sample = app.add_subcommand("sample", "Empirical frequencies and chi-square against dist");
    addDef(sample);
    sample->add_option("--samples", o.samples, "Number of draws")->check(CLI::PositiveNumber);
    sample->add_option("--seed", o.seed, "Root seed");

    auto* demo = app.add_subcommand("demo", "Built-in demonstrations");
    demo->require_subcommand(1);
    auto* deutsch = demo->add_subcommand("deutsch", "Deutsch's algorithm on a function B -> B");
    deutsch->add_option("--fn", o.fn, "const0, const1, id or not")
        ->required()
        ->check(CLI::IsMember({"const0", "const1", "id", "not"}));

    std::vector<std::string> rest(args.rbegin(), args.rend());
    if (!rest.empty()) rest.pop_back();
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return UsageError;
    }

    try {
        if (*check) return cmdCheck(o, out);
        if (*run) return cmdRun(o, out);
        if (*dist) return cmdDist(o, out);
        if (*sample) return cmdSample(o, out);
        if (*deutsch) return cmdDeutsch(o, out);
    } catch (const UsageProblem& e) {
        diagnose(err, e.message);
        return UsageError;
    } catch (const Error& e) {
        diagnose(err, std::string(errorKindName(e.kind())) + ": " + e.what());
        switch (e.kind()) {
        case ErrorKind::StepLimitExceeded:
        case ErrorKind::GraphBudgetExceeded: return LimitError;
        default: return InputError;
        }
    }
    return UsageError;
}

}  // namespace sup::cli
