#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "sup/cli/commands.hpp"
#include "sup/oracle/stats.hpp"

namespace sup::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result sup(std::vector<std::string> args) {
    args.insert(args.begin(), "sup");
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string example(const char* name) { return (fs::path(SUP_EXAMPLES_DIR) / name).string(); }

class TempFile {
public:
    explicit TempFile(const std::string& text) {
        static int counter = 0;
        path_ = fs::temp_directory_path() / ("sup_cli_test_" + std::to_string(counter++) + ".sup");
        std::ofstream(path_) << text;
    }
    ~TempFile() { fs::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    fs::path path_;
};

TEST(Cli, DemoDeutsch) {
    EXPECT_EQ(sup({"demo", "deutsch", "--fn", "const0"}).out, "false : 1.0  => constant\n");
    EXPECT_EQ(sup({"demo", "deutsch", "--fn", "const1"}).out, "false : 1.0  => constant\n");
    EXPECT_EQ(sup({"demo", "deutsch", "--fn", "id"}).out, "true : 1.0  => balanced\n");
    const Result r = sup({"demo", "deutsch", "--fn", "not"});
    EXPECT_EQ(r.code, Ok);
    EXPECT_EQ(r.out, "true : 1.0  => balanced\n");
    EXPECT_EQ(sup({"demo", "deutsch", "--fn", "maybe"}).code, UsageError);
}

TEST(Cli, DistOfMeasurement) {
    const Result r = sup({"dist", example("measurement.sup"), "--def", "coin"});
    EXPECT_EQ(r.code, Ok);
    EXPECT_EQ(r.out, "false : 0.5\ntrue : 0.5\n");
    EXPECT_EQ(sup({"dist", example("measurement.sup"), "--def", "biased"}).out,
              "true : 0.64000000000000012\nfalse : 0.35999999999999999\n");
}

TEST(Cli, DistIsReproducible) {
    const Result a = sup({"dist", example("measurement.sup"), "--def", "collapsed"});
    const Result b = sup({"dist", example("measurement.sup"), "--def", "collapsed"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, "<false, 1 . * + 0 . *> : 0.5\n<true, 0 . * + 1 . *> : 0.5\n");
}

TEST(Cli, Sample) {
    const Result r = sup({"sample", example("measurement.sup"), "--def", "coin", "--samples", "10000", "--seed", "7"});
    ASSERT_EQ(r.code, Ok) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        if (line.rfind("chi-square : ", 0) == 0) {
            EXPECT_NE(line.find("(df 1, p = "), std::string::npos) << line;
            continue;
        }
        const auto colon = line.rfind(" : ");
        ASSERT_NE(colon, std::string::npos);
        const std::string term = line.substr(0, colon);
        EXPECT_TRUE(term == "false" || term == "true") << line;
        const double freq = std::stod(line.substr(colon + 3));
        EXPECT_TRUE(oracle::withinSigma(static_cast<std::size_t>(freq * 10000 + 0.5), 10000, 0.5)) << line;
        ++rows;
    }
    EXPECT_EQ(rows, 2u);
    EXPECT_EQ(r.out, sup({"sample", example("measurement.sup"), "--def", "coin", "--samples", "10000", "--seed",
                          "7"})
                         .out);
}

TEST(Cli, Check) {
    const Result r = sup({"check", example("plain.sup")});
    EXPECT_EQ(r.code, Ok);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "swap : T /\\ F -> F /\\ T");
    EXPECT_EQ(sup({"--unicode", "check", example("plain.sup")}).out.substr(0, 18), "swap : ⊤ ∧ ⊥");
}

TEST(Cli, CheckPrelude) {
    const Result r = sup({"check", SUP_PRELUDE_PATH});
    EXPECT_EQ(r.code, Ok) << r.err;
    EXPECT_NE(r.out.find("deutsch : (T \\/ T -> T \\/ T) -> T \\/ T\n"), std::string::npos);
}

TEST(Cli, ExamplesCheck) {
    for (const auto& entry : fs::directory_iterator(SUP_EXAMPLES_DIR)) {
        const Result r = sup({"check", entry.path().string()});
        EXPECT_EQ(r.code, Ok) << entry.path() << ": " << r.err;
    }
}

TEST(Cli, Run) {
    EXPECT_EQ(sup({"run", example("plain.sup"), "--def", "together"}).out, "<*, *>\n");
    EXPECT_EQ(sup({"run", example("measurement.sup"), "--def", "collapsed", "--policy", "left"}).out,
              "<false, 1 . * + 0 . *>\n");
    EXPECT_EQ(sup({"run", example("measurement.sup"), "--def", "collapsed", "--policy", "right"}).out,
              "<true, 0 . * + 1 . *>\n");
    EXPECT_EQ(sup({"run", example("basis_change.sup"), "--def", "in_minus_basis"}).out,
              "0.7071067811865476 . * + -0.7071067811865476 . *\n");
    const Result a = sup({"run", example("measurement.sup"), "--def", "coin", "--seed", "3"});
    EXPECT_EQ(a.out, sup({"run", example("measurement.sup"), "--def", "coin", "--seed", "3"}).out);
}

TEST(Cli, TypeErrorsExitOne) {
    TempFile f("def bad : T /\\ T = *\n");
    const Result r = sup({"check", f.path()});
    EXPECT_EQ(r.code, InputError);
    EXPECT_EQ(r.err.rfind("error: TypeError: 1:5: bad: Mismatch", 0), 0u) << r.err;
    EXPECT_EQ(sup({"run", f.path(), "--def", "bad"}).code, InputError);
}

TEST(Cli, ParseErrorsExitOne) {
    TempFile f("def p : T = <*,\n");
    const Result r = sup({"check", f.path()});
    EXPECT_EQ(r.code, InputError);
    EXPECT_NE(r.err.find("ParseError: 2:1"), std::string::npos) << r.err;
    TempFile g("def p : T \\/ T = case_sup(2 . * + *, [x] false, [y] true)\n");
    EXPECT_EQ(sup({"check", g.path()}).code, InputError);
}

TEST(Cli, StepLimitExitsTwo) {
    const Result r = sup({"run", example("deutsch.sup"), "--def", "zero", "--max-steps", "3"});
    EXPECT_EQ(r.code, LimitError);
    EXPECT_NE(r.err.find("StepLimitExceeded"), std::string::npos);
}

TEST(Cli, UsageErrorsExitThree) {
    EXPECT_EQ(sup({}).code, UsageError);
    EXPECT_EQ(sup({"frobnicate"}).code, UsageError);
    EXPECT_EQ(sup({"check"}).code, UsageError);
    EXPECT_EQ(sup({"check", "/nonexistent/file.sup"}).code, UsageError);
    EXPECT_EQ(sup({"dist", example("plain.sup")}).code, UsageError);
    EXPECT_EQ(sup({"dist", example("plain.sup"), "--def", "missing"}).code, UsageError);
    EXPECT_EQ(sup({"run", example("plain.sup"), "--def", "swap", "--policy", "middle"}).code, UsageError);
    EXPECT_EQ(sup({"sample", example("measurement.sup"), "--def", "coin", "--samples", "0"}).code, UsageError);
}

TEST(Cli, Help) {
    const Result r = sup({"--help"});
    EXPECT_EQ(r.code, Ok);
    EXPECT_NE(r.out.find("dist"), std::string::npos);
}

TEST(Cli, ColoredDiagnostics) {
    ::setenv("SUP_COLOR", "1", 1);
    const Result colored = sup({"check", "/nonexistent/file.sup"});
    ::setenv("SUP_COLOR", "0", 1);
    const Result plain = sup({"check", "/nonexistent/file.sup"});
    ::unsetenv("SUP_COLOR");
    EXPECT_EQ(colored.err.rfind("\x1b[", 0), 0u);
    EXPECT_EQ(plain.err.rfind("error: ", 0), 0u);
}

TEST(Cli, ProbabilityFormat) {
    EXPECT_EQ(formatProbability(1.0), "1.0");
    EXPECT_EQ(formatProbability(0.5), "0.5");
    EXPECT_EQ(formatProbability(0.1), "0.10000000000000001");
    EXPECT_EQ(formatProbability(1e-20), "9.9999999999999995e-21");
}

}  // namespace
}  // namespace sup::cli
