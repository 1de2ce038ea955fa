#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "support.hpp"

namespace pitm::test {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        root_ = fs::temp_directory_path() /
                ("pitm_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(root_);
        fs::create_directories(root_);
    }
    void TearDown() override { fs::remove_all(root_); }

    int run(std::vector<std::string> args) {
        out_.str("");
        err_.str("");
        return cli::run(args, out_, err_);
    }

    std::string dir(const std::string& name) const { return (root_ / name).string(); }

    static std::string read(const fs::path& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }

    std::string write(const std::string& name, const std::string& content) const {
        std::ofstream(root_ / name) << content;
        return (root_ / name).string();
    }

    fs::path root_;
    std::ostringstream out_;
    std::ostringstream err_;
};

const char* kCaseOneConfig = R"({
  "problem": {"a": "5", "b": "2", "c": "-1", "n": 2, "phi": "v", "N": 8, "K": 8}
})";

TEST_F(CliTest, CaseWritesDumps) {
    ASSERT_EQ(run({"case", "I", "--order", "8", "--iters", "8", "--out", dir("I")}), 0) << err_.str();
    const std::string increments = read(root_ / "I" / "increments.txt");
    EXPECT_NE(increments.find("[mu_1]\nt^0: (0)\nt^1: (2*v + v^2)\n"), std::string::npos);
    EXPECT_TRUE(fs::exists(root_ / "I" / "totals.txt"));
    EXPECT_NE(read(root_ / "I" / "verify.txt").find("agree through t^8"), std::string::npos);
    EXPECT_FALSE(fs::exists(root_ / "I" / "sdomain.txt"));
}

TEST_F(CliTest, CaseTwoFirstOrder) {
    ASSERT_EQ(run({"case", "II", "--order", "1", "--iters", "1", "--out", dir("II"), "--sdomain"}), 0);
    EXPECT_NE(read(root_ / "II" / "increments.txt").find("\nt^1: (2*v + -3*v^2)\n"), std::string::npos);
    EXPECT_TRUE(fs::exists(root_ / "II" / "sdomain.txt"));
}

TEST_F(CliTest, CaseThreeInitialValueOnly) {
    ASSERT_EQ(run({"case", "III", "--order", "0", "--iters", "0", "--out", dir("III")}), 0);
    const std::string text = read(root_ / "III" / "increments.txt");
    EXPECT_NE(text.find("[mu_0]\nt^0: (1/3*sqrt(6)*v)/(1 + v)\n"), std::string::npos);
    EXPECT_EQ(text.find("[mu_1]"), std::string::npos);
}

TEST_F(CliTest, ConfigMatchesPreset) {
    const std::string config = write("case1.json", kCaseOneConfig);
    ASSERT_EQ(run({"case", "I", "--out", dir("preset")}), 0);
    ASSERT_EQ(run({"solve", config, "--out", dir("config")}), 0) << err_.str();
    for (const char* file : {"increments.txt", "totals.txt", "verify.txt"}) {
        EXPECT_EQ(read(root_ / "preset" / file), read(root_ / "config" / file)) << file;
    }
}

TEST_F(CliTest, ConfigErrors) {
    EXPECT_EQ(run({"solve", write("a.json", R"({"problem": {"a": "0", "b": "2", "c": "-1", "n": 2, "phi": "v", "N": 2, "K": 2}})"),
                   "--out", dir("a")}),
              2);
    EXPECT_NE(err_.str().find("r > 0"), std::string::npos);
    EXPECT_EQ(run({"solve", write("k.json", R"({"problem": {"a": "1", "b": "2", "c": "-1", "n": 2, "phi": "v", "N": 2, "K": 3}})"),
                   "--out", dir("k")}),
              2);
    EXPECT_EQ(run({"solve", write("syntax.json", "{\n  \"problem\": {,\n}"), "--out", dir("s")}), 2);
    EXPECT_NE(err_.str().find("line 2"), std::string::npos);
    EXPECT_EQ(run({"solve", write("field.json", R"({"problem": {"a": 0.5, "b": "2", "c": "-1", "n": 2, "phi": "v", "N": 2, "K": 2}})"),
                   "--out", dir("f")}),
              2);
    EXPECT_NE(err_.str().find("problem.a"), std::string::npos);
    EXPECT_EQ(run({"solve", write("extra.json", R"({"problem": {"a": "1", "b": "2", "c": "-1", "n": 2, "phi": "v", "N": 2, "K": 2, "q": 1}})"),
                   "--out", dir("e")}),
              2);
    EXPECT_NE(err_.str().find("problem.q"), std::string::npos);
    EXPECT_EQ(run({"solve", dir("missing.json")}), 2);
}

TEST_F(CliTest, ConfigSourceTerm) {
    const cli::RunConfig config = cli::parse_run_config(
        R"({"problem": {"a": "1", "b": "0", "c": "0", "n": 2, "phi": "0", "source": ["0", "1"], "N": 3, "K": 3},
            "lambda_value": "1/4"})");
    EXPECT_DOUBLE_EQ(config.lambda_value, 0.25);
    ASSERT_TRUE(config.problem.source.has_value());
    EXPECT_EQ(solve(config.problem).solution(), TimeSeries::monomial(elem("1/2"), 2, 3));
}

TEST_F(CliTest, InvalidArguments) {
    EXPECT_EQ(run({"case", "IV"}), 2);
    EXPECT_EQ(run({"case", "I", "--order", "2", "--iters", "3", "--out", dir("x")}), 2);
    EXPECT_EQ(run({"case", "I", "--order", "two"}), 2);
    EXPECT_EQ(run({"frobnicate"}), 2);
    EXPECT_EQ(run({}), 2);
    EXPECT_EQ(run({"--help"}), 0);
    EXPECT_NE(out_.str().find("verify"), std::string::npos);
}

TEST_F(CliTest, VerifyCaseOne) {
    ASSERT_EQ(run({"verify", "I", "--order", "8", "--iters", "8", "--lambda", "1/10", "--out", dir("v")}), 0)
        << err_.str();
    const std::string report = read(root_ / "v" / "verify.txt");
    EXPECT_NE(report.find("PASS oracle: exact Taylor coefficients agree through t^8"), std::string::npos);
    EXPECT_NE(report.find("DIFF t^2 v^2: published 1, computed 3"), std::string::npos);
    EXPECT_NE(report.find("DIFF t^2 v^3: published 0, computed 1"), std::string::npos);
}

TEST_F(CliTest, VerifyCorruptedFixture) {
    const std::string golden = write("bad.txt", to_string(exact_taylor_case1(8)).replace(
                                                     to_string(exact_taylor_case1(8)).find("4/3*v"), 5, "5/3*v"));
    EXPECT_EQ(run({"verify", "I", "--golden", golden, "--out", dir("g")}), 1);
    EXPECT_NE(err_.str().find("t^3, coefficient of v^1"), std::string::npos);
    EXPECT_EQ(run({"verify", "I", "--golden", dir("nope.txt"), "--out", dir("g")}), 2);
    EXPECT_EQ(run({"verify", "I", "--substeps", "-1", "--out", dir("g")}), 2);
}

TEST_F(CliTest, VerifyCaseTwoFlagsDefect) {
    ASSERT_EQ(run({"verify", "II", "--out", dir("v2")}), 0);
    EXPECT_NE(read(root_ / "v2" / "verify.txt").find("DEFECT published closed form of case-II"), std::string::npos);
}

TEST_F(CliTest, VerifyConfig) {
    const std::string config = write("forced.json", R"({
  "problem": {"a": "1", "b": "-1", "c": "1", "n": 2, "phi": "v", "source": ["1", "v^2"], "N": 5, "K": 5},
  "grid": {"t_max": 0.2, "nt": 21}, "lambda_value": 0.5, "t_trust": 0.2})");
    ASSERT_EQ(run({"verify", config, "--out", dir("vc")}), 0) << err_.str();
    EXPECT_NE(out_.str().find("SKIP oracle"), std::string::npos);
    EXPECT_NE(out_.str().find("# lambda: 0.5"), std::string::npos);
    EXPECT_EQ(run({"verify", config, "--t-trust", "0.2", "--tmax", "0.5", "--nt", "51", "--out", dir("vc")}), 0);
    EXPECT_EQ(run({"verify", config, "--tmax", "0.5", "--nt", "51", "--t-trust", "0.5", "--out", dir("vc")}), 1);
}

TEST_F(CliTest, PlotCaseOne) {
    ASSERT_EQ(run({"plot", "I", "--lambda", "0.1", "--out", dir("p")}), 0) << err_.str();
    std::istringstream csv(read(root_ / "p" / "solution.csv"));
    std::string line;
    std::getline(csv, line);
    EXPECT_EQ(line, "x,t,u");
    int rows = 0;
    while (std::getline(csv, line)) {
        ++rows;
        if (rows <= 101) EXPECT_EQ(line.substr(line.rfind(',') + 1), "0.10000000000000001");
    }
    EXPECT_EQ(rows, 101 * 101);
    const std::string script = read(root_ / "p" / "plot.gp");
    EXPECT_NE(script.find("lambda = 0.1"), std::string::npos);
    EXPECT_NE(script.find("x in [-5, 5], t in [0, 0.5], grid 101 x 101"), std::string::npos);
    EXPECT_NE(script.find("splot exact(x, y)"), std::string::npos);
}

TEST_F(CliTest, PlotLambdaAxes) {
    ASSERT_EQ(run({"plot", "II", "--axes", "lambda-t", "--xmin", "0", "--xmax", "1", "--nx", "11", "--nt", "3",
                   "--out", dir("l")}),
              0);
    const std::string csv = read(root_ / "l" / "solution.csv");
    EXPECT_EQ(csv.rfind("lambda,t,u\n0,0,0\n0.10000000000000001,0,0.10000000000000001\n", 0), 0u);
    EXPECT_EQ(run({"plot", "III", "--axes", "lambda-t", "--out", dir("l3")}), 2);
}

TEST_F(CliTest, PlotCaseThreeOrigin) {
    ASSERT_EQ(run({"plot", "III", "--order", "6", "--xmin", "0", "--xmax", "0", "--nx", "1", "--out", dir("p3")}), 0);
    std::istringstream csv(read(root_ / "p3" / "solution.csv"));
    std::string header, first;
    std::getline(csv, header);
    std::getline(csv, first);
    EXPECT_EQ(first.substr(0, 4), "0,0,");
    EXPECT_NEAR(std::stod(first.substr(4)), 0.40824829, 1e-8);
}

TEST_F(CliTest, PlotRejectsEmptyGrid) {
    EXPECT_EQ(run({"plot", "I", "--nx", "0", "--out", dir("e")}), 2);
    EXPECT_EQ(run({"plot", "I", "--nt", "0", "--out", dir("e")}), 2);
}

TEST_F(CliTest, PlotSingularityReportsPoint) {
    const std::string config =
        write("pole.json", R"j({"problem": {"a": "1", "b": "0", "c": "0", "n": 2, "phi": "1/(1 - v)", "N": 2, "K": 2}})j");
    EXPECT_EQ(run({"plot", config, "--lambda", "1", "--out", dir("pole")}), 1);
    EXPECT_NE(err_.str().find("x = -5"), std::string::npos) << err_.str();
    EXPECT_NE(err_.str().find("t = 0"), std::string::npos) << err_.str();
}

TEST_F(CliTest, Deterministic) {
    const std::string config = write("case1.json", kCaseOneConfig);
    const std::vector<std::vector<std::string>> commands = {
        {"case", "III", "--order", "4", "--sdomain"},
        {"solve", config, "--sdomain"},
        {"verify", "I", "--nx", "101", "--nt", "101"},
        {"plot", "III", "--nx", "21", "--nt", "21"},
    };
    int k = 0;
    for (auto args : commands) {
        const std::string a = dir("a" + std::to_string(k)), b = dir("b" + std::to_string(k));
        ++k;
        auto with_a = args, with_b = args;
        with_a.insert(with_a.end(), {"--out", a});
        with_b.insert(with_b.end(), {"--out", b});
        ASSERT_EQ(run(with_a), 0) << err_.str();
        ASSERT_EQ(run(with_b), 0);
        for (const auto& entry : fs::directory_iterator(a)) {
            EXPECT_EQ(read(entry.path()), read(fs::path(b) / entry.path().filename())) << entry.path();
        }
    }
}

}  // namespace
}  // namespace pitm::test
