// Runs the fracdiff executable end to end.
#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

const fs::path kWork = fs::path(FRACDIFF_TEST_WORKDIR) / "cli";

int run(const std::string& args) {
    const std::string cmd = std::string("\"") + FRACDIFF_CLI + "\" " + args + " >" +
                            (kWork / "stdout.txt").string() + " 2>" +
                            (kWork / "stderr.txt").string();
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> lines(const fs::path& p) {
    std::vector<std::string> out;
    std::ifstream in(p);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

std::string coefficient_table(std::size_t m, double (*drift)(double)) {
    std::string s = "x,A,B,p\n";
    char buf[128];
    for (std::size_t i = 0; i <= m; ++i) {
        const double x = static_cast<double>(i) / static_cast<double>(m);
        std::snprintf(buf, sizeof buf, "%.17g,1,%.17g,0\n", x, drift(x));
        s += buf;
    }
    return s;
}

class Cli : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        fs::remove_all(kWork);
        fs::create_directories(kWork);
    }
    fs::path dir(const std::string& name) const { return kWork / name; }
};

TEST_F(Cli, ExampleOneWritesEverything) {
    ASSERT_EQ(run("example 1 --plots --out " + dir("ex1").string()), 0) << slurp(kWork / "stderr.txt");
    for (const char* tag : {"0.1", "0.3", "0.5"}) {
        const std::string t(tag);
        for (const std::string f :
             {"field_alpha" + t + ".csv", "norms_alpha" + t + ".csv", "report_alpha" + t + ".json",
              "lognorm_alpha" + t + ".svg", "surface_alpha" + t + ".svg",
              "error_vs_exact_alpha" + t + ".csv"}) {
            EXPECT_TRUE(fs::exists(dir("ex1") / f)) << f;
        }
    }
    EXPECT_FALSE(fs::exists(dir("ex1") / "error.json"));

    const auto field = lines(dir("ex1") / "field_alpha0.5.csv");
    ASSERT_EQ(field.size(), 22u);
    EXPECT_EQ(field[0].substr(0, 8), "t,u0,u1,");
    EXPECT_EQ(std::count(field[5].begin(), field[5].end(), ','), 81);
    EXPECT_EQ(lines(dir("ex1") / "norms_alpha0.5.csv").size(), 22u);
    EXPECT_EQ(lines(dir("ex1") / "error_vs_exact_alpha0.5.csv").size(), 22u);

    const auto j = nlohmann::json::parse(slurp(dir("ex1") / "report_alpha0.5.json"));
    for (const char* key : {"alpha", "N", "M", "T", "norms", "log_norms", "min_second_difference",
                            "is_log_convex", "kappa_fit", "b_sup_norm", "assumption_h"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_TRUE(j["assumption_h"].contains("feasible"));
    EXPECT_TRUE(j["assumption_h"].contains("smooth_flag"));
    EXPECT_EQ(j["alpha"], 0.5);
    EXPECT_EQ(j["N"], 20);
    EXPECT_EQ(j["M"], 80);
    EXPECT_EQ(j["norms"].size(), 21u);
    EXPECT_TRUE(j["is_log_convex"].get<bool>());
    EXPECT_NEAR(j["kappa_fit"].get<double>(), 1.0, 1e-12);
    EXPECT_EQ(j["b_sup_norm"], 0.0);

    const std::string svg = slurp(dir("ex1") / "lognorm_alpha0.5.svg");
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST_F(Cli, OutputIsDeterministic) {
    ASSERT_EQ(run("example 3 --alpha 0.3 --out " + dir("d1").string()), 0);
    ASSERT_EQ(run("example 3 --alpha 0.3 --out " + dir("d2").string()), 0);
    for (const char* f : {"field_alpha0.3.csv", "norms_alpha0.3.csv", "report_alpha0.3.json"}) {
        EXPECT_EQ(slurp(dir("d1") / f), slurp(dir("d2") / f)) << f;
    }
    const auto j = nlohmann::json::parse(slurp(dir("d1") / "report_alpha0.3.json"));
    EXPECT_FALSE(j["assumption_h"]["smooth_flag"].get<bool>());
}

TEST_F(Cli, ExampleTwoChecksSymmetrization) {
    ASSERT_EQ(run("example 2 --alpha 0.1,0.5 --out " + dir("ex2").string()), 0);
    const auto j = nlohmann::json::parse(slurp(dir("ex2") / "symm_check_alpha0.5.json"));
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_TRUE(fs::exists(dir("ex2") / "field_symm_alpha0.1.csv"));
    const auto r = nlohmann::json::parse(slurp(dir("ex2") / "report_alpha0.1.json"));
    EXPECT_NEAR(r["b_sup_norm"].get<double>(), 0.5, 1e-15);
}

TEST_F(Cli, CustomTableMatchesExampleOne) {
    write(dir("zero.csv"), coefficient_table(80, [](double) { return 0.0; }));
    ASSERT_EQ(run("example 1 --alpha 0.5 --out " + dir("ref").string()), 0);
    ASSERT_EQ(run("solve --coeffs " + dir("zero.csv").string() + " --alpha 0.5 --out " +
                  dir("custom").string()),
              0)
        << slurp(kWork / "stderr.txt");
    EXPECT_EQ(slurp(dir("ref") / "field_alpha0.5.csv"), slurp(dir("custom") / "field_alpha0.5.csv"));
    EXPECT_EQ(slurp(dir("ref") / "norms_alpha0.5.csv"), slurp(dir("custom") / "norms_alpha0.5.csv"));
}

TEST_F(Cli, SmoothDriftPotential) {
    write(dir("sin.csv"),
          coefficient_table(100, [](double x) { return std::sin(std::numbers::pi * x); }));
    ASSERT_EQ(run("solve --coeffs " + dir("sin.csv").string() + " --alpha 0.5 --out " +
                  dir("sin").string()),
              0);
    const auto j = nlohmann::json::parse(slurp(dir("sin") / "report_alpha0.5.json"));
    EXPECT_NEAR(j["b_sup_norm"].get<double>(), 1.0 / std::numbers::pi, 1e-4);
    EXPECT_TRUE(j["assumption_h"]["smooth_flag"].get<bool>());
}

TEST_F(Cli, ReportRewritesIdentically) {
    ASSERT_EQ(run("example 2 --alpha 0.3 --out " + dir("rep").string()), 0);
    const std::string before = slurp(dir("rep") / "report_alpha0.3.json");
    const std::string norms = slurp(dir("rep") / "norms_alpha0.3.csv");
    ASSERT_EQ(run("report " + dir("rep").string()), 0) << slurp(kWork / "stderr.txt");
    EXPECT_EQ(slurp(dir("rep") / "report_alpha0.3.json"), before);
    EXPECT_EQ(slurp(dir("rep") / "norms_alpha0.3.csv"), norms);
}

TEST_F(Cli, ConfigFileAndFlagPrecedence) {
    write(dir("run.toml"), "alpha = [0.2, 0.7]\nnt = 10\nnx = 40\n");
    ASSERT_EQ(run("--config " + dir("run.toml").string() + " example 1 --nt 30 --out " +
                  dir("cfg").string()),
              0)
        << slurp(kWork / "stderr.txt");
    EXPECT_TRUE(fs::exists(dir("cfg") / "field_alpha0.7.csv"));
    EXPECT_FALSE(fs::exists(dir("cfg") / "field_alpha0.1.csv"));
    const auto j = nlohmann::json::parse(slurp(dir("cfg") / "report_alpha0.2.json"));
    EXPECT_EQ(j["N"], 30);
    EXPECT_EQ(j["M"], 40);
}

TEST_F(Cli, MittagLefflerEval) {
    ASSERT_EQ(run("ml-eval --alpha 0.5 --z -1"), 0);
    const auto j = nlohmann::json::parse(slurp(kWork / "stdout.txt"));
    EXPECT_NEAR(j["value"].get<double>(), std::exp(1.0) * std::erfc(1.0), 1e-14);
}

TEST_F(Cli, ErrorsProduceJsonAndNonzeroExit) {
    std::string s = "x,A,B,p\n";
    for (int i = 0; i <= 10; ++i) {
        s += std::to_string(i / 10.0) + (i == 4 ? ",0,0,0\n" : ",1,0,0\n");
    }
    write(dir("zeroA.csv"), s);
    EXPECT_EQ(run("solve --coeffs " + dir("zeroA.csv").string() + " --out " + dir("errA").string()),
              4);
    const auto j = nlohmann::json::parse(slurp(dir("errA") / "error.json"));
    EXPECT_EQ(j["error"]["code"], "ellipticity");
    EXPECT_EQ(j["error"]["exit_status"], 4);

    write(dir("bad.csv"), "x,A,B,p\n0,1,0,0\n0.5,1,abc,0\n1,1,0,0\n");
    EXPECT_EQ(run("solve --coeffs " + dir("bad.csv").string() + " --out " + dir("errB").string()),
              8);
    EXPECT_NE(slurp(kWork / "stderr.txt").find("bad.csv:3:7"), std::string::npos);

    EXPECT_EQ(run("example 4 --out " + dir("errC").string()), 3);
    EXPECT_EQ(run("example 1 --alpha 1.5 --out " + dir("errD").string()), 1);
    EXPECT_NE(slurp(kWork / "stderr.txt").find("\"domain\""), std::string::npos);
    EXPECT_EQ(run("ml-eval --alpha 0.5"), 3);
    EXPECT_NE(slurp(kWork / "stderr.txt").find("\"argument\""), std::string::npos);
    EXPECT_EQ(run("solve --out " + dir("errE").string()), 3);
    EXPECT_NE(run("report " + dir("missing").string()), 0);
}

} // namespace
