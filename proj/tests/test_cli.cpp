#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include <gtest/gtest.h>

#include "schurlab/battery.hpp"
#include "schurlab/cli.hpp"
#include "schurlab/report_json.hpp"

using namespace schurlab;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expected_code) {
    args.push_back("--json");
    args.push_back("-");
    const CliRun r = run(std::move(args));
    EXPECT_EQ(r.code, expected_code) << r.err;
    return Json::parse(r.out);
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(CliSchur, Examples) {
    CliRun r = run({"schur", "--partition", "2,0", "--vars", "2", "--method", "both"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "u1 + u2\ntableaux = bialternant\n");

    r = run({"schur", "--partition", "1,0", "--vars", "2"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "1\n");

    r = run({"schur", "--partition", "2,2", "--vars", "2"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out, "0\n");
}

TEST(CliSchur, MalformedInputExitsTwo) {
    EXPECT_EQ(run({"schur", "--partition", "2,x", "--vars", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"schur", "--partition", "-1,0", "--vars", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"schur", "--vars", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"schur", "--partition", "2,0", "--method", "magic"}).code, kExitUsage);
    EXPECT_EQ(run({"no-such-command"}).code, kExitUsage);
}

TEST(CliVerify, CauchyExample) {
    const Json j = run_json({"verify", "cauchy", "--n", "2", "--u", "1,2", "--v", "1,3", "--degree", "3"}, kExitOk);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_TRUE(j["match"].get<bool>());
    EXPECT_EQ(j["lhs_coeffs"], Json::array({"0", "2", "24", "194"}));
    EXPECT_EQ(j["rhs_coeffs"], j["lhs_coeffs"]);
    EXPECT_FALSE(j.contains("seed"));

    const CliRun r = run({"verify", "cauchy", "--n", "2", "--u", "1,2", "--v", "1,3", "--degree", "3"});
    EXPECT_TRUE(contains(r.out, "2*t + 24*t^2 + 194*t^3")) << r.out;
    EXPECT_TRUE(contains(r.out, "result: match"));
}

TEST(CliVerify, FrobeniusExample) {
    const Json j =
        run_json({"verify", "frobenius", "--n", "2", "--c", "2", "--u", "1,2", "--v", "1,3", "--degree", "2"}, kExitOk);
    EXPECT_EQ(j["lhs_coeffs"], Json::array({"0", "-2", "-24"}));
    EXPECT_EQ(j["extra_coeffs"]["tsymm"], j["lhs_coeffs"]);
}

TEST(CliVerify, RandomTsymmRecordsSeed) {
    const Json j = run_json({"verify", "tsymm", "--n", "3", "--random", "--seed", "7", "--degree", "8"}, kExitOk);
    EXPECT_EQ(j["prng"], "mt19937_64/rejection");
    EXPECT_EQ(j["seed"], 7);
    EXPECT_TRUE(j["vanishing_holds"].get<bool>());
    EXPECT_EQ(j["extra_coeffs"]["cauchy_binet"], j["lhs_coeffs"]);
    // degree >= n-1 with nonzero coefficients: the series is not identically zero
    bool nonzero = false;
    for (const auto& c : j["lhs_coeffs"]) nonzero = nonzero || c != "0";
    EXPECT_TRUE(nonzero);
}

TEST(CliVerify, PhornAndSymbolic) {
    const Json p = run_json({"verify", "phorn", "--n", "2", "--u", "1,2", "--v", "1,3", "--degree", "2"}, kExitOk);
    EXPECT_EQ(p["rhs_coeffs"], Json::array({"0", "2", "48"}));

    const CliRun s = run({"verify", "cauchy", "--n", "2", "--symbolic", "--degree", "2"});
    EXPECT_EQ(s.code, kExitOk) << s.err;
    EXPECT_TRUE(contains(s.out, "u1*v1")) << s.out;
}

TEST(CliVerify, BadInputAndBounds) {
    EXPECT_EQ(run({"verify", "cauchy", "--u", "1,2", "--v", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "cauchy", "--u", "1,2", "--v", "1,3", "--degree", "13"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "nonsense", "--u", "1", "--v", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "cauchy", "--n", "5", "--symbolic", "--degree", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "cauchy", "--n", "7", "--random"}).code, kExitUsage);
}

// Bounds are read once per process, so the override is exercised in a child process.
TEST(CliVerify, DimensionBoundFromEnvironment) {
    const std::string cmd = std::string(SCHURLAB_TOOL) + " verify cauchy --u 1,2,3 --v 1,2,3 --degree 4 >/dev/null 2>&1";
    const int low = std::system(("SCHURLAB_MAX_N=2 " + cmd).c_str());
    ASSERT_TRUE(WIFEXITED(low));
    EXPECT_EQ(WEXITSTATUS(low), kExitUsage);
    const int enough = std::system(("SCHURLAB_MAX_N=3 " + cmd).c_str());
    ASSERT_TRUE(WIFEXITED(enough));
    EXPECT_EQ(WEXITSTATUS(enough), kExitOk);
    const int raised = std::system((std::string(SCHURLAB_TOOL) +
                                    " verify cauchy --n 7 --random --degree 2 >/dev/null 2>&1; test $? -eq 2 && "
                                    "SCHURLAB_MAX_N=7 " + SCHURLAB_TOOL + " verify cauchy --n 7 --random --degree 2 >/dev/null 2>&1")
                                       .c_str());
    ASSERT_TRUE(WIFEXITED(raised));
    EXPECT_EQ(WEXITSTATUS(raised), kExitOk);
}

TEST(CliPreserve, Examples) {
    const Json sqrt3 = run_json({"preserve", "--power", "0.5", "--n", "3", "--a", "1", "--eps", "1", "--grid", "200"},
                                kExitMismatch);
    EXPECT_EQ(sqrt3["family"]["u"], Json::array({"1/2", "1/4", "1/8"}));
    EXPECT_EQ(sqrt3["grid_size"], 200);
    ASSERT_FALSE(sqrt3["violations"].empty());
    for (const auto& v : sqrt3["violations"])
        EXPECT_LT(v["min_eig_or_coeff"].get<double>(), v["threshold"].get<double>());
    EXPECT_EQ(sqrt3["conclusion"]["verdict"], "FAIL");

    EXPECT_EQ(run({"preserve", "--poly", "1,1,1", "--n", "3", "--a", "0", "--eps", "1"}).code, kExitOk);

    const CliRun horn = run({"preserve", "--poly", "1,1,-1,1,1", "--n", "3", "--unbounded"});
    EXPECT_EQ(horn.code, kExitMismatch);
    EXPECT_TRUE(contains(horn.out, "maclaurin sign rule (unbounded): FAIL at coefficient 2")) << horn.out;
}

TEST(CliPreserve, ExactReportUsesRationalStrings) {
    const Json j = run_json({"preserve", "--poly", "1,0,0,-1", "--n", "2", "--a", "0", "--eps", "1", "--grid", "20"},
                            kExitMismatch);
    EXPECT_EQ(j["psd_method"], "charpoly-exact");
    ASSERT_FALSE(j["violations"].empty());
    EXPECT_TRUE(j["violations"][0]["min_eig_or_coeff"].is_string());
    EXPECT_TRUE(j["violations"][0]["t"].is_string());
}

TEST(CliPreserve, SeriesFile) {
    const auto path = std::filesystem::temp_directory_path() / "schurlab_series_test.json";
    {
        std::ofstream f(path);
        f << R"({"base_point": "0", "coeffs": ["1", "1", "1/2", "1/6"], "polynomial": true})";
    }
    const Json j =
        run_json({"preserve", "--series-file", path.string(), "--n", "3", "--a", "0", "--grid", "30"}, kExitOk);
    EXPECT_TRUE(j["violations"].empty());
    std::filesystem::remove(path);

    EXPECT_EQ(run({"preserve", "--series-file", "/nonexistent/series.json", "--n", "2"}).code, kExitUsage);
}

TEST(CliPreserve, BadInput) {
    EXPECT_EQ(run({"preserve", "--n", "3"}).code, kExitUsage);
    EXPECT_EQ(run({"preserve", "--poly", "1,1", "--power", "2", "--n", "2"}).code, kExitUsage);
    EXPECT_EQ(run({"preserve", "--poly", "1,1", "--n", "2", "--u", "1/2,2"}).code, kExitUsage);
    EXPECT_EQ(run({"preserve", "--poly", "1,1", "--n", "2", "--eps", "0"}).code, kExitUsage);
    EXPECT_EQ(run({"preserve", "--power", "0.5", "--n", "2", "--a", "-1"}).code, kExitUsage);
}

TEST(CliAdmissible, Examples) {
    CliRun r = run({"admissible", "--profile", "exp", "--n", "2", "--tuple", "0,2"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(contains(r.out, "not admissible")) << r.out;

    r = run({"admissible", "--profile", "monomial:2", "--n", "2"});
    EXPECT_EQ(r.out, "ALL_ADMISSIBLE\n");

    r = run({"admissible", "--profile", "exp", "--n", "3"});
    EXPECT_EQ(r.out, "threshold (0,1,2), sum 3\n");

    r = run({"admissible", "--profile", "exp", "--n", "2", "--tuple", "0,1"});
    EXPECT_EQ(r.out, "admissible\n");
}

TEST(CliAdmissible, UndecidableExitsTwo) {
    const CliRun r = run({"admissible", "--profile", "1,0,0", "--n", "3"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_TRUE(contains(r.err, "undecidable")) << r.err;
    EXPECT_EQ(run({"admissible", "--profile", "1,0,0", "--n", "3", "--tail-zero"}).code, kExitOk);
}

TEST(CliJson, IdenticalConfigsGiveIdenticalBytes) {
    const std::vector<std::vector<std::string>> configs = {
        {"verify", "tsymm", "--n", "3", "--random", "--seed", "11", "--degree", "6", "--json", "-"},
        {"preserve", "--power", "0.5", "--n", "3", "--grid", "50", "--json", "-"},
        {"admissible", "--profile", "exp", "--n", "3", "--json", "-"},
        {"suite", "--scale", "smoke", "--seed", "3", "--json", "-"},
    };
    for (const auto& args : configs) {
        const CliRun a = run(args), b = run(args);
        EXPECT_EQ(a.code, b.code);
        EXPECT_FALSE(a.out.empty());
        EXPECT_EQ(a.out, b.out) << args[0];
    }
}

TEST(CliJson, WritesReportFile) {
    const auto path = std::filesystem::temp_directory_path() / "schurlab_report_test.json";
    const CliRun r = run({"verify", "cauchy", "--u", "1,2", "--v", "1,3", "--degree", "3", "--json", path.string()});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(contains(r.out, "result: match"));
    std::ifstream in(path);
    const Json j = Json::parse(in);
    EXPECT_EQ(j["identity"], "cauchy");
    std::filesystem::remove(path);
}

TEST(CliSuite, SmokeRunPasses) {
    const CliRun r = run({"suite", "--scale", "smoke", "--seed", "1"});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_TRUE(contains(r.out, "all criteria passed"));
    EXPECT_EQ(run({"suite", "--scale", "huge"}).code, kExitUsage);
}

TEST(Battery, CriterionIdsAreChecked) {
    EXPECT_THROW(run_criterion(0, Scale::smoke, 1), InvalidInput);
    EXPECT_THROW(run_criterion(kCriterionCount + 1, Scale::smoke, 1), InvalidInput);
    const auto r = run_criterion(7, Scale::smoke, 1);
    EXPECT_TRUE(r.passed) << r.detail;
    EXPECT_EQ(format_line(r).rfind("PASS  7 fitzgerald_horn", 0), 0U);
}

TEST(CliHelp, ExitsZero) {
    const CliRun r = run({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(contains(r.out, "preserve"));
}
