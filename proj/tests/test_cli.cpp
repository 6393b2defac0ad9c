#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(TENSORWALK_CLI) + " " + args + " 2>/dev/null";
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return result;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST(Cli, SnSeparationCurve) {
    const auto r = run("sn-sep --n 3 --rmax 3");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out,
              "r,s_exact,s_float,route\n"
              "0,1/1,1,kernel+occupancy+closed+spectral\n"
              "1,1/1,1,kernel+occupancy+closed+spectral\n"
              "2,1/3,0.33333333333333331,kernel+occupancy+closed+spectral\n"
              "3,1/9,0.1111111111111111,kernel+occupancy+closed+spectral\n");
}

TEST(Cli, SnSeparationEdgeCases) {
    const auto four = run("sn-sep --n 4 --rmax 3");
    EXPECT_NE(four.out.find("\n3,5/8,0.625,"), std::string::npos);
    EXPECT_EQ(run("sn-sep --n 5 --rmax 0").out, "r,s_exact,s_float,route\n0,1/1,1,kernel+occupancy+closed+spectral\n");
    const auto large = run("sn-sep --n 40 --rmax 1");
    EXPECT_EQ(large.exit_code, 0);
    EXPECT_EQ(large.out, "r,s_exact,s_float,route\n0,1/1,1,closed\n1,1/1,1,closed\n");
}

TEST(Cli, GlSeparationCurve) {
    const auto r = run("gl-sep --n 2 --q 2 --rmax 3");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out,
              "r,s_exact,s_float,route,q\n"
              "0,1/1,1,closed+span+spectral,2\n"
              "1,1/1,1,closed+span+spectral,2\n"
              "2,5/8,0.625,closed+span+spectral,2\n"
              "3,11/32,0.34375,closed+span+spectral,2\n");
}

TEST(Cli, JsonCurve) {
    const auto r = run("gl-sep --n 2 --q 2 --rmax 2 --format json");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("\"s_exact\": \"5/8\""), std::string::npos);
    EXPECT_NE(r.out.find("\"q\": 2"), std::string::npos);
}

TEST(Cli, CrosscheckAllPass) {
    const auto sn = run("crosscheck --n 5");
    EXPECT_EQ(sn.exit_code, 0);
    EXPECT_EQ(sn.out.find("FAIL"), std::string::npos);
    EXPECT_NE(sn.out.find("separation-routes,pass"), std::string::npos);
    const auto gl = run("crosscheck --n 3 --q 4");
    EXPECT_EQ(gl.exit_code, 0);
    EXPECT_EQ(gl.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ProfileColumns) {
    const auto r = run("profile --n 128 --c 0");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out.rfind("n,c,r,s_exact,s_float,profile,scaled_error\n128,0,622,", 0), 0U);
}

TEST(Cli, SpectrumAndCharacterTable) {
    EXPECT_EQ(run("spectrum --n 4").out, "eigenvalue_exact,eigenvalue_float,multiplicity\n1/1,1,1\n1/2,0.5,1\n1/4,0.25,1\n0/1,0,2\n");
    EXPECT_EQ(run("spectrum --n 2 --q 2").out, "eigenvalue_exact,eigenvalue_float,multiplicity\n1/1,1,\n1/2,0.5,\n1/4,0.25,\n");
    EXPECT_EQ(run("chartable --n 3").out,
              "lambda,\"[3]\",\"[2,1]\",\"[1,1,1]\"\n\"[3]\",1,1,1\n\"[2,1]\",-1,0,2\n\"[1,1,1]\",1,-1,1\n");
}

TEST(Cli, OccupancyRecordsAndReproducibility) {
    const std::string args = "occupancy --n 4 --rmax 6 --samples 20000 --seed 99 --streams 3";
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find("false"), std::string::npos);
    EXPECT_NE(a.out, run("occupancy --n 4 --rmax 6 --samples 20000 --seed 100 --streams 3").out);
    const auto span = run("occupancy --n 3 --rmax 4 --q 3 --samples 20000 --format json");
    EXPECT_EQ(span.exit_code, 0);
    EXPECT_EQ(span.out, run("occupancy --n 3 --rmax 4 --q 3 --samples 20000 --format json").out);
}

TEST(Cli, WritesToFile) {
    const std::string path = ::testing::TempDir() + "tensorwalk_cli_out.csv";
    const auto r = run("gl-sep --n 1 --q 3 --rmax 1 --out " + path);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(ss.str(), "r,s_exact,s_float,route,q\n0,1/1,1,closed+span+spectral,3\n1,1/3,0.33333333333333331,closed+span+spectral,3\n");
}

TEST(Cli, UsageErrorsExitTwo) {
    EXPECT_EQ(run("").exit_code, 2);
    EXPECT_EQ(run("sn-sep").exit_code, 2);
    EXPECT_EQ(run("sn-sep --n 3 --format xml").exit_code, 2);
    EXPECT_EQ(run("sn-sep --n 600").exit_code, 2);
    EXPECT_EQ(run("gl-sep --n 1 --q 2").exit_code, 2);
    EXPECT_EQ(run("occupancy --n 2 --q 4").exit_code, 2);
    EXPECT_EQ(run("sn-tv --n 11").exit_code, 2);
    EXPECT_EQ(run("bogus").exit_code, 2);
    EXPECT_EQ(run("--help").exit_code, 0);
}

TEST(Cli, GuardOverrideByEnvironment) {
    const std::string cmd = std::string("TENSORWALK_MAX_N=11 ") + TENSORWALK_CLI + " spectrum --n 11 2>&1 >/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::array<char, 512> buf{};
    std::string err;
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) err.append(buf.data(), got);
    pclose(pipe);
    EXPECT_EQ(err.find("warning"), std::string::npos);  // spectrum never builds a table
    const std::string tv = std::string("TENSORWALK_MAX_N=11 ") + TENSORWALK_CLI + " sn-tv --n 11 --rmax 0 2>&1";
    pipe = popen(tv.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string both;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) both.append(buf.data(), got);
    EXPECT_EQ(WEXITSTATUS(pclose(pipe)), 0);
    EXPECT_NE(both.find("warning: TENSORWALK_MAX_N=11"), std::string::npos);
    EXPECT_NE(both.find("0,39916799/39916800,"), std::string::npos) << both;
}
