#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gotzmann::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Growth) {
  auto r = run({"growth", "--ring", "3:inf,inf,inf", "--d", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "8\n");
  r = run({"growth", "--ring", "3:2,inf,inf", "--t", "2", "--d", "3", "--oracle"});
  EXPECT_EQ(r.out, "5\noracle 5 (agrees)\n");
  r = run({"growth", "--ring", "3:2,inf,inf", "--d", "3"});
  EXPECT_EQ(r.code, 2);
  r = run({"growth", "--ring", "3:inf,inf,inf", "--t", "2", "--d", "7"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("exceeds"), std::string::npos);
}

TEST(Cli, LexsegFormats) {
  auto r = run({"lexseg", "--ring", "3:inf,inf,inf", "--t", "2", "--d", "4"});
  EXPECT_EQ(r.out, "2 0 0\n1 1 0\n1 0 1\n0 2 0\n");
  r = run({"lexseg", "--ring", "2:inf,inf", "--t", "1", "--d", "1", "--format", "json"});
  EXPECT_NE(r.out.find("\"members\""), std::string::npos);
}

TEST(Cli, CheckThreeRingSets) {
  const std::string a = "3 1 0;3 0 1;1 3 0;0 3 1";
  EXPECT_EQ(run({"check", "--ring", "3:4,4,inf", "--set", a}).out, "GOTZMANN\n");
  EXPECT_EQ(run({"check", "--ring", "3:4,inf,inf", "--set", a + ";0 4 0"}).out, "NOT GOTZMANN\n");
  EXPECT_EQ(run({"check", "--ring", "3:inf,inf,inf", "--set", a + ";4 0 0;0 4 0"}).out, "NOT GOTZMANN\n");
}

TEST(Cli, CheckFromFileAndVerbose) {
  const std::string path = ::testing::TempDir() + "cli_set.txt";
  std::ofstream(path) << "# two monomials\n0 2 0\n0 1 1\n";
  const auto r = run({"check", "--ring", "3:inf,inf,inf", "--input", path, "--verbose"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 9), "GOTZMANN\n");
  EXPECT_NE(r.out.find("growth 5 lex target 5"), std::string::npos);
  std::ofstream(path) << "0 2 0\n0 x 1\n";
  const auto bad = run({"check", "--ring", "3:inf,inf,inf", "--input", path});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, Enumerate) {
  const auto r = run({"enumerate", "--ring", "3:inf,inf,inf", "--t", "2", "--d", "3", "--witnesses", "--no-timing"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 20), "2 0 0; 1 1 0; 1 0 1\n");
  EXPECT_NE(r.out.find("# gotzmann=3 subsets=20 target=6 below_target=0"), std::string::npos);
  const auto big = run({"enumerate", "--ring", "3:inf,inf,inf", "--t", "4", "--d", "7", "--budget", "100"});
  EXPECT_EQ(big.code, 2);
}

TEST(Cli, VerifyTransferAndThreeRing) {
  auto r = run({"verify", "--claim", "transfer", "--n", "3", "--a", "2", "--t", "2", "--exhaustive"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 24), "32/32 subsets consistent");
  r = run({"verify", "--claim", "transfer", "--n", "3", "--a", "3", "--t", "1"});
  EXPECT_EQ(r.code, 2);
  r = run({"verify", "--claim", "remark"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("exhaustive census agrees"), std::string::npos);
}

TEST(Cli, VerifyMonotonicityJsonIsThreadIndependent) {
  const std::vector<std::string> base{"verify",   "--claim",   "monotonicity", "--n-range", "1:3",
                                      "--t-range", "0:4",     "--d-range",    "1:10",      "--no-timing",
                                      "--format",  "json"};
  auto one = base, four = base;
  one.insert(one.end(), {"--threads", "1"});
  four.insert(four.end(), {"--threads", "4"});
  const auto a = run(one), b = run(four);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, Oracle) {
  EXPECT_EQ(run({"oracle", "--check", "growth-s", "--d", "5", "--n", "4"}).code, 0);
  EXPECT_EQ(run({"oracle", "--check", "growth-r", "--d", "5", "--n", "3", "--a", "2", "--t", "4"}).code, 0);
  const auto s1 = run({"oracle", "--check", "sample", "--ring", "3:2,3,inf", "--t", "3", "--seed", "9"});
  const auto s2 = run({"oracle", "--check", "sample", "--ring", "3:2,3,inf", "--t", "3", "--seed", "9"});
  EXPECT_EQ(s1.code, 0);
  EXPECT_EQ(s1.out, s2.out);
  EXPECT_EQ(run({"oracle", "--check", "growth-s"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--claim", "nonsense"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}
