// Runs the walshkit binary and checks stdout and exit codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

namespace {

struct RunResult {
  int status;
  std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " WALSHKIT_CLI_PATH " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int raw = ::pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

TEST(CliAnalyze, SharpnessExample) {
  const auto r = run("analyze --tt 00010011");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["weight"], 3);
  EXPECT_EQ(j["nonlinearity"], 1);
  EXPECT_EQ(j["degree"], 3);
  EXPECT_EQ(j["anf"], "x1x2x3 + x1x2 + x2x3");
}

TEST(CliAnalyze, ZeroFunction) {
  const auto r = run("analyze --tt 0000");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["weight"], 0);
  EXPECT_EQ(j["nonlinearity"], 0);
  EXPECT_EQ(j["degree"], 0);
}

TEST(CliAnalyze, HexAndErrors) {
  const auto ok = run("analyze --tt 0x13 --spectrum");
  ASSERT_EQ(ok.status, 0);
  EXPECT_EQ(nlohmann::json::parse(ok.out)["walsh"][0], 2);
  EXPECT_EQ(run("analyze --tt 0x17 --n 4").status, 2);
  EXPECT_EQ(run("analyze --tt 0x17 --n 3").status, 0);
  EXPECT_EQ(run("analyze --tt 000101").status, 2);
  EXPECT_EQ(run("analyze --tt 0102").status, 2);
  EXPECT_EQ(run("analyze --tt 0x17 --format binary").status, 2);
  EXPECT_EQ(run("analyze").status, 2);
}

TEST(CliAnalyze, TextMode) {
  const auto r = run("analyze --tt 00010011 --text");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("nonlinearity:   1"), std::string::npos);
}

TEST(CliMajority, RunLength) {
  const auto r = run("majority 5 --runlength");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "0_7 1 0_3 1 0 1_3 0_3 1 0 1_3 0 1_7\n");
  EXPECT_EQ(run("majority 10 --runlength").status, 2);
}

TEST(CliMajority, TableAndReport) {
  EXPECT_EQ(run("majority 5").out, "00000001000101110001011101111111\n");
  EXPECT_EQ(run("majority 5 --table").out, "00000001000101110001011101111111\n");
  EXPECT_EQ(run("majority 5 --hex").out, "0x0117177f\n");
  const auto r = run("majority 6 --report");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["nonlinearity"], 22);
  EXPECT_EQ(j["pass"], true);
}

TEST(CliMajority, RangeErrors) {
  EXPECT_EQ(run("majority 0").status, 2);
  EXPECT_EQ(run("majority 31").status, 2);
  EXPECT_EQ(run("majority 9", "WALSHKIT_MAX_N=8").status, 2);
  EXPECT_EQ(run("majority 8", "WALSHKIT_MAX_N=8").status, 0);
  EXPECT_EQ(run("majority 5 --report --runlength").status, 2);
}

TEST(CliVerify, ThroughThirteen) {
  const auto r = run("verify --max-k 13");
  EXPECT_EQ(r.status, 0);
  std::size_t lines = 0;
  for (std::size_t pos = 0; (pos = r.out.find("k=", pos)) != std::string::npos; ++pos) ++lines;
  EXPECT_EQ(lines, 10u);
}

TEST(CliVerify, JsonAggregate) {
  const auto r = run("verify --max-k 8 --json");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["max_k"], 8);
  EXPECT_EQ(j["reports"].size(), 5u);
  EXPECT_EQ(j["reports"][0]["k"], 4);
}

TEST(CliVerify, UsageErrors) {
  EXPECT_EQ(run("verify --max-k 3").status, 2);
  EXPECT_EQ(run("verify --max-k 25").status, 2);
}

TEST(CliBench, Runs) {
  const auto r = run("bench 12 --reps 3");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["n"], 12);
  EXPECT_GE(j["median_ms"].get<double>(), 0.0);
  EXPECT_EQ(run("bench 0").status, 0);
  EXPECT_EQ(run("bench 31").status, 2);
  EXPECT_EQ(run("bench 4 --reps 0").status, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("--help").status, 0);
}

}  // namespace
