// walshkit command-line front end.
//
// Subcommands:
//   analyze   weight, nonlinearity, degree, ANF and spectrum peak of a table
//   majority  majority truth tables and per-k reports
//   verify    check every majority identity for k = 4..max-k
//   bench     time the Walsh transform on random tables
//
// Exit status: 0 success, 1 verification failure, 2 usage or parse error.
// Data goes to stdout, diagnostics to stderr.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "walshkit/majority.hpp"
#include "walshkit/report.hpp"
#include "walshkit/spectral.hpp"
#include "walshkit/truth_table.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

constexpr int kMaxRunLengthK = 9;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void warn_on_bad_cap_env() {
  const char* env = std::getenv(walshkit::kMaxVarsEnv);
  if (env == nullptr) return;
  std::string_view text(env);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0 ||
      value > walshkit::kHardMaxVars) {
    std::cerr << "warning: ignoring " << walshkit::kMaxVarsEnv << "='" << text
              << "' (expected an integer in [0, " << walshkit::kHardMaxVars << "])\n";
  }
}

// analyze

struct AnalyzeOptions {
  std::string table;
  std::string format = "auto";
  int expected_vars = -1;
  bool text = false;
  bool spectrum = false;
};

int run_analyze(const AnalyzeOptions& opt) {
  walshkit::TruthTable t;
  if (opt.format == "binary") {
    t = walshkit::from_bitstring(opt.table);
  } else if (opt.format == "hex") {
    t = walshkit::from_hex(opt.table);
  } else {
    t = walshkit::parse_table(opt.table);
  }
  if (opt.expected_vars >= 0 && t.num_vars() != opt.expected_vars) {
    throw UsageError("table has " + std::to_string(t.num_vars()) + " variables but --n is " +
                     std::to_string(opt.expected_vars));
  }
  const auto report = walshkit::analyze(t, opt.spectrum);
  if (opt.text) {
    std::cout << walshkit::to_text(report);
  } else {
    std::cout << nlohmann::json(report).dump() << '\n';
  }
  return kExitOk;
}

// majority

struct MajorityOptions {
  int k = 0;
  bool report = false;
  bool runlength = false;
  bool hex = false;
  bool text = false;
};

int run_majority(const MajorityOptions& opt) {
  if (opt.k < 1 || opt.k > walshkit::max_vars()) {
    throw UsageError("k must be in [1, " + std::to_string(walshkit::max_vars()) + "]");
  }
  if (opt.report) {
    if (opt.k > walshkit::kMaxVerifyK) {
      throw UsageError("--report supports k <= " + std::to_string(walshkit::kMaxVerifyK));
    }
    const auto r = walshkit::majority_report(opt.k);
    if (opt.text) {
      std::cout << walshkit::to_text(r) << '\n';
    } else {
      std::cout << nlohmann::json(r).dump() << '\n';
    }
    return r.all_pass() ? kExitOk : kExitFailure;
  }
  if (opt.runlength && opt.k > kMaxRunLengthK) {
    throw UsageError("--runlength supports k <= " + std::to_string(kMaxRunLengthK));
  }
  const auto m = walshkit::majority(opt.k);
  if (opt.runlength) {
    std::cout << walshkit::to_run_length(m) << '\n';
  } else if (opt.hex) {
    std::cout << walshkit::to_hex(m) << '\n';
  } else {
    std::cout << walshkit::to_bitstring(m) << '\n';
  }
  return kExitOk;
}

// verify

struct VerifyOptions {
  int max_k = 13;
  bool json = false;
};

int run_verify(const VerifyOptions& opt) {
  if (opt.max_k < 4 || opt.max_k > walshkit::kMaxVerifyK) {
    throw UsageError("--max-k must be in [4, " + std::to_string(walshkit::kMaxVerifyK) + "]");
  }
  bool all_pass = true;
  auto reports = nlohmann::json::array();
  for (int k = 4; k <= opt.max_k; ++k) {
    const auto r = walshkit::majority_report(k);
    all_pass = all_pass && r.all_pass();
    if (opt.json) {
      reports.push_back(r);
    } else {
      std::cout << walshkit::to_text(r) << std::endl;
    }
  }
  if (opt.json) {
    const nlohmann::json aggregate{
        {"max_k", opt.max_k}, {"pass", all_pass}, {"reports", std::move(reports)}};
    std::cout << aggregate.dump() << '\n';
  } else {
    std::cout << (all_pass ? "all identities hold" : "IDENTITY FAILURES") << '\n';
  }
  return all_pass ? kExitOk : kExitFailure;
}

// bench

struct BenchOptions {
  int n = 0;
  int reps = 5;
  std::uint64_t seed = 1;
  bool text = false;
};

int run_bench(const BenchOptions& opt) {
  if (opt.n < 0 || opt.n > walshkit::max_vars()) {
    throw UsageError("n must be in [0, " + std::to_string(walshkit::max_vars()) + "]");
  }
  if (opt.reps < 1) throw UsageError("--reps must be positive");

  std::mt19937_64 rng(opt.seed);
  std::vector<double> millis;
  millis.reserve(opt.reps);
  std::int64_t checksum = 0;
  for (int rep = 0; rep < opt.reps; ++rep) {
    std::vector<walshkit::TruthTable::Word> words(walshkit::TruthTable::words_for(opt.n));
    for (auto& w : words) w = rng();
    const walshkit::TruthTable t(opt.n, std::move(words));
    const auto start = std::chrono::steady_clock::now();
    const auto spectrum = walshkit::walsh_transform(t);
    const auto stop = std::chrono::steady_clock::now();
    checksum += spectrum[0];
    millis.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
  }
  std::sort(millis.begin(), millis.end());
  const double median = millis.size() % 2 == 1
                            ? millis[millis.size() / 2]
                            : 0.5 * (millis[millis.size() / 2 - 1] + millis[millis.size() / 2]);
  if (opt.text) {
    std::cout << "walsh_transform n=" << opt.n << " reps=" << opt.reps << " median=" << median
              << " ms min=" << millis.front() << " ms max=" << millis.back() << " ms\n";
  } else {
    const nlohmann::json out{{"n", opt.n},
                             {"reps", opt.reps},
                             {"median_ms", median},
                             {"min_ms", millis.front()},
                             {"max_ms", millis.back()},
                             {"checksum", checksum}};
    std::cout << out.dump() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean function spectral analysis and majority-function verification"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  auto* analyze = app.add_subcommand("analyze", "Analyze a truth table");
  analyze->add_option("--tt", analyze_opt.table, "Truth table (bitstring, or hex with 0x prefix)")
      ->required();
  analyze->add_option("--format", analyze_opt.format, "Input format")
      ->check(CLI::IsMember({"auto", "binary", "hex"}));
  analyze->add_option("--n", analyze_opt.expected_vars, "Expected variable count");
  analyze->add_flag("--text", analyze_opt.text, "Human-readable output");
  analyze->add_flag("--spectrum", analyze_opt.spectrum, "Include the full Walsh spectrum");

  MajorityOptions majority_opt;
  auto* majority = app.add_subcommand("majority", "Majority function M(k)");
  majority->add_option("k", majority_opt.k, "Number of variables")->required();
  auto* report_flag = majority->add_flag("--report", majority_opt.report, "Emit the k report");
  auto* table_flag = majority->add_flag("--table", "Emit the truth table as a bitstring (default)");
  auto* rl_flag =
      majority->add_flag("--runlength", majority_opt.runlength, "Run-length notation (k <= 9)");
  auto* hex_flag = majority->add_flag("--hex", majority_opt.hex, "Emit the truth table in hex");
  report_flag->excludes(table_flag, rl_flag, hex_flag);
  table_flag->excludes(rl_flag, hex_flag);
  rl_flag->excludes(hex_flag);
  majority->add_flag("--text", majority_opt.text, "Human-readable report");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Verify majority identities for k = 4..max-k");
  verify->add_option("--max-k", verify_opt.max_k, "Largest k to verify (4..24)");
  verify->add_flag("--json", verify_opt.json, "Machine-readable aggregate");

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "Time walsh_transform on random tables");
  bench->add_option("n", bench_opt.n, "Number of variables")->required();
  bench->add_option("--reps", bench_opt.reps, "Repetitions");
  bench->add_option("--seed", bench_opt.seed, "RNG seed");
  bench->add_flag("--text", bench_opt.text, "Human-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  warn_on_bad_cap_env();
  try {
    if (*analyze) return run_analyze(analyze_opt);
    if (*majority) return run_majority(majority_opt);
    if (*verify) return run_verify(verify_opt);
    if (*bench) return run_bench(bench_opt);
  } catch (const walshkit::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}
