#pragma once

// Analysis of arbitrary truth tables and JSON/text rendering of reports.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "walshkit/majority.hpp"
#include "walshkit/spectral.hpp"
#include "walshkit/truth_table.hpp"

namespace walshkit {

struct AnalysisReport {
  int n = 0;
  std::uint64_t weight = 0;
  bool balanced = false;
  std::optional<std::uint64_t> nonlinearity;  // undefined for n = 0
  int degree = 0;
  bool constant = false;
  std::uint64_t max_abs_walsh = 0;
  std::uint64_t max_abs_walsh_index = 0;
  std::string anf;
  LowWeightVerdict low_weight = LowWeightVerdict::kNotApplicable;
  std::optional<std::vector<WalshSpectrum::Value>> spectrum;
};

AnalysisReport analyze(const TruthTable& t, bool include_spectrum = false);

// Field names: n, weight, balanced, nonlinearity, degree, constant,
// max_abs_walsh, max_abs_walsh_index, anf, low_weight [, walsh].
void to_json(nlohmann::json& j, const AnalysisReport& r);

// Field names: k, weight, nonlinearity, predicted, identities[{name, pass}],
// informational[{name, holds}], oracle, pass.
void to_json(nlohmann::json& j, const MajorityReport& r);

std::string to_text(const AnalysisReport& r);

/// One line per report: "k=5 weight=16 N=10 predicted=10 oracle=both PASS (11/11)".
std::string to_text(const MajorityReport& r);

}  // namespace walshkit
