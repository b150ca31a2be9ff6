#include "walshkit/report.hpp"

#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace walshkit {
namespace {

TEST(Analyze, SharpnessExample) {
  const auto r = analyze(from_bitstring("00010011"));
  EXPECT_EQ(r.n, 3);
  EXPECT_EQ(r.weight, 3u);
  EXPECT_FALSE(r.balanced);
  ASSERT_TRUE(r.nonlinearity.has_value());
  EXPECT_EQ(*r.nonlinearity, 1u);
  EXPECT_EQ(r.degree, 3);
  EXPECT_EQ(r.anf, "x1x2x3 + x1x2 + x2x3");
  EXPECT_EQ(r.low_weight, LowWeightVerdict::kNotApplicable);
  EXPECT_FALSE(r.spectrum.has_value());
}

TEST(Analyze, ZeroFunction) {
  const auto r = analyze(from_bitstring("0000"));
  EXPECT_EQ(r.weight, 0u);
  EXPECT_EQ(*r.nonlinearity, 0u);
  EXPECT_EQ(r.degree, 0);
  EXPECT_TRUE(r.constant);
  EXPECT_EQ(r.anf, "0");
  EXPECT_EQ(r.low_weight, LowWeightVerdict::kPass);
}

TEST(Analyze, NoVariables) {
  const auto r = analyze(from_bitstring("1"));
  EXPECT_EQ(r.n, 0);
  EXPECT_FALSE(r.nonlinearity.has_value());
  EXPECT_EQ(r.anf, "1");
  const nlohmann::json j = r;
  EXPECT_TRUE(j["nonlinearity"].is_null());
}

TEST(Analyze, InternallyConsistent) {
  std::mt19937_64 rng(71);
  for (int n = 1; n <= 12; ++n) {
    const auto t = testing::random_table(n, rng);
    const auto r = analyze(t, true);
    EXPECT_EQ(*r.nonlinearity, (std::uint64_t{1} << (n - 1)) - r.max_abs_walsh / 2);
    EXPECT_EQ(r.balanced, r.weight == t.size() / 2);
    ASSERT_TRUE(r.spectrum.has_value());
    EXPECT_EQ(static_cast<std::uint64_t>(std::abs((*r.spectrum)[r.max_abs_walsh_index])),
              r.max_abs_walsh);
  }
}

TEST(AnalysisJson, FieldNames) {
  const nlohmann::json j = analyze(from_bitstring("00010011"), true);
  for (const char* key : {"n", "weight", "balanced", "nonlinearity", "degree", "constant",
                          "max_abs_walsh", "max_abs_walsh_index", "anf", "low_weight", "walsh"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.size(), 11u);
  EXPECT_EQ(j["low_weight"], "not-applicable");
  EXPECT_EQ(j["walsh"].size(), 8u);
  EXPECT_EQ(j["walsh"][0], 2);
  // Serialized text parses back to the same document.
  EXPECT_EQ(nlohmann::json::parse(j.dump()), j);
}

TEST(MajorityJson, FieldNames) {
  const nlohmann::json j = majority_report(6);
  for (const char* key :
       {"k", "weight", "nonlinearity", "predicted", "identities", "informational", "oracle", "pass"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["k"], 6);
  EXPECT_EQ(j["nonlinearity"], 22);
  EXPECT_EQ(j["predicted"], 22);
  EXPECT_EQ(j["oracle"], "both");
  EXPECT_EQ(j["pass"], true);
  for (const auto& id : j["identities"]) {
    EXPECT_TRUE(id.contains("name"));
    EXPECT_EQ(id["pass"], true);
  }
}

TEST(MajorityText, OneLineSummary) {
  EXPECT_EQ(to_text(majority_report(5)).rfind("k=5 weight=16 N=10 predicted=10 oracle=both PASS", 0),
            0u);
}

}  // namespace
}  // namespace walshkit
