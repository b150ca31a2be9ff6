#pragma once

// The majority family M(k) and its closed-form weights and nonlinearities.
//
//   M_k(x) = 1  iff  wt(x) >= k/2
//
// A(k), B(k) are the left and right halves of M(k); Q1(k) is its first
// quarter, and Q1A/Q1B are the halves of Q1. C(S) is the complement and S*
// the reversal of a bitstring.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "walshkit/truth_table.hpp"

namespace walshkit {

/// Largest k that verify_majority and majority_report will process.
inline constexpr int kMaxVerifyK = 24;
/// Largest k whose nonlinearity is also checked by affine enumeration.
inline constexpr int kBruteForceMaxK = 15;
/// Largest k accepted by the closed-form evaluators (fits 64-bit integers).
inline constexpr int kMaxFormulaK = 64;

/// Exact binomial coefficient C(a, b) for 0 <= b <= a <= 64.
std::uint64_t binomial(int a, int b);

/// Requires 1 <= k <= max_vars().
TruthTable majority(int k);
TruthTable half_A(int k);
TruthTable half_B(int k);

/// First quarter of M(k); k odd and k >= 5.
TruthTable quarter_Q1(int k);

/// Closed-form nonlinearity of M(k), k >= 4:
///   k = 2n+1:  2^(2n) - C(2n, n)
///   k = 2n:    2^(2n-1) - C(2n, n) / 2
std::uint64_t predicted_nonlinearity(int k);

/// wt(A(2n+1)) = 2^(2n-1) - C(2n, n) / 2, n >= 2.
std::uint64_t predicted_weight_A_odd(int n);

/// wt(Q1A(2n+1)) = sum_{j=n+1}^{2n-2} C(2n-2, j), n >= 3.
std::uint64_t predicted_weight_Q1A(int n);
/// wt(Q1B(2n+1)) = sum_{j=n}^{2n-2} C(2n-2, j), n >= 3.
std::uint64_t predicted_weight_Q1B(int n);

/// The two closed forms for N(B(2n)), n >= 3:
///   first:  2 sum_{j=n+1}^{2n-2} C(2n-2, j) + C(2n-2, n)
///   second: sum_{j=n+1}^{2n-2} C(2n-2, j) + 2^(2n-3) - C(2n-2, n-1) / 2
std::uint64_t nonlinearity_B_even_sum_form(int n);
std::uint64_t nonlinearity_B_even_power_form(int n);

/// N(B(2n)) for n >= 3; throws std::logic_error if the two forms disagree.
std::uint64_t predicted_nonlinearity_B_even(int n);

struct IdentityCheck {
  std::string name;
  bool pass;
};

enum class OracleUsed { kSpectrum, kBruteForce, kBoth };
std::string_view to_string(OracleUsed o) noexcept;

struct MajorityReport {
  int k = 0;
  std::uint64_t measured_weight = 0;
  std::uint64_t measured_nonlinearity = 0;
  std::optional<std::uint64_t> predicted_nonlinearity;
  /// Asserted identities; any failure is a defect.
  std::vector<IdentityCheck> identities;
  /// Computed but not asserted (outside the stated parameter ranges).
  std::vector<IdentityCheck> informational;
  OracleUsed oracle = OracleUsed::kSpectrum;

  bool all_pass() const noexcept;
};

/// Builds M(k) and checks every identity applicable at k. For k < 4 all
/// checks land in `informational`. Requires 1 <= k <= kMaxVerifyK.
MajorityReport majority_report(int k);

/// majority_report(k) for k = 4..k_max, in k order. Requires
/// 4 <= k_max <= kMaxVerifyK.
std::vector<MajorityReport> verify_majority(int k_max);

}  // namespace walshkit
