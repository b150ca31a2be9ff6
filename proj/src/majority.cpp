#include "walshkit/majority.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>

#include "walshkit/spectral.hpp"

namespace walshkit {
namespace {

// Pascal's triangle up to row 64; C(64, 32) < 2^61.
using PascalTable = std::array<std::array<std::uint64_t, kMaxFormulaK + 1>, kMaxFormulaK + 1>;

constexpr PascalTable make_pascal() {
  PascalTable c{};
  for (int a = 0; a <= kMaxFormulaK; ++a) {
    c[a][0] = 1;
    for (int b = 1; b <= a; ++b) c[a][b] = c[a - 1][b - 1] + (b < a ? c[a - 1][b] : 0);
  }
  return c;
}
constexpr PascalTable kPascal = make_pascal();

void check_k(int k) {
  if (k < 1 || k > max_vars()) {
    throw std::invalid_argument("majority arity " + std::to_string(k) +
                                " outside [1, " + std::to_string(max_vars()) + "]");
  }
}

void require_n(int n, int lo, int hi, const char* what) {
  if (n < lo || n > hi) {
    throw std::invalid_argument(std::string(what) + ": n = " + std::to_string(n) +
                                " outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
}

std::uint64_t binomial_tail(int a, int from, int to) {
  std::uint64_t s = 0;
  for (int j = from; j <= to; ++j) s += binomial(a, j);
  return s;
}

// Collects checks, routing each to the asserted or informational list.
class CheckList {
 public:
  explicit CheckList(MajorityReport& r, bool assert_all) : r_(r), assert_all_(assert_all) {}

  void add(std::string name, bool pass) {
    (assert_all_ ? r_.identities : r_.informational).push_back({std::move(name), pass});
  }
  void info(std::string name, bool holds) {
    r_.informational.push_back({std::move(name), holds});
  }

 private:
  MajorityReport& r_;
  bool assert_all_;
};

TruthTable reverse_complement(const TruthTable& t) { return reverse(complement(t)); }

void odd_checks(int k, const TruthTable& m, CheckList& checks) {
  const int n = k / 2;
  const auto [a, b] = halves(m);

  checks.add("balanced", weight(m) == (std::uint64_t{1} << (2 * n)));
  checks.add("right_half_reverse_complement", b == reverse_complement(a));
  if (k < 3) return;

  const TruthTable prev = majority(k - 1);
  checks.add("odd_from_even_decomposition", m == concat(reverse_complement(prev), prev));
  checks.add("right_half_is_even_majority", b == prev);

  const std::uint64_t n_m = nonlinearity(m);
  const std::uint64_t n_a = nonlinearity(a);
  checks.add("doubling_nonlinearity", n_m == 2 * n_a);
  checks.add("left_half_weight_equals_nonlinearity", n_a == nonlinearity(prev) && n_a == weight(a));

  if (n >= 2) checks.add("left_half_weight", weight(a) == predicted_weight_A_odd(n));
  if (n >= 3) {
    const TruthTable q1 = quarter_Q1(k);
    const auto [q1a, q1b] = halves(q1);
    checks.add("quarter_reverse_complement", q1 == reverse_complement(half_B(k - 1)));
    checks.add("quarter_left_weight", weight(q1a) == predicted_weight_Q1A(n));
    checks.add("quarter_right_weight", weight(q1b) == predicted_weight_Q1B(n));
  }
}

void even_checks(int k, const TruthTable& m, CheckList& checks) {
  const int n = k / 2;
  if (n >= 2 && k + 1 <= kMaxFormulaK) {
    checks.add("even_closed_form_is_half_odd", 2 * predicted_nonlinearity(k) == predicted_nonlinearity(k + 1));
  }
  if (n < 3) return;

  const TruthTable b = halves(m).second;
  const TruthTable bc = reverse_complement(b);
  const std::uint64_t wt_bc = weight(bc);
  const std::uint64_t expected = nonlinearity_B_even_sum_form(n);
  const std::uint64_t n_b = nonlinearity(b);

  checks.add("right_half_closed_forms_agree", expected == nonlinearity_B_even_power_form(n));
  checks.add("right_half_complement_weight_bound", wt_bc < (std::uint64_t{1} << (2 * n - 2)));
  checks.add("right_half_complement_weight", wt_bc == expected);
  checks.add("right_half_complement_weight_equals_nonlinearity", wt_bc == nonlinearity(bc));
  checks.add("right_half_nonlinearity_spectrum", n_b == expected);
  if (b.num_vars() <= kBruteForceMaxK) {
    checks.add("right_half_nonlinearity_brute_force", brute_force_nonlinearity(b) == expected);
  }
  // The low-weight criterion on the (2n-1)-variable C(B(2n))* needs weight at most
  // 2^(2n-3); this holds only for small n, so it is reported, not asserted.
  checks.info("right_half_complement_small_weight", wt_bc <= (std::uint64_t{1} << (2 * n - 3)));
}

}  // namespace

std::uint64_t binomial(int a, int b) {
  if (a < 0 || a > kMaxFormulaK || b < 0 || b > a) {
    throw std::invalid_argument("binomial(" + std::to_string(a) + ", " +
                                std::to_string(b) + ") outside 0 <= b <= a <= 64");
  }
  return kPascal[a][b];
}

TruthTable majority(int k) {
  check_k(k);
  // Case split: k = 2n+1 needs wt >= n+1, k = 2n needs wt >= n.
  const int threshold = (k % 2 == 1) ? k / 2 + 1 : k / 2;
  return TruthTable::from_predicate(
      k, [threshold](std::uint64_t i) { return std::popcount(i) >= threshold; });
}

TruthTable half_A(int k) { return halves(majority(k)).first; }

TruthTable half_B(int k) { return halves(majority(k)).second; }

TruthTable quarter_Q1(int k) {
  check_k(k);
  if (k % 2 == 0 || k < 5) {
    throw std::invalid_argument("quarter_Q1 requires odd k >= 5");
  }
  return halves(half_A(k)).first;
}

std::uint64_t predicted_nonlinearity(int k) {
  if (k < 4 || k > kMaxFormulaK) {
    throw std::invalid_argument("predicted_nonlinearity requires 4 <= k <= 64");
  }
  const int n = k / 2;
  const std::uint64_t odd_value = (std::uint64_t{1} << (2 * n)) - binomial(2 * n, n);
  if (k % 2 == 1) return odd_value;
  return (std::uint64_t{1} << (2 * n - 1)) - binomial(2 * n, n) / 2;
}

std::uint64_t predicted_weight_A_odd(int n) {
  require_n(n, 2, (kMaxFormulaK - 1) / 2, "predicted_weight_A_odd");
  return (std::uint64_t{1} << (2 * n - 1)) - binomial(2 * n, n) / 2;
}

std::uint64_t predicted_weight_Q1A(int n) {
  require_n(n, 3, (kMaxFormulaK - 1) / 2, "predicted_weight_Q1A");
  return binomial_tail(2 * n - 2, n + 1, 2 * n - 2);
}

std::uint64_t predicted_weight_Q1B(int n) {
  require_n(n, 3, (kMaxFormulaK - 1) / 2, "predicted_weight_Q1B");
  return binomial_tail(2 * n - 2, n, 2 * n - 2);
}

std::uint64_t nonlinearity_B_even_sum_form(int n) {
  require_n(n, 3, kMaxFormulaK / 2, "nonlinearity_B_even_sum_form");
  return 2 * binomial_tail(2 * n - 2, n + 1, 2 * n - 2) + binomial(2 * n - 2, n);
}

std::uint64_t nonlinearity_B_even_power_form(int n) {
  require_n(n, 3, kMaxFormulaK / 2, "nonlinearity_B_even_power_form");
  return binomial_tail(2 * n - 2, n + 1, 2 * n - 2) + (std::uint64_t{1} << (2 * n - 3)) -
         binomial(2 * n - 2, n - 1) / 2;
}

std::uint64_t predicted_nonlinearity_B_even(int n) {
  const std::uint64_t sum_form = nonlinearity_B_even_sum_form(n);
  if (sum_form != nonlinearity_B_even_power_form(n)) {
    throw std::logic_error("closed forms for N(B(2n)) disagree at n = " + std::to_string(n));
  }
  return sum_form;
}

std::string_view to_string(OracleUsed o) noexcept {
  switch (o) {
    case OracleUsed::kSpectrum: return "spectrum";
    case OracleUsed::kBruteForce: return "brute_force";
    case OracleUsed::kBoth: return "both";
  }
  return "unknown";
}

bool MajorityReport::all_pass() const noexcept {
  return std::all_of(identities.begin(), identities.end(),
                     [](const IdentityCheck& c) { return c.pass; });
}

MajorityReport majority_report(int k) {
  if (k < 1 || k > kMaxVerifyK) {
    throw std::invalid_argument("majority_report requires 1 <= k <= " +
                                std::to_string(kMaxVerifyK));
  }
  MajorityReport r;
  r.k = k;
  const TruthTable m = majority(k);
  r.measured_weight = weight(m);
  r.measured_nonlinearity = nonlinearity(m);

  CheckList checks(r, k >= 4);
  checks.add("threshold_definitions_agree",
             m == TruthTable::from_predicate(
                      k, [k](std::uint64_t i) { return 2 * std::popcount(i) >= k; }));

  if (k >= 4) {
    r.predicted_nonlinearity = predicted_nonlinearity(k);
    checks.add("closed_form_spectrum", r.measured_nonlinearity == *r.predicted_nonlinearity);
  }
  if (k <= kBruteForceMaxK) {
    const std::uint64_t brute = brute_force_nonlinearity(m);
    r.oracle = OracleUsed::kBoth;
    checks.add("oracles_agree", brute == r.measured_nonlinearity);
    if (r.predicted_nonlinearity) {
      checks.add("closed_form_brute_force", brute == *r.predicted_nonlinearity);
    }
  }

  if (k % 2 == 1) {
    odd_checks(k, m, checks);
  } else {
    even_checks(k, m, checks);
  }
  return r;
}

std::vector<MajorityReport> verify_majority(int k_max) {
  if (k_max < 4 || k_max > kMaxVerifyK) {
    throw std::invalid_argument("verify_majority requires 4 <= k_max <= " +
                                std::to_string(kMaxVerifyK));
  }
  std::vector<MajorityReport> reports;
  reports.reserve(k_max - 3);
  for (int k = 4; k <= k_max; ++k) reports.push_back(majority_report(k));
  return reports;
}

}  // namespace walshkit
