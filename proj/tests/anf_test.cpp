#include "walshkit/anf.hpp"

#include <bit>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "walshkit/majority.hpp"
#include "walshkit/spectral.hpp"

namespace walshkit {
namespace {

using testing::random_table;
using testing::table_from_integer;

// f(x) = XOR of coefficients over monomials m contained in x.
bool evaluate_polynomial(const AnfTable& a, std::uint64_t x) {
  bool value = false;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.num_vars()); ++m) {
    if ((m & ~x) == 0 && a.coefficient(m)) value = !value;
  }
  return value;
}

TEST(ToAnf, SharpnessExample) {
  const auto a = to_anf(from_bitstring("00010011"));
  // x1x2x3 -> 111, x1x2 -> 110, x2x3 -> 011
  EXPECT_EQ(monomials(a), (std::vector<std::uint64_t>{7, 6, 3}));
  EXPECT_EQ(render(a), "x1x2x3 + x1x2 + x2x3");
}

TEST(ToAnf, ZeroAndConstants) {
  EXPECT_EQ(render(to_anf(TruthTable(4))), "0");
  EXPECT_TRUE(monomials(to_anf(TruthTable(4))).empty());
  EXPECT_EQ(render(to_anf(complement(TruthTable(3)))), "1");
  EXPECT_EQ(render(to_anf(from_bitstring("10"))), "x1 + 1");
}

TEST(ToAnf, MajorityOfThree) {
  // Candidate x1x2 + x1x3 + x2x3 agrees with wt(x) >= 2 at all 8 points.
  const auto candidate = TruthTable::from_predicate(3, [](std::uint64_t x) {
    const bool x1 = x & 4, x2 = x & 2, x3 = x & 1;
    return static_cast<bool>((x1 && x2) ^ (x1 && x3) ^ (x2 && x3));
  });
  EXPECT_EQ(candidate, majority(3));
  EXPECT_EQ(render(to_anf(majority(3))), "x1x2 + x1x3 + x2x3");
  EXPECT_EQ(degree(majority(3)), 2);
}

TEST(ToAnf, PolynomialReproducesTable) {
  std::mt19937_64 rng(41);
  for (int n = 0; n <= 10; ++n) {
    const auto t = random_table(n, rng);
    const auto a = to_anf(t);
    for (std::uint64_t x = 0; x < t.size(); ++x) {
      ASSERT_EQ(evaluate_polynomial(a, x), t.bit(x)) << "n=" << n << " x=" << x;
    }
  }
}

TEST(ToAnf, IsAnInvolution) {
  std::mt19937_64 rng(43);
  for (int n = 0; n <= 14; ++n) {
    const auto t = random_table(n, rng);
    EXPECT_EQ(from_anf(to_anf(t)), t);
    EXPECT_EQ(to_anf(to_anf(t).coefficients()).coefficients(), t);
  }
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(from_bitstring("00010011")), 3);
  EXPECT_EQ(degree(TruthTable(5)), 0);
  EXPECT_TRUE(is_constant(TruthTable(5)));
  EXPECT_TRUE(is_constant(complement(TruthTable(5))));
  EXPECT_FALSE(is_constant(from_bitstring("0001")));
  // The monomial x1...xn appears iff the weight is odd.
  std::mt19937_64 rng(47);
  for (int n = 1; n <= 10; ++n) {
    const auto t = random_table(n, rng);
    EXPECT_EQ(degree(t) == n, weight(t) % 2 == 1);
  }
}

TEST(IsAffine, AffineTablesAndSharpnessExample) {
  for (int n = 0; n <= 10; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      EXPECT_TRUE(is_affine(affine_table({mask, false}, n)));
      EXPECT_TRUE(is_affine(affine_table({mask, true}, n)));
    }
  }
  EXPECT_FALSE(is_affine(from_bitstring("00010011")));
}

TEST(IsAffine, ConcatWithReversedComplementStaysAffine) {
  for (int n = 0; n <= 8; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      for (bool c : {false, true}) {
        const auto a = affine_table({mask, c}, n);
        EXPECT_TRUE(is_affine(concat(a, reverse(complement(a)))));
      }
    }
  }
}

TEST(IsAffine, CountIsTwoToTheNPlusOne) {
  for (int n = 0; n <= 4; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
    std::uint64_t affine = 0;
    for (std::uint64_t f = 0; f < count; ++f) affine += is_affine(table_from_integer(n, f));
    EXPECT_EQ(affine, std::uint64_t{1} << (n + 1)) << "n=" << n;
  }
}

TEST(IsAffine, AgreesWithZeroNonlinearity) {
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (std::uint64_t{1} << n);
    for (std::uint64_t f = 0; f < count; ++f) {
      const auto t = table_from_integer(n, f);
      ASSERT_EQ(is_affine(t), nonlinearity(t) == 0);
    }
  }
}

}  // namespace
}  // namespace walshkit
