#pragma once

// Algebraic normal form via the binary Moebius transform.
//
// Coefficient index m uses the point-index convention of TruthTable: bit m
// is the coefficient of the monomial prod{x_j : coordinate j of v_m is 1},
// so x_1 corresponds to the most-significant bit of m.

#include <cstdint>
#include <string>
#include <vector>

#include "walshkit/truth_table.hpp"

namespace walshkit {

class AnfTable {
 public:
  explicit AnfTable(TruthTable coeffs) : coeffs_(std::move(coeffs)) {}

  int num_vars() const noexcept { return coeffs_.num_vars(); }
  bool coefficient(std::uint64_t m) const { return coeffs_.bit(m); }
  const TruthTable& coefficients() const noexcept { return coeffs_; }

  friend bool operator==(const AnfTable&, const AnfTable&) = default;

 private:
  TruthTable coeffs_;
};

AnfTable to_anf(const TruthTable& t);

/// The function whose ANF is a (the transform is an involution).
TruthTable from_anf(const AnfTable& a);

/// Degree of the ANF; constants (including the zero function) have degree 0.
int degree(const AnfTable& a);
int degree(const TruthTable& t);

bool is_constant(const TruthTable& t) noexcept;
bool is_affine(const TruthTable& t);

/// Monomial indices ordered by degree, highest first, and within a degree in
/// lexicographic order of their variable lists (x1x2 before x2x3).
std::vector<std::uint64_t> monomials(const AnfTable& a);

/// "x1x2x3 + x1x2 + x2x3"; "0" for the zero polynomial, constant term "1" last.
std::string render(const AnfTable& a);

}  // namespace walshkit
