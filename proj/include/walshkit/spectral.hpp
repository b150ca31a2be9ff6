#pragma once

// Walsh spectra and nonlinearity.
//
//   W_f(w) = sum_x (-1)^(f(x) + w.x)
//   N(f)   = 2^(n-1) - max_w |W_f(w)| / 2
//
// Spectrum entries are exact 32-bit integers (|W_f(w)| <= 2^30 at the cap).

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "walshkit/truth_table.hpp"

namespace walshkit {

class WalshSpectrum {
 public:
  using Value = std::int32_t;

  WalshSpectrum(int n, std::vector<Value> values);

  int num_vars() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return values_.size(); }
  std::span<const Value> values() const noexcept { return values_; }
  Value operator[](std::uint64_t w) const { return values_.at(w); }

 private:
  int n_;
  std::vector<Value> values_;
};

/// In-place unnormalized Walsh-Hadamard butterfly over a length-2^m buffer.
/// Applying it twice multiplies the buffer by 2^m.
template <class Int>
void fast_walsh_hadamard(std::span<Int> v) {
  const std::size_t len = v.size();
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const Int a = v[j];
        const Int b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
}

WalshSpectrum walsh_transform(const TruthTable& t);

/// Largest |W_f(w)|; ties go to the smallest w.
struct SpectrumPeak {
  std::uint64_t max_abs;
  std::uint64_t index;
};
SpectrumPeak spectrum_peak(const WalshSpectrum& s);

/// Nonlinearity via the spectrum. Throws std::domain_error for n = 0.
std::uint64_t nonlinearity(const TruthTable& t);
std::uint64_t nonlinearity(const WalshSpectrum& s);

/// Largest variable count accepted by brute_force_nonlinearity.
inline constexpr int kBruteForceMaxVars = 16;

/// Minimum distance to every affine function, by enumeration.
/// Requires 1 <= n <= kBruteForceMaxVars.
std::uint64_t brute_force_nonlinearity(const TruthTable& t);

/// a(x) = constant + mask.x over GF(2).
struct AffineSpec {
  std::uint64_t mask = 0;
  bool constant = false;
};
TruthTable affine_table(const AffineSpec& spec, int n);

/// Weight at most 2^(n-2) forces nonlinearity == weight.
enum class LowWeightVerdict { kPass, kFail, kNotApplicable };
std::string_view to_string(LowWeightVerdict v) noexcept;

/// kNotApplicable when n < 2 or weight(t) > 2^(n-2).
LowWeightVerdict check_weight_equals_nonlinearity(const TruthTable& t);

}  // namespace walshkit
