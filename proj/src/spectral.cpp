#include "walshkit/spectral.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace walshkit {
namespace {

using Word = TruthTable::Word;

// Passes of the butterfly with half-width in [h_begin, len).
void butterfly_passes(std::span<WalshSpectrum::Value> v, std::size_t h_begin) {
  const std::size_t len = v.size();
  for (std::size_t h = h_begin; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += 2 * h) {
      auto* lo = v.data() + i;
      auto* hi = lo + h;
      for (std::size_t j = 0; j < h; ++j) {
        const auto a = lo[j];
        const auto b = hi[j];
        lo[j] = a + b;
        hi[j] = a - b;
      }
    }
  }
}

// Cache-resident block size for the expand-and-transform stage.
constexpr int kBlockVars = 16;

// kLowPatterns[m] bit b = parity(m & b), b < 64: the linear function w.x
// restricted to the six least-significant index bits.
constexpr std::array<Word, 64> make_low_patterns() {
  std::array<Word, 64> p{};
  for (unsigned m = 0; m < 64; ++m) {
    Word w = 0;
    for (unsigned b = 0; b < 64; ++b) {
      if (std::popcount(m & b) & 1) w |= Word{1} << b;
    }
    p[m] = w;
  }
  return p;
}
constexpr auto kLowPatterns = make_low_patterns();

}  // namespace

WalshSpectrum::WalshSpectrum(int n, std::vector<Value> values)
    : n_(n), values_(std::move(values)) {
  if (n < 0 || n > kHardMaxVars || values_.size() != (std::uint64_t{1} << n)) {
    throw std::invalid_argument("spectrum length must be 2^n");
  }
}

WalshSpectrum walsh_transform(const TruthTable& t) {
  const int n = t.num_vars();
  const std::uint64_t len = t.size();
  std::vector<WalshSpectrum::Value> v(len);
  const auto words = t.words();

  // Expand +-1 values block by block and run the in-block passes while the
  // block is still hot; the remaining passes span blocks.
  const int block_vars = std::min(n, kBlockVars);
  const std::uint64_t block = std::uint64_t{1} << block_vars;
  for (std::uint64_t start = 0; start < len; start += block) {
    for (std::uint64_t i = start; i < start + block; ++i) {
      v[i] = 1 - 2 * static_cast<WalshSpectrum::Value>((words[i >> 6] >> (i & 63)) & 1);
    }
    butterfly_passes(std::span(v).subspan(start, block), 1);
  }
  butterfly_passes(v, block);
  return WalshSpectrum(n, std::move(v));
}

SpectrumPeak spectrum_peak(const WalshSpectrum& s) {
  SpectrumPeak peak{0, 0};
  const auto values = s.values();
  for (std::uint64_t w = 0; w < values.size(); ++w) {
    const auto a = static_cast<std::uint64_t>(std::abs(static_cast<std::int64_t>(values[w])));
    if (a > peak.max_abs) peak = {a, w};
  }
  return peak;
}

std::uint64_t nonlinearity(const WalshSpectrum& s) {
  if (s.num_vars() == 0) {
    throw std::domain_error("nonlinearity is undefined for 0 variables");
  }
  return (std::uint64_t{1} << (s.num_vars() - 1)) - spectrum_peak(s).max_abs / 2;
}

std::uint64_t nonlinearity(const TruthTable& t) {
  if (t.num_vars() == 0) {
    throw std::domain_error("nonlinearity is undefined for 0 variables");
  }
  return nonlinearity(walsh_transform(t));
}

std::uint64_t brute_force_nonlinearity(const TruthTable& t) {
  const int n = t.num_vars();
  if (n < 1 || n > kBruteForceMaxVars) {
    throw std::invalid_argument("brute-force nonlinearity supports 1 <= n <= " +
                                std::to_string(kBruteForceMaxVars));
  }
  const auto words = t.words();
  const std::uint64_t len = t.size();
  const Word tail = tail_mask(n);
  std::uint64_t best = len;
  for (std::uint64_t mask = 0; mask < len && best > 0; ++mask) {
    const Word low = kLowPatterns[mask & 63] & tail;
    const std::uint64_t high = mask >> 6;
    std::uint64_t d = 0;
    for (std::size_t j = 0; j < words.size(); ++j) {
      const Word flip = (std::popcount(high & j) & 1) ? ~Word{0} : Word{0};
      d += std::popcount(words[j] ^ low ^ flip);
    }
    // d is the distance to the linear function; len - d to its complement.
    best = std::min({best, d, len - d});
  }
  return best;
}

TruthTable affine_table(const AffineSpec& spec, int n) {
  if (n < 0 || n > 63 || (spec.mask >> n) != 0) {
    throw std::invalid_argument("affine mask does not fit in n bits");
  }
  return TruthTable::from_predicate(n, [&](std::uint64_t i) {
    return spec.constant != static_cast<bool>(std::popcount(spec.mask & i) & 1);
  });
}

std::string_view to_string(LowWeightVerdict v) noexcept {
  switch (v) {
    case LowWeightVerdict::kPass: return "pass";
    case LowWeightVerdict::kFail: return "fail";
    case LowWeightVerdict::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

LowWeightVerdict check_weight_equals_nonlinearity(const TruthTable& t) {
  const int n = t.num_vars();
  if (n < 2) return LowWeightVerdict::kNotApplicable;
  const std::uint64_t wt = weight(t);
  if (wt > (std::uint64_t{1} << (n - 2))) return LowWeightVerdict::kNotApplicable;
  return nonlinearity(t) == wt ? LowWeightVerdict::kPass : LowWeightVerdict::kFail;
}

}  // namespace walshkit
