#include "walshkit/anf.hpp"

#include <algorithm>
#include <bit>

namespace walshkit {
namespace {

using Word = TruthTable::Word;

// Within-word masks of positions whose index bit s is 0, s = 0..5.
constexpr Word kLowerHalf[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};

// f[i | 2^s] ^= f[i] for every index bit s: in-word passes by shift and mask,
// then cross-word passes over word strides.
TruthTable moebius(const TruthTable& t) {
  const int n = t.num_vars();
  std::vector<Word> w(t.words().begin(), t.words().end());
  const int in_word = std::min(n, 6);
  for (int s = 0; s < in_word; ++s) {
    const unsigned shift = 1u << s;
    for (Word& x : w) x ^= (x & kLowerHalf[s]) << shift;
  }
  for (std::size_t h = 1; h < w.size(); h <<= 1) {
    for (std::size_t i = 0; i < w.size(); i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) w[j + h] ^= w[j];
    }
  }
  return TruthTable(n, std::move(w));
}

}  // namespace

AnfTable to_anf(const TruthTable& t) { return AnfTable(moebius(t)); }

TruthTable from_anf(const AnfTable& a) { return moebius(a.coefficients()); }

int degree(const AnfTable& a) {
  const auto words = a.coefficients().words();
  int best = 0;
  for (std::size_t j = 0; j < words.size(); ++j) {
    Word x = words[j];
    while (x != 0) {
      const auto m = static_cast<std::uint64_t>(j) * 64 + std::countr_zero(x);
      best = std::max(best, std::popcount(m));
      x &= x - 1;
    }
  }
  return best;
}

int degree(const TruthTable& t) { return degree(to_anf(t)); }

bool is_constant(const TruthTable& t) noexcept {
  const std::uint64_t w = weight(t);
  return w == 0 || w == t.size();
}

bool is_affine(const TruthTable& t) { return degree(t) <= 1; }

std::vector<std::uint64_t> monomials(const AnfTable& a) {
  std::vector<std::uint64_t> ms;
  const auto& c = a.coefficients();
  for (std::uint64_t m = 0; m < c.size(); ++m) {
    if (c.bit(m)) ms.push_back(m);
  }
  // With x_1 as the top bit, lexicographic order of variable lists within a
  // degree is descending index order.
  std::sort(ms.begin(), ms.end(), [](std::uint64_t l, std::uint64_t r) {
    const int dl = std::popcount(l);
    const int dr = std::popcount(r);
    return dl != dr ? dl > dr : l > r;
  });
  return ms;
}

std::string render(const AnfTable& a) {
  const auto ms = monomials(a);
  if (ms.empty()) return "0";
  const int n = a.num_vars();
  std::string out;
  for (std::uint64_t m : ms) {
    if (!out.empty()) out += " + ";
    if (m == 0) {
      out += "1";
      continue;
    }
    for (int j = 1; j <= n; ++j) {
      if ((m >> (n - j)) & 1) out += "x" + std::to_string(j);
    }
  }
  return out;
}

}  // namespace walshkit
