#include "walshkit/truth_table.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>

namespace walshkit {
namespace {

using Word = TruthTable::Word;

Word reverse_bits(Word x) noexcept {
  x = ((x >> 1) & 0x5555555555555555ull) | ((x & 0x5555555555555555ull) << 1);
  x = ((x >> 2) & 0x3333333333333333ull) | ((x & 0x3333333333333333ull) << 2);
  x = ((x >> 4) & 0x0f0f0f0f0f0f0f0full) | ((x & 0x0f0f0f0f0f0f0f0full) << 4);
  x = ((x >> 8) & 0x00ff00ff00ff00ffull) | ((x & 0x00ff00ff00ff00ffull) << 8);
  x = ((x >> 16) & 0x0000ffff0000ffffull) | ((x & 0x0000ffff0000ffffull) << 16);
  return (x >> 32) | (x << 32);
}

void check_vars(int n) {
  if (n < 0 || n > max_vars()) {
    throw std::invalid_argument("variable count " + std::to_string(n) +
                                " outside [0, " + std::to_string(max_vars()) +
                                "]");
  }
}

void check_same_vars(const TruthTable& t, const TruthTable& u) {
  if (t.num_vars() != u.num_vars()) {
    throw std::invalid_argument("tables have different variable counts (" +
                                std::to_string(t.num_vars()) + " vs " +
                                std::to_string(u.num_vars()) + ")");
  }
}

// log2 of a power-of-two length, or -1.
int exact_log2(std::size_t len) noexcept {
  if (len == 0 || !std::has_single_bit(len)) return -1;
  return std::countr_zero(len);
}

}  // namespace

int max_vars() {
  const char* env = std::getenv(kMaxVarsEnv);
  if (env == nullptr) return kHardMaxVars;
  std::string_view text(env);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value < 0 ||
      value > kHardMaxVars) {
    return kHardMaxVars;
  }
  return value;
}

// PointVector

PointVector::PointVector(int n, std::uint64_t index) : n_(n), index_(index) {
  if (n < 0 || n > 63) throw std::invalid_argument("point dimension out of range");
  if (index >> n) throw std::out_of_range("point index out of range");
}

PointVector PointVector::from_coords(std::span<const std::uint8_t> coords) {
  std::uint64_t index = 0;
  for (std::uint8_t c : coords) {
    if (c > 1) throw std::invalid_argument("coordinate must be 0 or 1");
    index = (index << 1) | c;
  }
  return PointVector(static_cast<int>(coords.size()), index);
}

bool PointVector::coord(int j) const {
  if (j < 1 || j > n_) throw std::out_of_range("coordinate index out of range");
  return (index_ >> (n_ - j)) & 1;
}

int PointVector::weight() const noexcept { return std::popcount(index_); }

// TruthTable

TruthTable::TruthTable(int n) : n_(n) {
  check_vars(n);
  words_.assign(words_for(n), 0);
}

TruthTable::TruthTable(int n, std::vector<Word> words) : n_(n), words_(std::move(words)) {
  check_vars(n);
  if (words_.size() != words_for(n)) {
    throw std::invalid_argument("word count does not match variable count");
  }
  mask_tail();
}

void TruthTable::mask_tail() noexcept { words_.back() &= tail_mask(n_); }

bool TruthTable::bit(std::uint64_t i) const {
  if (i >= size()) throw std::out_of_range("table index out of range");
  return (words_[i >> 6] >> (i & 63)) & 1;
}

bool TruthTable::operator()(const PointVector& x) const {
  if (x.num_vars() != n_) throw std::invalid_argument("point dimension mismatch");
  return bit(x.index());
}

std::uint64_t weight(const TruthTable& t) noexcept {
  std::uint64_t w = 0;
  for (Word word : t.words()) w += std::popcount(word);
  return w;
}

std::uint64_t distance(const TruthTable& t, const TruthTable& u) {
  check_same_vars(t, u);
  const auto a = t.words();
  const auto b = u.words();
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::popcount(a[i] ^ b[i]);
  return d;
}

TruthTable operator^(const TruthTable& t, const TruthTable& u) {
  check_same_vars(t, u);
  std::vector<Word> out(t.words().begin(), t.words().end());
  const auto b = u.words();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] ^= b[i];
  return TruthTable(t.num_vars(), std::move(out));
}

TruthTable complement(const TruthTable& t) {
  std::vector<Word> out(t.words().begin(), t.words().end());
  for (Word& w : out) w = ~w;
  return TruthTable(t.num_vars(), std::move(out));  // re-masks the tail
}

TruthTable reverse(const TruthTable& t) {
  const auto in = t.words();
  std::vector<Word> out(in.size());
  if (t.num_vars() < 6) {
    out[0] = reverse_bits(in[0]) >> (64 - t.size());
  } else {
    for (std::size_t i = 0; i < in.size(); ++i) {
      out[in.size() - 1 - i] = reverse_bits(in[i]);
    }
  }
  return TruthTable(t.num_vars(), std::move(out));
}

TruthTable concat(const TruthTable& left, const TruthTable& right) {
  check_same_vars(left, right);
  const int n = left.num_vars();
  check_vars(n + 1);
  std::vector<Word> out;
  if (n < 6) {
    out.push_back(left.words()[0] | (right.words()[0] << left.size()));
  } else {
    out.reserve(2 * left.words().size());
    out.insert(out.end(), left.words().begin(), left.words().end());
    out.insert(out.end(), right.words().begin(), right.words().end());
  }
  return TruthTable(n + 1, std::move(out));
}

std::pair<TruthTable, TruthTable> halves(const TruthTable& t) {
  const int n = t.num_vars();
  if (n == 0) throw std::invalid_argument("halves requires at least one variable");
  const auto in = t.words();
  if (n <= 6) {
    const std::uint64_t half = t.size() / 2;
    const Word lo = in[0] & tail_mask(n - 1);
    const Word hi = (in[0] >> half) & tail_mask(n - 1);
    return {TruthTable(n - 1, {lo}), TruthTable(n - 1, {hi})};
  }
  const std::size_t half = in.size() / 2;
  return {TruthTable(n - 1, std::vector<Word>(in.begin(), in.begin() + half)),
          TruthTable(n - 1, std::vector<Word>(in.begin() + half, in.end()))};
}

int point_weight(std::uint64_t i, int n) {
  if (n < 0 || n > 64) throw std::invalid_argument("dimension out of range");
  if (n < 64 && (i >> n) != 0) throw std::out_of_range("point index out of range");
  return std::popcount(i);
}

// Text formats

TruthTable from_bitstring(std::string_view s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != '0' && s[i] != '1') {
      throw ParseError("invalid character '" + std::string(1, s[i]) +
                           "' at position " + std::to_string(i) +
                           " (expected 0 or 1)",
                       i);
    }
  }
  const int n = exact_log2(s.size());
  if (n < 0) {
    throw ParseError("bitstring length " + std::to_string(s.size()) +
                         " is not a power of two",
                     s.size());
  }
  if (n > max_vars()) {
    throw ParseError("bitstring has " + std::to_string(n) +
                         " variables, above the cap of " + std::to_string(max_vars()),
                     s.size());
  }
  return TruthTable::from_predicate(n, [&](std::uint64_t i) { return s[i] == '1'; });
}

std::string to_bitstring(const TruthTable& t) {
  std::string s(t.size(), '0');
  for (std::uint64_t i = 0; i < t.size(); ++i) {
    if (t.bit(i)) s[i] = '1';
  }
  return s;
}

TruthTable from_hex(std::string_view s) {
  if (s.size() < 2 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X')) {
    throw ParseError("hex table must start with 0x", 0);
  }
  const std::string_view digits = s.substr(2);
  std::vector<std::uint8_t> nibbles(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    int v = -1;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    if (v < 0) {
      throw ParseError("invalid hex digit '" + std::string(1, c) + "' at position " +
                           std::to_string(i + 2),
                       i + 2);
    }
    nibbles[i] = static_cast<std::uint8_t>(v);
  }
  const int n = exact_log2(digits.size() * 4);
  if (digits.empty() || n < 0) {
    throw ParseError("hex table of " + std::to_string(digits.size()) +
                         " digits does not hold a power-of-two number of bits",
                     s.size());
  }
  if (n > max_vars()) {
    throw ParseError("hex table has " + std::to_string(n) +
                         " variables, above the cap of " + std::to_string(max_vars()),
                     s.size());
  }
  return TruthTable::from_predicate(n, [&](std::uint64_t i) {
    return (nibbles[i >> 2] >> (3 - (i & 3))) & 1;
  });
}

std::string to_hex(const TruthTable& t) {
  if (t.num_vars() < 2) {
    throw std::invalid_argument("hex format needs at least 2 variables");
  }
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s = "0x";
  s.reserve(2 + t.size() / 4);
  for (std::uint64_t i = 0; i < t.size(); i += 4) {
    const int v = (t.bit(i) << 3) | (t.bit(i + 1) << 2) | (t.bit(i + 2) << 1) |
                  static_cast<int>(t.bit(i + 3));
    s.push_back(kDigits[v]);
  }
  return s;
}

TruthTable parse_table(std::string_view s) {
  if (s.size() >= 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) return from_hex(s);
  return from_bitstring(s);
}

std::string to_run_length(const TruthTable& t) {
  std::string out;
  std::uint64_t i = 0;
  while (i < t.size()) {
    const bool value = t.bit(i);
    std::uint64_t j = i + 1;
    while (j < t.size() && t.bit(j) == value) ++j;
    if (!out.empty()) out.push_back(' ');
    out.push_back(value ? '1' : '0');
    if (j - i > 1) out += "_" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace walshkit
