#pragma once

// Packed truth tables of Boolean functions.
//
// Point order is lexicographic: v_0 = (0,...,0), v_1 = (0,...,0,1), ...
// so the coordinate x_1 is the most-significant bit of the point index and
// x_n the least-significant one. Table bit i holds f(v_i); bit i lives in
// word i / 64 at bit position i % 64.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace walshkit {

/// Upper bound on the variable count (2^30 bits = 128 MiB).
inline constexpr int kHardMaxVars = 30;

/// Environment variable that may lower the variable cap.
inline constexpr const char* kMaxVarsEnv = "WALSHKIT_MAX_N";

/// Effective variable cap: kHardMaxVars, or the value of WALSHKIT_MAX_N when
/// that is an integer in [0, kHardMaxVars]. Malformed values are ignored.
int max_vars();

/// Raised by the text parsers; position() is the 0-based character offset
/// of the first offending character (or the text length for length errors).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A point of V_n. coord(1) is x_1, the most-significant index bit.
class PointVector {
 public:
  PointVector(int n, std::uint64_t index);
  static PointVector from_coords(std::span<const std::uint8_t> coords);

  int num_vars() const noexcept { return n_; }
  std::uint64_t index() const noexcept { return index_; }
  bool coord(int j) const;
  int weight() const noexcept;

 private:
  int n_;
  std::uint64_t index_;
};

class TruthTable {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  /// The constant-zero function on zero variables.
  TruthTable() : TruthTable(0) {}

  /// The constant-zero function on n variables.
  explicit TruthTable(int n);

  /// Takes ownership of packed words. Bits past 2^n in the last word are
  /// cleared; the word count must be exactly words_for(n).
  TruthTable(int n, std::vector<Word> words);

  /// Builds a table by evaluating pred(i) for every point index i.
  template <class Pred>
  static TruthTable from_predicate(int n, Pred&& pred) {
    TruthTable t(n);
    const std::uint64_t len = t.size();
    for (std::uint64_t i = 0; i < len; ++i) {
      if (pred(i)) t.words_[i >> 6] |= Word{1} << (i & 63);
    }
    return t;
  }

  static std::size_t words_for(int n) noexcept {
    return n <= 6 ? 1 : std::size_t{1} << (n - 6);
  }

  int num_vars() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }
  std::span<const Word> words() const noexcept { return words_; }

  bool bit(std::uint64_t i) const;
  bool operator()(const PointVector& x) const;

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  void mask_tail() noexcept;

  int n_;
  std::vector<Word> words_;
};

/// Mask selecting the live bits of the single word of an n < 6 table.
constexpr TruthTable::Word tail_mask(int n) noexcept {
  return n >= 6 ? ~TruthTable::Word{0}
                : (TruthTable::Word{1} << (std::uint64_t{1} << n)) - 1;
}

std::uint64_t weight(const TruthTable& t) noexcept;

/// Hamming distance; throws std::invalid_argument if variable counts differ.
std::uint64_t distance(const TruthTable& t, const TruthTable& u);

TruthTable operator^(const TruthTable& t, const TruthTable& u);

TruthTable complement(const TruthTable& t);

/// Bit i of the result is bit 2^n - 1 - i of t.
TruthTable reverse(const TruthTable& t);

/// Juxtaposition: left fills indices [0, 2^n), right fills [2^n, 2^(n+1)).
TruthTable concat(const TruthTable& left, const TruthTable& right);

/// Inverse of concat. Requires n >= 1.
std::pair<TruthTable, TruthTable> halves(const TruthTable& t);

/// Weight of the point v_i in V_n.
int point_weight(std::uint64_t i, int n);

// Text formats.

/// '0'/'1' characters, left to right = index order; length a power of two.
TruthTable from_bitstring(std::string_view s);
std::string to_bitstring(const TruthTable& t);

/// "0x" prefix, then 4 table bits per hex digit with index 0 in the
/// most-significant bit of the first digit. Requires n >= 2.
TruthTable from_hex(std::string_view s);
std::string to_hex(const TruthTable& t);

/// from_hex when the text starts with "0x"/"0X", from_bitstring otherwise.
TruthTable parse_table(std::string_view s);

/// Run-length rendering such as "0_7 1 0_3 1 0 1_3": runs of length one
/// are a bare symbol, longer runs are symbol_length.
std::string to_run_length(const TruthTable& t);

}  // namespace walshkit
