#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace buchitop {

using SymbolIndex = std::uint32_t;

/// Ordered finite alphabet with at least two distinct symbols.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> symbols);

  static Alphabet binary(); // {0, 1}

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(SymbolIndex i) const { return symbols_.at(i); }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<SymbolIndex> index_of(std::string_view symbol) const;

  bool operator==(const Alphabet&) const = default;

private:
  std::vector<std::string> symbols_;
};

/// Product alphabet identifying pairs of letters with single letters;
/// symbols are rendered "a,b" and indexed left-major.
Alphabet pair_alphabet(const Alphabet& left, const Alphabet& right);

inline SymbolIndex pair_index(const Alphabet& right, SymbolIndex l, SymbolIndex r) {
  return l * static_cast<SymbolIndex>(right.size()) + r;
}

struct FiniteWord {
  Alphabet alphabet;
  std::vector<SymbolIndex> letters;

  FiniteWord(Alphabet a, std::vector<SymbolIndex> ls);

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  bool operator==(const FiniteWord&) const = default;
};

/// Convenience for single-character alphabets: "010" over {0,1}.
FiniteWord word_from_string(const Alphabet& alphabet, std::string_view text);

/// Canonical ultimately periodic word u·v^ω: the period is primitive and the
/// preperiod cannot be shortened by rotating the period. Two UPWords denote
/// the same ω-word exactly when they are field-equal.
class UPWord {
public:
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<SymbolIndex>& preperiod() const { return preperiod_; }
  const std::vector<SymbolIndex>& period() const { return period_; }

  FiniteWord preperiod_word() const { return FiniteWord(alphabet_, preperiod_); }
  FiniteWord period_word() const { return FiniteWord(alphabet_, period_); }

  bool operator==(const UPWord&) const = default;

private:
  UPWord(Alphabet a, std::vector<SymbolIndex> u, std::vector<SymbolIndex> v)
      : alphabet_(std::move(a)), preperiod_(std::move(u)), period_(std::move(v)) {}

  friend UPWord up_canonicalize(const Alphabet&, const std::vector<SymbolIndex>&,
                                const std::vector<SymbolIndex>&);

  Alphabet alphabet_;
  std::vector<SymbolIndex> preperiod_;
  std::vector<SymbolIndex> period_;
};

UPWord up_canonicalize(const Alphabet& alphabet, const std::vector<SymbolIndex>& u,
                       const std::vector<SymbolIndex>& v);
UPWord up_canonicalize(const FiniteWord& u, const FiniteWord& v);

bool up_equal(const UPWord& x, const UPWord& y);

SymbolIndex up_letter_at(const UPWord& x, std::uint64_t i);

/// x has infinitely many 1s (binary alphabet only).
bool is_in_pinf(const UPWord& x);

/// The word 0^{n!}·1·0^ω used by the non-completeness argument.
UPWord xn(unsigned n);

/// Exactly 0 or 1/2^n, stored as the exponent.
class Dyadic {
public:
  static Dyadic zero() { return Dyadic(true, 0); }
  static Dyadic one_over_pow2(std::uint32_t n) { return Dyadic(false, n); }

  bool is_zero() const { return zero_; }
  std::uint32_t exponent() const; // requires a nonzero value

  std::string to_string() const; // "0", "1", "1/2", "1/4", ...

  bool operator==(const Dyadic&) const = default;
  std::partial_ordering operator<=>(const Dyadic& other) const;

private:
  Dyadic(bool z, std::uint32_t e) : zero_(z), exponent_(e) {}
  bool zero_;
  std::uint32_t exponent_;
};

/// Cantor prefix metric: 0 if equal, else 1/2^r with r the first differing
/// position.
Dyadic prefix_distance(const UPWord& x, const UPWord& y);

} // namespace buchitop
