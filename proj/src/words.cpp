#include "buchitop/words.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace buchitop {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.size() < 2)
    throw std::invalid_argument("alphabet needs at least two symbols");
  std::set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw std::invalid_argument("empty alphabet symbol");
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate alphabet symbol: " + s);
  }
}

Alphabet Alphabet::binary() { return Alphabet({"0", "1"}); }

std::optional<SymbolIndex> Alphabet::index_of(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == symbol) return static_cast<SymbolIndex>(i);
  return std::nullopt;
}

Alphabet pair_alphabet(const Alphabet& left, const Alphabet& right) {
  std::vector<std::string> symbols;
  symbols.reserve(left.size() * right.size());
  for (const auto& l : left.symbols())
    for (const auto& r : right.symbols()) symbols.push_back(l + "," + r);
  return Alphabet(std::move(symbols));
}

FiniteWord::FiniteWord(Alphabet a, std::vector<SymbolIndex> ls)
    : alphabet(std::move(a)), letters(std::move(ls)) {
  for (SymbolIndex l : letters)
    if (l >= alphabet.size()) throw std::invalid_argument("letter index out of range");
}

FiniteWord word_from_string(const Alphabet& alphabet, std::string_view text) {
  std::vector<SymbolIndex> letters;
  letters.reserve(text.size());
  for (char c : text) {
    auto idx = alphabet.index_of(std::string_view(&c, 1));
    if (!idx) throw std::invalid_argument(std::string("unknown symbol: ") + c);
    letters.push_back(*idx);
  }
  return FiniteWord(alphabet, std::move(letters));
}

namespace {

// Smallest d dividing |v| with v = (v[0..d))^{|v|/d}.
std::size_t primitive_root_length(const std::vector<SymbolIndex>& v) {
  for (std::size_t d = 1; d <= v.size(); ++d) {
    if (v.size() % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < v.size() && ok; ++i) ok = v[i] == v[i % d];
    if (ok) return d;
  }
  return v.size();
}

} // namespace

UPWord up_canonicalize(const Alphabet& alphabet, const std::vector<SymbolIndex>& u,
                       const std::vector<SymbolIndex>& v) {
  if (v.empty()) throw std::invalid_argument("empty period");
  for (SymbolIndex l : u)
    if (l >= alphabet.size()) throw std::invalid_argument("letter index out of range");
  for (SymbolIndex l : v)
    if (l >= alphabet.size()) throw std::invalid_argument("letter index out of range");

  std::vector<SymbolIndex> pre = u;
  std::vector<SymbolIndex> per(v.begin(), v.begin() + primitive_root_length(v));

  // Absorb trailing preperiod letters into the period: u·v^ω = u'·(rot v)^ω
  // whenever u ends with the last letter of v. Rotation keeps primitivity.
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    per.insert(per.begin(), per.back());
    per.pop_back();
  }
  return UPWord(alphabet, std::move(pre), std::move(per));
}

UPWord up_canonicalize(const FiniteWord& u, const FiniteWord& v) {
  if (u.alphabet != v.alphabet) throw std::invalid_argument("alphabet mismatch");
  return up_canonicalize(u.alphabet, u.letters, v.letters);
}

bool up_equal(const UPWord& x, const UPWord& y) {
  if (x.alphabet() != y.alphabet()) throw std::invalid_argument("alphabet mismatch");
  return x == y;
}

SymbolIndex up_letter_at(const UPWord& x, std::uint64_t i) {
  if (i < x.preperiod().size()) return x.preperiod()[i];
  return x.period()[(i - x.preperiod().size()) % x.period().size()];
}

bool is_in_pinf(const UPWord& x) {
  if (x.alphabet() != Alphabet::binary()) throw std::invalid_argument("alphabet is not {0,1}");
  return std::find(x.period().begin(), x.period().end(), SymbolIndex{1}) != x.period().end();
}

UPWord xn(unsigned n) {
  if (n == 0) throw std::invalid_argument("xn requires n >= 1");
  std::uint64_t fact = 1;
  for (unsigned i = 2; i <= n; ++i) {
    if (fact > (1u << 24)) throw std::invalid_argument("xn: n too large for desk scale");
    fact *= i;
  }
  std::vector<SymbolIndex> pre(fact, 0);
  pre.push_back(1);
  return up_canonicalize(Alphabet::binary(), pre, {0});
}

std::uint32_t Dyadic::exponent() const {
  if (zero_) throw std::logic_error("zero Dyadic has no exponent");
  return exponent_;
}

std::string Dyadic::to_string() const {
  if (zero_) return "0";
  if (exponent_ == 0) return "1";
  if (exponent_ >= 63) return "1/2^" + std::to_string(exponent_);
  return "1/" + std::to_string(std::uint64_t{1} << exponent_);
}

std::partial_ordering Dyadic::operator<=>(const Dyadic& other) const {
  if (zero_ && other.zero_) return std::partial_ordering::equivalent;
  if (zero_) return std::partial_ordering::less;
  if (other.zero_) return std::partial_ordering::greater;
  // larger exponent = smaller value
  if (exponent_ == other.exponent_) return std::partial_ordering::equivalent;
  return exponent_ > other.exponent_ ? std::partial_ordering::less
                                     : std::partial_ordering::greater;
}

Dyadic prefix_distance(const UPWord& x, const UPWord& y) {
  if (x.alphabet() != y.alphabet()) throw std::invalid_argument("alphabet mismatch");
  if (x == y) return Dyadic::zero();
  // Canonical distinct words must differ within one joint preperiod + period.
  std::uint64_t bound = x.preperiod().size() + y.preperiod().size() +
                        std::lcm<std::uint64_t>(x.period().size(), y.period().size());
  for (std::uint64_t i = 0; i <= bound; ++i)
    if (up_letter_at(x, i) != up_letter_at(y, i))
      return Dyadic::one_over_pow2(static_cast<std::uint32_t>(i));
  throw std::logic_error("distinct canonical UPWords agree on the deciding prefix");
}

} // namespace buchitop
