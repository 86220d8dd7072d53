#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "senslab/errors.hpp"
#include "senslab/point.hpp"

namespace senslab {

/// f: {0,1}^n -> {0,1} as 2^n packed bits; bit `index` holds f(point with that index).
/// Bits past 2^n in the last word are always zero.
class TruthTable {
 public:
  explicit TruthTable(unsigned n) : n_(n) {
    check_n(n);
    words_.assign(word_count(n), 0);
  }

  /// n <= 6: the table given directly as its low 2^n bits.
  TruthTable(unsigned n, std::uint64_t bits) : TruthTable(n) {
    if (n > 6) throw ParameterError("TruthTable(n, bits) requires n <= 6");
    words_[0] = bits & tail_mask();
  }

  template <class Fn>
  static TruthTable from_function(unsigned n, Fn&& fn) {
    TruthTable t(n);
    for (std::uint64_t x = 0; x < t.size(); ++x)
      if (fn(static_cast<std::uint32_t>(x))) t.set(static_cast<std::uint32_t>(x), true);
    return t;
  }

  static TruthTable constant(unsigned n, bool value) {
    TruthTable t(n);
    if (value) t = ~t;
    return t;
  }

  unsigned n() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  bool operator[](std::uint32_t index) const { return (words_[index >> 6] >> (index & 63)) & 1u; }
  bool at(Point x) const {
    require_same_dimension(x.n(), n_, "TruthTable::at");
    return (*this)[x.index()];
  }

  void set(std::uint32_t index, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (index & 63);
    if (value) {
      words_[index >> 6] |= bit;
    } else {
      words_[index >> 6] &= ~bit;
    }
  }
  void flip(std::uint32_t index) { words_[index >> 6] ^= std::uint64_t{1} << (index & 63); }

  std::uint64_t count_ones() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  std::vector<std::uint32_t> ones() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (std::uint64_t w = words_[i]; w != 0; w &= w - 1)
        out.push_back(static_cast<std::uint32_t>(i * 64 + std::countr_zero(w)));
    return out;
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> mutable_words() { return words_; }

  /// Mask of valid bits in the last word.
  std::uint64_t tail_mask() const { return n_ >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1u << n_)) - 1; }

  TruthTable operator~() const {
    TruthTable t(*this);
    for (auto& w : t.words_) w = ~w;
    t.words_.back() &= tail_mask();
    return t;
  }

  TruthTable& operator^=(const TruthTable& o) { return combine(o, [](auto a, auto b) { return a ^ b; }); }
  TruthTable& operator&=(const TruthTable& o) { return combine(o, [](auto a, auto b) { return a & b; }); }
  TruthTable& operator|=(const TruthTable& o) { return combine(o, [](auto a, auto b) { return a | b; }); }
  friend TruthTable operator^(TruthTable a, const TruthTable& b) { return a ^= b; }
  friend TruthTable operator&(TruthTable a, const TruthTable& b) { return a &= b; }
  friend TruthTable operator|(TruthTable a, const TruthTable& b) { return a |= b; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

  bool is_subset_of(const TruthTable& o) const {
    require_same_dimension(n_, o.n_, "TruthTable::is_subset_of");
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// '0'/'1' characters, position i = f(index i).
  std::string to_string() const {
    std::string s(size(), '0');
    for (std::uint64_t i = 0; i < size(); ++i)
      if ((*this)[static_cast<std::uint32_t>(i)]) s[i] = '1';
    return s;
  }

 private:
  static void check_n(unsigned n) {
    if (n < 1 || n > kMaxVars) throw ParameterError("TruthTable: n must be in [1, " + std::to_string(kMaxVars) + "]");
  }
  static std::size_t word_count(unsigned n) { return n >= 6 ? std::size_t{1} << (n - 6) : 1; }

  template <class Op>
  TruthTable& combine(const TruthTable& o, Op op) {
    require_same_dimension(n_, o.n_, "TruthTable");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] = op(words_[i], o.words_[i]);
    return *this;
  }

  unsigned n_;
  std::vector<std::uint64_t> words_;
};

/// Integer-valued function on the cube (Parity-rule output, Mobius coefficients indexed by set).
struct IntegerFunction {
  unsigned n = 1;
  std::vector<std::int64_t> values;

  IntegerFunction() = default;
  explicit IntegerFunction(unsigned n_vars) : n(n_vars), values(std::size_t{1} << n_vars, 0) {
    if (n_vars < 1 || n_vars > kMaxVars) throw ParameterError("IntegerFunction: n out of range");
  }
  static IntegerFunction from_table(const TruthTable& f) {
    IntegerFunction g(f.n());
    for (std::uint64_t x = 0; x < f.size(); ++x) g.values[x] = f[static_cast<std::uint32_t>(x)] ? 1 : 0;
    return g;
  }

  std::uint64_t size() const { return values.size(); }

  /// First index whose value is outside {0,1}, or size() if Boolean everywhere.
  std::uint64_t first_non_boolean() const {
    for (std::uint64_t i = 0; i < values.size(); ++i)
      if (values[i] != 0 && values[i] != 1) return i;
    return values.size();
  }
  bool is_boolean() const { return first_non_boolean() == values.size(); }

  TruthTable to_truth_table() const {
    if (!is_boolean()) throw ParameterError("IntegerFunction is not Boolean-valued");
    TruthTable t(n);
    for (std::uint64_t i = 0; i < values.size(); ++i)
      if (values[i] == 1) t.set(static_cast<std::uint32_t>(i), true);
    return t;
  }

  bool equals(const TruthTable& f) const {
    if (f.n() != n) return false;
    for (std::uint64_t i = 0; i < values.size(); ++i)
      if (values[i] != (f[static_cast<std::uint32_t>(i)] ? 1 : 0)) return false;
    return true;
  }

  friend bool operator==(const IntegerFunction&, const IntegerFunction&) = default;
};

/// Indicator table of a point set.
inline TruthTable indicator(unsigned n, std::span<const std::uint32_t> points) {
  TruthTable t(n);
  for (auto p : points) {
    if ((std::uint64_t{p} >> n) != 0) throw ParameterError("indicator: point out of range");
    t.set(p, true);
  }
  return t;
}

}  // namespace senslab
