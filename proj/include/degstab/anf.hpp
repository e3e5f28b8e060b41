// Copyright 2026 The degstab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEGSTAB_ANF_HPP
#define DEGSTAB_ANF_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "degstab/bits.hpp"
#include "degstab/error.hpp"
#include "degstab/f2_matrix.hpp"

namespace degstab {

/// Algebraic degree: a value in [0, n], or -inf for the zero function. There
/// is deliberately no arithmetic on this type.
class Degree {
 public:
  static constexpr Degree neg_inf() noexcept { return Degree(); }
  constexpr explicit Degree(int v) noexcept : finite_(true), value_(v) {}

  constexpr bool is_neg_inf() const noexcept { return !finite_; }
  constexpr bool is_finite() const noexcept { return finite_; }

  int value() const {
    if (!finite_) fail(ErrorCode::OutOfRange, "degree of the zero function is -inf");
    return value_;
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : std::string("-inf"); }

  friend constexpr bool operator==(const Degree&, const Degree&) = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) noexcept {
    if (a.finite_ != b.finite_) return a.finite_ <=> b.finite_;
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Degree() noexcept = default;
  bool finite_ = false;
  int value_ = 0;
};

/// Truth table: bit x is f(x), with bit i-1 of x holding x_i.
class TruthTable {
 public:
  explicit TruthTable(int n) : bits_(n) {}
  explicit TruthTable(BitTable bits) : bits_(std::move(bits)) {}

  /// bits.size() must be a power of two.
  static TruthTable from_bits(std::span<const std::uint8_t> bits) {
    const std::size_t len = bits.size();
    if (len == 0 || (len & (len - 1)) != 0) fail(ErrorCode::InvalidLength, "length is not a power of two");
    const int n = std::countr_zero(len);
    TruthTable t(n);
    for (std::size_t i = 0; i < len; ++i) {
      if (bits[i]) t.bits_.set(i, true);
    }
    return t;
  }

  /// String of '0'/'1' characters, entry x at position x.
  static TruthTable from_string(std::string_view s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char c : s) {
      if (c != '0' && c != '1') fail(ErrorCode::SyntaxError, "truth table characters must be 0 or 1");
      bits.push_back(c == '1');
    }
    return from_bits(bits);
  }

  int num_vars() const noexcept { return bits_.num_vars(); }
  bool at(Mask x) const noexcept { return bits_.get(x); }
  void set(Mask x, bool v) noexcept { bits_.set(x, v); }
  std::uint64_t weight() const noexcept { return bits_.count(); }

  const BitTable& bits() const noexcept { return bits_; }
  BitTable& bits() noexcept { return bits_; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  BitTable bits_;
};

/// Boolean function in algebraic normal form: coefficient bit m is the
/// coefficient of the monomial prod_{i : bit i-1 of m} x_i.
class Anf {
 public:
  Anf() : Anf(0) {}
  explicit Anf(int n) : coeffs_(n) {}
  explicit Anf(BitTable coeffs) : coeffs_(std::move(coeffs)) {}

  static Anf constant(int n, bool value) {
    Anf f(n);
    if (value) f.coeffs_.set(0, true);
    return f;
  }

  static Anf monomial(int n, Mask m) {
    Anf f(n);
    f.check_mask(m);
    f.coeffs_.set(m, true);
    return f;
  }

  /// Sum over F_2, so repeated masks cancel.
  static Anf from_monomials(int n, std::span<const Mask> masks) {
    Anf f(n);
    for (Mask m : masks) f.toggle(m);
    return f;
  }

  int num_vars() const noexcept { return coeffs_.num_vars(); }
  bool coeff(Mask m) const noexcept { return coeffs_.get(m); }

  void toggle(Mask m) {
    check_mask(m);
    coeffs_.flip(m);
  }

  const BitTable& coefficients() const noexcept { return coeffs_; }

  /// Monomial masks with nonzero coefficient, ascending.
  std::vector<Mask> monomials() const {
    std::vector<Mask> out;
    const auto words = coeffs_.words();
    for (std::size_t j = 0; j < words.size(); ++j) {
      std::uint64_t w = words[j];
      while (w != 0) {
        const int b = std::countr_zero(w);
        out.push_back(static_cast<Mask>(j * 64 + static_cast<std::size_t>(b)));
        w &= w - 1;
      }
    }
    return out;
  }

  std::uint64_t term_count() const noexcept { return coeffs_.count(); }
  bool is_zero() const noexcept { return coeffs_.none(); }

  Degree degree() const noexcept {
    const int d = coeffs_.max_set_weight();
    return d < 0 ? Degree::neg_inf() : Degree(d);
  }

  /// Nonzero with all monomials of one degree.
  bool is_homogeneous() const {
    int d = -1;
    for (Mask m : monomials()) {
      if (d < 0) {
        d = popcount(m);
      } else if (popcount(m) != d) {
        return false;
      }
    }
    return d >= 0;
  }

  /// Var(f) as a mask.
  Mask vars() const {
    Mask v = 0;
    for (Mask m : monomials()) v |= m;
    return v;
  }

  Anf& operator+=(const Anf& o) {
    coeffs_ ^= o.coeffs_;
    return *this;
  }
  friend Anf operator+(Anf a, const Anf& b) { return a += b; }

  friend bool operator==(const Anf&, const Anf&) = default;

 private:
  void check_mask(Mask m) const {
    if ((m & ~low_bits(num_vars())) != 0) fail(ErrorCode::VariableIndexOutOfRange, "monomial uses a variable beyond n");
  }

  BitTable coeffs_;
};

inline TruthTable to_truth_table(const Anf& f) {
  BitTable t = f.coefficients();
  t.mobius();
  return TruthTable(std::move(t));
}

inline Anf from_truth_table(const TruthTable& t) {
  BitTable c = t.bits();
  c.mobius();
  return Anf(std::move(c));
}

inline Anf from_truth_table(std::span<const std::uint8_t> bits) {
  return from_truth_table(TruthTable::from_bits(bits));
}

inline bool evaluate(const Anf& f, Mask x) {
  bool v = false;
  for (Mask m : f.monomials()) {
    if ((m & ~x) == 0) v = !v;
  }
  return v;
}

/// Hamming weight of the truth table.
inline std::uint64_t weight(const Anf& f) { return to_truth_table(f).weight(); }

namespace detail {

// out[x] = in[x ^ a].
inline BitTable translate(const BitTable& in, Mask a) {
  const int n = in.num_vars();
  BitTable out(n);
  const auto src = in.words();
  auto dst = out.words();
  const std::size_t hi = static_cast<std::size_t>(a >> 6);
  for (std::size_t j = 0; j < src.size(); ++j) {
    std::uint64_t w = src[j ^ hi];
    for (int i = 0; i < std::min(n, 6); ++i) {
      if ((a >> i) & 1u) {
        const int s = 1 << i;
        const std::uint64_t lo = kLowHalf[static_cast<std::size_t>(i)];
        w = ((w & lo) << s) | ((w >> s) & lo);
      }
    }
    dst[j] = w;
  }
  return out;
}

}  // namespace detail

/// D_a f = f(x + a) + f(x).
inline Anf derivative(const Anf& f, Mask a) {
  if (a == 0) fail(ErrorCode::ZeroDirection, "derivative direction must be nonzero");
  if ((a & ~low_bits(f.num_vars())) != 0) fail(ErrorCode::VariableIndexOutOfRange, "direction wider than n");
  BitTable t = f.coefficients();
  t.mobius();
  BitTable d = detail::translate(t, a);
  d ^= t;
  d.mobius();
  return Anf(std::move(d));
}

/// D_{a1}(D_{a2}(... D_{ak} f)); directions must be linearly independent.
inline Anf iterated_derivative(const Anf& f, std::span<const Mask> directions) {
  if (rank_masks(directions) != directions.size()) {
    fail(ErrorCode::DependentDirections, "derivative directions are linearly dependent");
  }
  Anf g = f;
  for (auto it = directions.rbegin(); it != directions.rend(); ++it) g = derivative(g, *it);
  return g;
}

/// Replaces each monomial by the product of the variables it misses.
inline Anf complement(const Anf& f) {
  if (f.is_zero()) return f;
  if (!f.is_homogeneous()) fail(ErrorCode::NotHomogeneous, "complement needs a homogeneous function");
  const Mask all = low_bits(f.num_vars());
  Anf g(f.num_vars());
  for (Mask m : f.monomials()) g.toggle(all & ~m);
  return g;
}

/// f o phi with phi(x) = M x + a (x as a column vector).
inline Anf compose_affine(const Anf& f, const F2Matrix& m, Mask a) {
  const int n = f.num_vars();
  if (m.rows() != static_cast<std::size_t>(n) || m.cols() != static_cast<std::size_t>(n)) {
    fail(ErrorCode::DimensionMismatch, "matrix must be n x n");
  }
  if (!is_invertible(m)) fail(ErrorCode::SingularMatrix, "affine map is not invertible");
  if ((a & ~low_bits(n)) != 0) fail(ErrorCode::VariableIndexOutOfRange, "translation wider than n");
  std::vector<Mask> columns(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (m.get(static_cast<std::size_t>(r), static_cast<std::size_t>(c))) columns[static_cast<std::size_t>(c)] |= Mask{1} << r;
    }
  }
  const TruthTable tf = to_truth_table(f);
  TruthTable tg(n);
  // x runs over Gray order; the image tracks it by column XORs.
  Mask image = a;
  Mask x = 0;
  tg.set(0, tf.at(image));
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int bit = std::countr_zero(step);
    x ^= Mask{1} << bit;
    image ^= columns[static_cast<std::size_t>(bit)];
    tg.set(x, tf.at(image));
  }
  return from_truth_table(tg);
}

/// Product in F_2[x]/(x_i^2 + x_i), via pointwise AND of truth tables.
inline Anf multiply(const Anf& f, const Anf& g) {
  if (f.num_vars() != g.num_vars()) fail(ErrorCode::DimensionMismatch, "factors over different variable counts");
  BitTable a = f.coefficients();
  BitTable b = g.coefficients();
  a.mobius();
  b.mobius();
  a &= b;
  a.mobius();
  return Anf(std::move(a));
}

inline Anf homogeneous_part(const Anf& f, int r) {
  Anf g(f.num_vars());
  for (Mask m : f.monomials()) {
    if (popcount(m) == r) g.toggle(m);
  }
  return g;
}

/// Degree-deg(f) part; the zero function maps to itself.
inline Anf top_part(const Anf& f) {
  const Degree d = f.degree();
  return d.is_neg_inf() ? f : homogeneous_part(f, d.value());
}

/// Equal coefficients across monomials of equal degree.
inline bool is_symmetric(const Anf& f) {
  const int n = f.num_vars();
  std::vector<int> seen(static_cast<std::size_t>(n) + 1, -1);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    const auto w = static_cast<std::size_t>(std::popcount(m));
    const int c = f.coeff(static_cast<Mask>(m)) ? 1 : 0;
    if (seen[w] < 0) {
      seen[w] = c;
    } else if (seen[w] != c) {
      return false;
    }
  }
  return true;
}

/// The same polynomial viewed over n' >= n variables.
inline Anf extend_vars(const Anf& f, int new_n) {
  if (new_n < f.num_vars()) fail(ErrorCode::OutOfRange, "cannot shrink the variable count");
  Anf g(new_n);
  for (Mask m : f.monomials()) g.toggle(m);
  return g;
}

// Text form. Grammar, whitespace ignored:
//   function := "0" | term ("+" term)*
//   term     := "1" | digits | xprod
//   digits   := [1-9]+            (each digit a variable index; n <= 9)
//   xprod    := "x" int ("*" "x" int)*
// A lone "1" is the constant term; x_1 alone is written "x1".

namespace detail {

inline std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  return s;
}

inline Mask variable_bit(long index, int n) {
  if (index < 1 || index > n) {
    fail(ErrorCode::VariableIndexOutOfRange, "variable x" + std::to_string(index) + " outside 1.." + std::to_string(n));
  }
  return Mask{1} << (index - 1);
}

inline Mask parse_term(std::string_view t, int n) {
  if (t.empty()) fail(ErrorCode::SyntaxError, "empty term");
  if (t == "1") return 0;
  if (t.front() == 'x') {
    Mask m = 0;
    std::size_t pos = 0;
    while (true) {
      if (pos >= t.size() || t[pos] != 'x') fail(ErrorCode::SyntaxError, "expected 'x' in term '" + std::string(t) + "'");
      ++pos;
      const std::size_t start = pos;
      long index = 0;
      while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
        index = index * 10 + (t[pos] - '0');
        if (index > 1000000) fail(ErrorCode::VariableIndexOutOfRange, "variable index too large");
        ++pos;
      }
      if (pos == start) fail(ErrorCode::SyntaxError, "missing variable index in '" + std::string(t) + "'");
      m |= variable_bit(index, n);
      if (pos == t.size()) break;
      if (t[pos] != '*') fail(ErrorCode::SyntaxError, "unexpected character in '" + std::string(t) + "'");
      ++pos;
    }
    return m;
  }
  Mask m = 0;
  for (char c : t) {
    if (c < '1' || c > '9') fail(ErrorCode::SyntaxError, "bad character in term '" + std::string(t) + "'");
    if (n > 9) fail(ErrorCode::SyntaxError, "digit notation needs n <= 9; use x-notation");
    m |= variable_bit(c - '0', n);
  }
  return m;
}

inline bool monomial_text_less(Mask a, Mask b) {
  if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
  // Lexicographic on the ascending variable lists.
  while (a != 0 && b != 0) {
    const int ia = std::countr_zero(a);
    const int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

}  // namespace detail

inline Anf parse_anf(std::string_view text, int n) {
  if (n < 0 || n > kMaxVars) fail(ErrorCode::OutOfRange, "variable count must be in [0, 31]");
  const std::string s = detail::strip_spaces(text);
  if (s.empty()) fail(ErrorCode::SyntaxError, "empty function text");
  Anf f(n);
  if (s == "0") return f;
  std::size_t start = 0;
  while (true) {
    const std::size_t plus = s.find('+', start);
    const std::string_view term = std::string_view(s).substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    f.toggle(detail::parse_term(term, n));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return f;
}

enum class AnfNotation { Auto, Digits, XProduct };

/// Monomials by decreasing degree, then lexicographically. Auto picks digit
/// notation when n <= 9; degree-1 monomials are always written "xi".
inline std::string format_anf(const Anf& f, AnfNotation notation = AnfNotation::Auto) {
  const int n = f.num_vars();
  if (notation == AnfNotation::Auto) notation = n <= 9 ? AnfNotation::Digits : AnfNotation::XProduct;
  if (notation == AnfNotation::Digits && n > 9) fail(ErrorCode::OutOfRange, "digit notation needs n <= 9");
  std::vector<Mask> ms = f.monomials();
  if (ms.empty()) return "0";
  std::sort(ms.begin(), ms.end(), detail::monomial_text_less);
  std::string out;
  for (Mask m : ms) {
    if (!out.empty()) out += '+';
    if (m == 0) {
      out += '1';
    } else if (notation == AnfNotation::Digits && popcount(m) >= 2) {
      for (Mask r = m; r != 0; r &= r - 1) out += static_cast<char>('1' + std::countr_zero(r));
    } else {
      bool first = true;
      for (Mask r = m; r != 0; r &= r - 1) {
        if (!first) out += '*';
        out += 'x' + std::to_string(std::countr_zero(r) + 1);
        first = false;
      }
    }
  }
  return out;
}

/// Linear change of variables written as "1<-1+3, 2<-2+5+7" (or with the
/// arrow character). Each target x_i is replaced, simultaneously, by the sum
/// on its right; untouched variables stay fixed. Row i of the result is the
/// substituted linear form, so f o phi_M applies the change to f.
inline F2Matrix parse_substitution(std::string_view text, int n) {
  std::string s = detail::strip_spaces(text);
  for (std::size_t p = s.find("\xE2\x86\x90"); p != std::string::npos; p = s.find("\xE2\x86\x90")) s.replace(p, 3, "<-");
  F2Matrix m = F2Matrix::identity(static_cast<std::size_t>(n));
  std::size_t start = 0;
  auto parse_var = [n](std::string_view tok) -> int {
    if (!tok.empty() && tok.front() == 'x') tok.remove_prefix(1);
    if (tok.empty()) fail(ErrorCode::SyntaxError, "missing variable index");
    long v = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(ErrorCode::SyntaxError, "bad variable '" + std::string(tok) + "'");
      v = v * 10 + (c - '0');
      if (v > 1000000) break;
    }
    detail::variable_bit(v, n);
    return static_cast<int>(v - 1);
  };
  while (start < s.size()) {
    std::size_t end = s.find_first_of(",;", start);
    if (end == std::string::npos) end = s.size();
    const std::string_view item = std::string_view(s).substr(start, end - start);
    const std::size_t arrow = item.find("<-");
    if (arrow == std::string_view::npos) fail(ErrorCode::SyntaxError, "substitution needs '<-'");
    const int target = parse_var(item.substr(0, arrow));
    F2Vector row(static_cast<std::size_t>(n));
    std::string_view rhs = item.substr(arrow + 2);
    while (true) {
      const std::size_t plus = rhs.find('+');
      row.flip(static_cast<std::size_t>(parse_var(rhs.substr(0, plus))));
      if (plus == std::string_view::npos) break;
      rhs.remove_prefix(plus + 1);
    }
    m.row(static_cast<std::size_t>(target)) = row;
    start = end + 1;
  }
  return m;
}

}  // namespace degstab

#endif  // DEGSTAB_ANF_HPP
