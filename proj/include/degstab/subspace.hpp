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

#ifndef DEGSTAB_SUBSPACE_HPP
#define DEGSTAB_SUBSPACE_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "degstab/anf.hpp"
#include "degstab/bits.hpp"
#include "degstab/error.hpp"
#include "degstab/f2_matrix.hpp"

namespace degstab {

/// Linear subspace {x : a.x = 0 for every defining form a}, stored by its
/// canonical annihilator basis: reduced echelon masks sorted by pivot, where
/// the pivot of a form is its lowest set bit.
class LinearSubspace {
 public:
  LinearSubspace() = default;

  /// Forms must be linearly independent; they are brought to canonical form.
  static LinearSubspace from_forms(int n, std::span<const Mask> forms) {
    check_width(n, forms);
    MaskEchelon ech = rref_masks(forms);
    if (ech.rows.size() != forms.size()) fail(ErrorCode::DependentDirections, "defining forms are linearly dependent");
    LinearSubspace s;
    s.n_ = n;
    s.forms_ = std::move(ech.rows);
    return s;
  }

  /// Trusts the caller that forms are already canonical.
  static LinearSubspace from_canonical(int n, std::vector<Mask> forms) {
    LinearSubspace s;
    s.n_ = n;
    s.forms_ = std::move(forms);
    return s;
  }

  int num_vars() const noexcept { return n_; }
  int codim() const noexcept { return static_cast<int>(forms_.size()); }
  int dim() const noexcept { return n_ - codim(); }
  const std::vector<Mask>& forms() const noexcept { return forms_; }

  bool contains_point(Mask x) const noexcept {
    return std::all_of(forms_.begin(), forms_.end(), [x](Mask a) { return parity(a & x) == 0; });
  }

  friend bool operator==(const LinearSubspace&, const LinearSubspace&) = default;

 private:
  static void check_width(int n, std::span<const Mask> forms) {
    if (n < 0 || n > kMaxVars) fail(ErrorCode::OutOfRange, "variable count must be in [0, 31]");
    for (Mask a : forms) {
      if ((a & ~low_bits(n)) != 0) fail(ErrorCode::DimensionMismatch, "form wider than n");
    }
  }

  int n_ = 0;
  std::vector<Mask> forms_;
};

struct FormsHash {
  std::size_t operator()(const std::vector<Mask>& forms) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Mask a : forms) {
      h ^= a;
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
  std::size_t operator()(const LinearSubspace& s) const noexcept {
    return (*this)(s.forms()) ^ static_cast<std::size_t>(s.num_vars());
  }
};

/// {x : forms[i].x = bit i of constants}.
class AffineSubspace {
 public:
  AffineSubspace() = default;
  explicit AffineSubspace(LinearSubspace linear, Mask constants = 0)
      : linear_(std::move(linear)), constants_(constants & low_bits(linear_.codim())) {}

  /// Independent equations forms[i].x = bit i of constants; reduced jointly.
  static AffineSubspace from_equations(int n, std::span<const Mask> forms, Mask constants_in) {
    // Carry the constant as an extra high column during elimination.
    std::vector<std::uint64_t> rows;
    for (std::size_t i = 0; i < forms.size(); ++i) {
      if ((forms[i] & ~low_bits(n)) != 0) fail(ErrorCode::DimensionMismatch, "form wider than n");
      rows.push_back(std::uint64_t{forms[i]} | (std::uint64_t{(constants_in >> i) & 1u} << 32));
    }
    std::size_t r = 0;
    for (int c = 0; c < n && r < rows.size(); ++c) {
      const std::uint64_t bit = std::uint64_t{1} << c;
      std::size_t sel = r;
      while (sel < rows.size() && !(rows[sel] & bit)) ++sel;
      if (sel == rows.size()) continue;
      std::swap(rows[sel], rows[r]);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
      }
      ++r;
    }
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (rows[i] != 0) fail(ErrorCode::InconsistentSystem, "equations have no common solution");
    }
    if (r != rows.size()) fail(ErrorCode::DependentDirections, "defining forms are linearly dependent");
    std::vector<Mask> canon;
    Mask constants = 0;
    for (std::size_t i = 0; i < r; ++i) {
      canon.push_back(static_cast<Mask>(rows[i] & 0xFFFFFFFFull));
      if (rows[i] >> 32) constants |= Mask{1} << i;
    }
    return AffineSubspace(LinearSubspace::from_canonical(n, std::move(canon)), constants);
  }

  const LinearSubspace& linear() const noexcept { return linear_; }
  Mask constants() const noexcept { return constants_; }
  int num_vars() const noexcept { return linear_.num_vars(); }
  int codim() const noexcept { return linear_.codim(); }

  bool contains_point(Mask x) const noexcept {
    const auto& f = linear_.forms();
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (parity(f[i] & x) != static_cast<int>((constants_ >> i) & 1u)) return false;
    }
    return true;
  }

  friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;

 private:
  LinearSubspace linear_;
  Mask constants_ = 0;
};

/// A parameterization x = offset + sum y_i basis[i] of an affine subspace.
struct Parameterization {
  Mask offset = 0;
  std::vector<Mask> basis;
};

/// Basis from canonical forms: one vector per non-pivot column j, namely e_j
/// plus e_p for every form with pivot p that has bit j. The offset sets
/// x_p = constant of that form and all free coordinates to zero.
inline Parameterization parameterize(int n, std::span<const Mask> forms, Mask constants = 0) {
  Parameterization p;
  Mask pivots = 0;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Mask pv = forms[i] & (~forms[i] + 1);
    pivots |= pv;
    if ((constants >> i) & 1u) p.offset |= pv;
  }
  for (int j = 0; j < n; ++j) {
    const Mask ej = Mask{1} << j;
    if (pivots & ej) continue;
    Mask v = ej;
    for (Mask a : forms) {
      if (a & ej) v |= a & (~a + 1);
    }
    p.basis.push_back(v);
  }
  return p;
}

inline Parameterization parameterize(const AffineSubspace& a) {
  return parameterize(a.num_vars(), a.linear().forms(), a.constants());
}

/// Coefficients of y -> f(offset + sum y_i basis[i]) written into `out`
/// (which must have basis.size() variables).
inline void restrict_table(const TruthTable& tt, const Parameterization& p, BitTable& out) {
  auto words = out.words();
  std::fill(words.begin(), words.end(), 0);
  for_each_span_point(p.offset, p.basis, [&](std::uint64_t y, Mask x) {
    if (tt.at(x)) out.set(y, true);
  });
  out.mobius();
}

/// ANF of f restricted to A, as a function of n - codim(A) variables.
inline Anf restrict_to(const Anf& f, const AffineSubspace& a) {
  if (a.num_vars() != f.num_vars()) fail(ErrorCode::DimensionMismatch, "subspace and function differ in n");
  const Parameterization p = parameterize(a);
  BitTable out(static_cast<int>(p.basis.size()));
  restrict_table(to_truth_table(f), p, out);
  return Anf(std::move(out));
}

inline Anf restrict_to(const Anf& f, const LinearSubspace& v) { return restrict_to(f, AffineSubspace(v)); }

/// V is a subset of W: every form of W lies in the row space of V's forms.
inline bool contains(const LinearSubspace& v, const LinearSubspace& w) {
  if (v.num_vars() != w.num_vars()) fail(ErrorCode::DimensionMismatch, "subspaces differ in n");
  MaskEchelon ech;
  ech.rows = v.forms();
  for (Mask a : ech.rows) ech.pivots.push_back(std::countr_zero(a));
  return std::all_of(w.forms().begin(), w.forms().end(), [&](Mask a) { return reduce_mask(ech, a) == 0; });
}

/// ANF of the 0/1 indicator of A; its degree is codim(A).
inline Anf indicator(const AffineSubspace& a) {
  const int n = a.num_vars();
  TruthTable t(n);
  const Parameterization p = parameterize(a);
  for_each_span_point(p.offset, p.basis, [&](std::uint64_t, Mask x) { t.set(x, true); });
  return from_truth_table(t);
}

// Enumeration of co-dimension k linear subspaces. Order: pivot tuples
// p_1 < ... < p_k ascending lexicographically; inside one pivot tuple the free
// entries (row-major, columns ascending) count in binary with the last free
// entry least significant.

class CodimEnumerator {
 public:
  CodimEnumerator(int n, int k) : n_(n), k_(k) {
    if (n < 1 || n > kMaxVars) fail(ErrorCode::OutOfRange, "variable count must be in [1, 31]");
    if (k < 1 || k > n) fail(ErrorCode::OutOfRange, "co-dimension must be in [1, n]");
    pivots_.resize(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pivots_[static_cast<std::size_t>(i)] = i;
    forms_.resize(static_cast<std::size_t>(k));
    setup_pivots();
  }

  /// Advances to the next subspace; false once exhausted. The first call
  /// yields the first subspace.
  bool next() {
    if (done_) return false;
    if (!started_) {
      started_ = true;
    } else if (counter_ + 1 < (std::uint64_t{1} << free_.size())) {
      ++counter_;
      ++index_;
    } else {
      if (!advance_pivots()) {
        done_ = true;
        return false;
      }
      setup_pivots();
      ++index_;
    }
    fill_forms();
    return true;
  }

  const std::vector<Mask>& forms() const noexcept { return forms_; }
  std::uint64_t index() const noexcept { return index_; }
  LinearSubspace current() const { return LinearSubspace::from_canonical(n_, forms_); }

 private:
  struct FreeEntry {
    std::size_t row;
    Mask bit;
  };

  bool advance_pivots() {
    int i = k_ - 1;
    while (i >= 0 && pivots_[static_cast<std::size_t>(i)] == n_ - k_ + i) --i;
    if (i < 0) return false;
    ++pivots_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k_; ++j) pivots_[static_cast<std::size_t>(j)] = pivots_[static_cast<std::size_t>(j - 1)] + 1;
    return true;
  }

  void setup_pivots() {
    free_.clear();
    Mask pivot_mask = 0;
    for (int p : pivots_) pivot_mask |= Mask{1} << p;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      for (int c = pivots_[r] + 1; c < n_; ++c) {
        if (!(pivot_mask & (Mask{1} << c))) free_.push_back({r, Mask{1} << c});
      }
    }
    counter_ = 0;
  }

  void fill_forms() {
    for (std::size_t r = 0; r < pivots_.size(); ++r) forms_[r] = Mask{1} << pivots_[r];
    const std::size_t f = free_.size();
    for (std::size_t i = 0; i < f; ++i) {
      if ((counter_ >> (f - 1 - i)) & 1u) forms_[free_[i].row] |= free_[i].bit;
    }
  }

  int n_;
  int k_;
  std::vector<int> pivots_;
  std::vector<FreeEntry> free_;
  std::vector<Mask> forms_;
  std::uint64_t counter_ = 0;
  std::uint64_t index_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Calls fn(index, forms) for each co-dimension k subspace in canonical order.
template <typename Fn>
void for_each_codim(int n, int k, Fn&& fn) {
  CodimEnumerator e(n, k);
  while (e.next()) fn(e.index(), std::span<const Mask>(e.forms()));
}

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Parallel walk: worker t handles indices with index % T == t and gets
/// fn(t, index, forms). Each worker walks the whole stream, so no ordering is
/// implied; callers restore canonical order by index. A set `stop` flag ends
/// all walks early.
template <typename Fn>
void parallel_for_codim(int n, int k, unsigned threads, Fn&& fn, std::atomic<bool>* stop = nullptr) {
  const unsigned t_count = resolve_threads(threads);
  auto work = [&](unsigned t) {
    CodimEnumerator e(n, k);
    while (e.next()) {
      if (stop != nullptr && stop->load(std::memory_order_relaxed)) return;
      if (e.index() % t_count == t) fn(t, e.index(), std::span<const Mask>(e.forms()));
    }
  };
  if (t_count == 1) {
    work(0);
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < t_count; ++t) pool.emplace_back(work, t);
  for (auto& th : pool) th.join();
}

// Text form: "x1+x2=0; x3=1". An empty string is the whole space.

inline AffineSubspace parse_subspace(std::string_view text, int n) {
  const std::string s = detail::strip_spaces(text);
  std::vector<Mask> forms;
  Mask constants = 0;
  std::size_t start = 0;
  while (start < s.size()) {
    std::size_t end = s.find(';', start);
    if (end == std::string::npos) end = s.size();
    const std::string_view eq = std::string_view(s).substr(start, end - start);
    start = end + 1;
    if (eq.empty()) continue;
    const std::size_t sign = eq.find('=');
    if (sign == std::string_view::npos) fail(ErrorCode::SyntaxError, "equation needs '='");
    const std::string_view rhs = eq.substr(sign + 1);
    if (rhs != "0" && rhs != "1") fail(ErrorCode::SyntaxError, "right-hand side must be 0 or 1");
    const Anf lhs = parse_anf(eq.substr(0, sign), n);
    if (lhs.degree() > Degree(1)) fail(ErrorCode::SyntaxError, "equation must be affine");
    Mask form = 0;
    bool c = rhs == "1";
    for (Mask m : lhs.monomials()) {
      if (m == 0) {
        c = !c;
      } else {
        form |= m;
      }
    }
    if (form == 0) fail(ErrorCode::SyntaxError, "equation has no variables");
    if (c) constants |= Mask{1} << forms.size();
    forms.push_back(form);
  }
  return AffineSubspace::from_equations(n, forms, constants);
}

inline std::string format_subspace(const AffineSubspace& a) {
  std::string out;
  const auto& forms = a.linear().forms();
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (!out.empty()) out += "; ";
    bool first = true;
    for (Mask r = forms[i]; r != 0; r &= r - 1) {
      if (!first) out += '+';
      out += 'x' + std::to_string(std::countr_zero(r) + 1);
      first = false;
    }
    out += ((a.constants() >> i) & 1u) ? "=1" : "=0";
  }
  return out;
}

inline std::string format_subspace(const LinearSubspace& v) { return format_subspace(AffineSubspace(v)); }

}  // namespace degstab

#endif  // DEGSTAB_SUBSPACE_HPP
