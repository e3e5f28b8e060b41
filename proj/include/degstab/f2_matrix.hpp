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

#ifndef DEGSTAB_F2_MATRIX_HPP
#define DEGSTAB_F2_MATRIX_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degstab/bits.hpp"
#include "degstab/error.hpp"

namespace degstab {

/// Fixed-length bit vector over F_2.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static F2Vector from_mask(Mask m, std::size_t size) {
    if (size < 32 && (m >> size) != 0) fail(ErrorCode::DimensionMismatch, "mask wider than vector");
    F2Vector v(size);
    if (size > 0) v.words_[0] = m;
    return v;
  }

  std::size_t size() const noexcept { return size_; }

  bool get(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool any() const noexcept {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }

  /// Index of the lowest set bit, or size() if none.
  std::size_t lowest_set() const noexcept {
    for (std::size_t j = 0; j < words_.size(); ++j) {
      if (words_[j] != 0) return j * 64 + static_cast<std::size_t>(std::countr_zero(words_[j]));
    }
    return size_;
  }

  Mask to_mask() const {
    if (size_ > 32) fail(ErrorCode::DimensionMismatch, "vector too long for a mask");
    return size_ == 0 ? 0 : static_cast<Mask>(words_[0]);
  }

  bool dot(const F2Vector& o) const {
    check_same(o);
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < words_.size(); ++j) acc ^= words_[j] & o.words_[j];
    return std::popcount(acc) & 1;
  }

  F2Vector& operator^=(const F2Vector& o) {
    check_same(o);
    for (std::size_t j = 0; j < words_.size(); ++j) words_[j] ^= o.words_[j];
    return *this;
  }
  friend F2Vector operator^(F2Vector a, const F2Vector& b) { return a ^= b; }

  friend bool operator==(const F2Vector&, const F2Vector&) = default;

  std::string to_string() const {
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) s.push_back(get(i) ? '1' : '0');
    return s;
  }

 private:
  void check_same(const F2Vector& o) const {
    if (o.size_ != size_) fail(ErrorCode::DimensionMismatch, "vector sizes differ");
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Dense row-major matrix over F_2.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, F2Vector(cols)) {}

  static F2Matrix identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  /// Row i is the mask rows[i] read as bits 0..cols-1.
  static F2Matrix from_rows(std::span<const Mask> rows, std::size_t cols) {
    F2Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) m.rows_[i] = F2Vector::from_mask(rows[i], cols);
    return m;
  }

  static F2Matrix from_rows(std::vector<F2Vector> rows, std::size_t cols) {
    for (const auto& r : rows) {
      if (r.size() != cols) fail(ErrorCode::DimensionMismatch, "row length differs from column count");
    }
    F2Matrix m;
    m.cols_ = cols;
    m.rows_ = std::move(rows);
    return m;
  }

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const noexcept { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) noexcept { rows_[r].set(c, v); }

  const F2Vector& row(std::size_t r) const noexcept { return rows_[r]; }
  F2Vector& row(std::size_t r) noexcept { return rows_[r]; }

  std::vector<Mask> row_masks() const {
    std::vector<Mask> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.to_mask());
    return out;
  }

  F2Matrix transpose() const {
    F2Matrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        if (get(r, c)) t.set(c, r, true);
      }
    }
    return t;
  }

  F2Vector apply(const F2Vector& x) const {
    if (x.size() != cols_) fail(ErrorCode::DimensionMismatch, "vector length differs from column count");
    F2Vector y(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) y.set(r, rows_[r].dot(x));
    return y;
  }

  /// y = M x for column vectors packed into masks (cols, rows <= 31).
  Mask apply(Mask x) const {
    Mask y = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (parity(rows_[r].to_mask() & x)) y |= Mask{1} << r;
    }
    return y;
  }

  friend F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
    if (a.cols_ != b.rows()) fail(ErrorCode::DimensionMismatch, "inner dimensions differ");
    F2Matrix out(a.rows(), b.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a.get(i, k)) out.rows_[i] ^= b.rows_[k];
      }
    }
    return out;
  }

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<F2Vector> rows_;
};

struct RrefResult {
  F2Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; pivot columns strictly increasing, zero rows last.
inline RrefResult rref(const F2Matrix& m) {
  RrefResult out{m, 0, {}};
  F2Matrix& a = out.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && !a.get(sel, c)) ++sel;
    if (sel == a.rows()) continue;
    std::swap(a.row(sel), a.row(r));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i != r && a.get(i, c)) a.row(i) ^= a.row(r);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

inline std::size_t rank(const F2Matrix& m) { return rref(m).rank; }

inline bool is_invertible(const F2Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

/// Rows of the result form a basis of {v : M v = 0}.
inline F2Matrix kernel_basis(const F2Matrix& m) {
  const RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<F2Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    F2Vector v(m.cols());
    v.set(f, true);
    for (std::size_t i = 0; i < red.rank; ++i) {
      if (red.reduced.get(i, f)) v.set(red.pivots[i], true);
    }
    basis.push_back(std::move(v));
  }
  return F2Matrix::from_rows(std::move(basis), m.cols());
}

/// Some x with M x = b, or nullopt when the system is inconsistent.
inline std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b) {
  if (b.size() != m.rows()) fail(ErrorCode::DimensionMismatch, "right-hand side length differs from row count");
  F2Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.set(r, c, m.get(r, c));
    aug.set(r, m.cols(), b.get(r));
  }
  const RrefResult red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  F2Vector x(m.cols());
  for (std::size_t i = 0; i < red.rank; ++i) x.set(red.pivots[i], red.reduced.get(i, m.cols()));
  return x;
}

inline F2Matrix inverse(const F2Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  F2Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.get(r, c));
    aug.set(r, n + r, true);
  }
  const RrefResult red = rref(aug);
  if (red.rank < n || red.pivots[n - 1] != n - 1) fail(ErrorCode::SingularMatrix, "matrix is not invertible");
  F2Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, red.reduced.get(r, n + c));
  }
  return inv;
}

/// Uniform invertible n x n matrix by rejection sampling; deterministic per seed.
inline F2Matrix random_invertible(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    F2Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; c += 64) {
        const std::uint64_t bits = rng();
        for (std::size_t b = 0; b < 64 && c + b < n; ++b) m.set(r, c + b, (bits >> b) & 1u);
      }
    }
    if (is_invertible(m)) return m;
  }
}

// Mask-level elimination for subspaces of F_2^n with n <= 31. Column j is bit j,
// so the pivot of a row is its lowest set bit.

struct MaskEchelon {
  std::vector<Mask> rows;  // reduced, sorted by pivot
  std::vector<int> pivots;
};

inline MaskEchelon rref_masks(std::span<const Mask> input) {
  std::vector<Mask> rows(input.begin(), input.end());
  MaskEchelon out;
  std::size_t r = 0;
  for (int c = 0; c < 32 && r < rows.size(); ++c) {
    const Mask bit = Mask{1} << c;
    std::size_t sel = r;
    while (sel < rows.size() && !(rows[sel] & bit)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

inline std::size_t rank_masks(std::span<const Mask> rows) { return rref_masks(rows).rows.size(); }

/// Residue of v after elimination against a reduced echelon basis; zero iff v is in the span.
inline Mask reduce_mask(const MaskEchelon& ech, Mask v) {
  for (std::size_t i = 0; i < ech.rows.size(); ++i) {
    if (v & (Mask{1} << ech.pivots[i])) v ^= ech.rows[i];
  }
  return v;
}

}  // namespace degstab

#endif  // DEGSTAB_F2_MATRIX_HPP
