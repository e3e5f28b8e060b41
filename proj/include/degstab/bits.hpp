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

#ifndef DEGSTAB_BITS_HPP
#define DEGSTAB_BITS_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "degstab/error.hpp"

namespace degstab {

/// Subset of variables (bit i-1 <-> x_i) or a point of F_2^n.
using Mask = std::uint32_t;

inline constexpr int kMaxVars = 31;

inline int popcount(Mask m) noexcept { return std::popcount(m); }
inline int parity(Mask m) noexcept { return std::popcount(m) & 1; }
inline Mask low_bits(int n) noexcept { return n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1); }

namespace detail {

// Positions p in [0,64) with bit i of p clear.
inline constexpr std::array<std::uint64_t, 6> kLowHalf = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

consteval std::array<std::uint64_t, 7> make_weight_masks() {
  std::array<std::uint64_t, 7> out{};
  for (unsigned p = 0; p < 64; ++p) {
    int w = 0;
    for (unsigned b = p; b != 0; b >>= 1) w += static_cast<int>(b & 1u);
    out[static_cast<std::size_t>(w)] |= std::uint64_t{1} << p;
  }
  return out;
}

// Positions p in [0,64) grouped by popcount(p).
inline constexpr std::array<std::uint64_t, 7> kWeightMask = make_weight_masks();

}  // namespace detail

/// Dense table of 2^n bits, the storage behind both ANF coefficient arrays
/// and truth tables. Word j holds entries [64j, 64j+64).
class BitTable {
 public:
  BitTable() = default;

  explicit BitTable(int n) : n_(n) {
    if (n < 0 || n > kMaxVars) fail(ErrorCode::OutOfRange, "variable count must be in [0, 31]");
    words_.assign(word_count(n), 0);
  }

  static std::size_t word_count(int n) noexcept {
    return n <= 6 ? 1 : (std::size_t{1} << (n - 6));
  }

  int num_vars() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << n_; }

  bool get(std::uint64_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::uint64_t i, bool v) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= bit;
    } else {
      words_[i >> 6] &= ~bit;
    }
  }
  void flip(std::uint64_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  bool none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  std::uint64_t count() const noexcept {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
  }

  /// In-place binary Moebius transform (involution): a[x] ^= a[x ^ e_i] for x with bit i set.
  void mobius() noexcept {
    const int in_word = std::min(n_, 6);
    for (int i = 0; i < in_word; ++i) {
      const int shift = 1 << i;
      for (auto& w : words_) w ^= (w & detail::kLowHalf[static_cast<std::size_t>(i)]) << shift;
    }
    for (int i = 6; i < n_; ++i) {
      const std::size_t stride = std::size_t{1} << (i - 6);
      for (std::size_t j = 0; j < words_.size(); ++j) {
        if (j & stride) words_[j] ^= words_[j ^ stride];
      }
    }
  }

  /// Largest popcount of an index holding a set bit, or -1 when all clear.
  int max_set_weight() const noexcept {
    int best = -1;
    for (std::size_t j = 0; j < words_.size(); ++j) {
      const std::uint64_t w = words_[j];
      if (w == 0) continue;
      const int base = std::popcount(j);
      for (int d = 6; d >= 0; --d) {
        if (w & detail::kWeightMask[static_cast<std::size_t>(d)]) {
          best = std::max(best, base + d);
          break;
        }
      }
    }
    return best;
  }

  BitTable& operator^=(const BitTable& o) {
    check_same(o);
    for (std::size_t j = 0; j < words_.size(); ++j) words_[j] ^= o.words_[j];
    return *this;
  }
  BitTable& operator&=(const BitTable& o) {
    check_same(o);
    for (std::size_t j = 0; j < words_.size(); ++j) words_[j] &= o.words_[j];
    return *this;
  }

  friend bool operator==(const BitTable&, const BitTable&) = default;

 private:
  void check_same(const BitTable& o) const {
    if (o.n_ != n_) fail(ErrorCode::DimensionMismatch, "bit tables over different variable counts");
  }

  int n_ = 0;
  std::vector<std::uint64_t> words_ = std::vector<std::uint64_t>(1, 0);
};

/// Calls fn(x) for every x in [0, 2^dim) in Gray-code order, passing the running
/// XOR of basis vectors selected by x on top of `offset`.
template <typename Fn>
void for_each_span_point(Mask offset, std::span<const Mask> basis, Fn&& fn) {
  const std::size_t dim = basis.size();
  Mask point = offset;
  std::uint64_t gray = 0;
  fn(std::uint64_t{0}, point);
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t step = 1; step < total; ++step) {
    const int bit = std::countr_zero(step);
    point ^= basis[static_cast<std::size_t>(bit)];
    gray ^= std::uint64_t{1} << bit;
    fn(gray, point);
  }
}

}  // namespace degstab

#endif  // DEGSTAB_BITS_HPP
