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

#ifndef DEGSTAB_SPECIAL_HPP
#define DEGSTAB_SPECIAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "degstab/anf.hpp"
#include "degstab/counting.hpp"
#include "degstab/error.hpp"
#include "degstab/f2_matrix.hpp"

namespace degstab {

/// Half the rank of the alternating matrix of the degree-2 part.
inline int quadratic_t(const Anf& f) {
  if (f.degree() != Degree(2)) fail(ErrorCode::NotQuadratic, "needs a degree-2 function");
  const auto n = static_cast<std::size_t>(f.num_vars());
  F2Matrix b(n, n);
  for (Mask m : f.monomials()) {
    if (popcount(m) != 2) continue;
    const auto i = static_cast<std::size_t>(std::countr_zero(m));
    const auto j = static_cast<std::size_t>(31 - std::countl_zero(m));
    b.set(i, j, true);
    b.set(j, i, true);
  }
  return static_cast<int>(rank(b) / 2);
}

inline int quadratic_deg_stab(const Anf& f) { return quadratic_t(f) - 1; }

struct HighDegreeFacts {
  int deg_stab = 0;
  bool k1_empty = true;
  bool k2_empty = true;
  // Degree-drop linear hyperplanes shared by every function of this degree;
  // 0 when the count varies.
  std::uint64_t forced_hyperplanes = 0;
};

/// Closed forms for r in {n-2, n-1, n}.
inline HighDegreeFacts high_degree_facts(int r, int n) {
  if (n < 2 || r > n || r < n - 2 || r < 1) fail(ErrorCode::UnsupportedCase, "closed forms cover r in {n-2, n-1, n}");
  HighDegreeFacts h;
  if (r == n) {
    h.forced_hyperplanes = (std::uint64_t{1} << n) - 1;
  } else if (r == n - 1) {
    h.forced_hyperplanes = (std::uint64_t{1} << (n - 1)) - 1;
  } else {
    if (n < 4) fail(ErrorCode::UnsupportedCase, "r = n-2 needs n >= 4");
    h.k1_empty = n % 2 == 1;
    h.deg_stab = n % 2 == 0 ? 1 : 0;
  }
  return h;
}

/// Membership of a degree-(n-2) function in K_1: n even and the complement
/// of its top part has full quadratic rank.
inline bool degree_n_minus_2_k1_member(const Anf& f) {
  const int n = f.num_vars();
  if (f.degree() != Degree(n - 2)) fail(ErrorCode::UnsupportedCase, "needs degree n-2");
  if (n % 2 == 1) return false;
  return quadratic_t(complement(top_part(f))) == n / 2;
}

// Symmetric functions, stored as the value on each input weight 0..n.

/// ANF of the symmetric function with the given value vector. The coefficient
/// of a weight-w monomial is the XOR of values[j] over j bitwise inside w.
inline Anf symmetric_from_values(std::span<const std::uint8_t> values) {
  if (values.empty()) fail(ErrorCode::InvalidLength, "value vector needs n+1 entries");
  const int n = static_cast<int>(values.size()) - 1;
  std::vector<bool> coeff(values.size(), false);
  for (int w = 0; w <= n; ++w) {
    bool c = false;
    for (int j = 0; j <= w; ++j) {
      if ((j & ~w) == 0 && values[static_cast<std::size_t>(j)]) c = !c;
    }
    coeff[static_cast<std::size_t>(w)] = c;
  }
  Anf f(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (coeff[static_cast<std::size_t>(std::popcount(m))]) f.toggle(static_cast<Mask>(m));
  }
  return f;
}

/// Sum of all degree-r monomials.
inline Anf elementary_symmetric(int n, int r) {
  Anf f(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (std::popcount(m) == r) f.toggle(static_cast<Mask>(m));
  }
  return f;
}

/// 1 exactly when more than half the inputs are 1.
inline Anf majority(int n) {
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n) + 1);
  for (int w = 0; w <= n; ++w) v[static_cast<std::size_t>(w)] = 2 * w > n ? 1 : 0;
  return symmetric_from_values(v);
}

/// Whether the linear hyperplane with a weight-omega normal is degree-drop
/// for every symmetric function of degree r in n variables.
inline bool symmetric_hyperplane_drops(int n, int r, int omega) {
  if (r < 1 || r > n || omega < 1 || omega > n) fail(ErrorCode::OutOfRange, "needs 1 <= r, omega <= n");
  if (r == n) return true;
  if (r == n - 1) return omega % 2 == 0;
  if (r == 1) return omega == n;
  return r % 2 == 1 && omega == n;
}

struct SymmetricVerdict {
  std::vector<int> drop_weights;  // normal weights giving degree-drop hyperplanes
  std::uint64_t hyperplane_count = 0;
};

inline SymmetricVerdict symmetric_dd(int n, int r) {
  SymmetricVerdict v;
  for (int w = 1; w <= n; ++w) {
    if (symmetric_hyperplane_drops(n, r, w)) {
      v.drop_weights.push_back(w);
      v.hyperplane_count += binomial(n, w);
    }
  }
  return v;
}

enum class DropAmount { NoDrop, One, AtLeastTwo };

inline const char* to_string(DropAmount d) {
  switch (d) {
    case DropAmount::NoDrop: return "no-drop";
    case DropAmount::One: return "1";
    case DropAmount::AtLeastTwo: return ">=2";
  }
  return "?";
}

/// How far the degree of symmetric f falls on x_{i1}+...+x_{i_omega} = epsilon.
/// Depends on the whole function, not only its top degree.
inline DropAmount symmetric_drop_amount(const Anf& f, int omega, int epsilon) {
  if (!is_symmetric(f)) fail(ErrorCode::NotSymmetric, "needs a symmetric function");
  if (epsilon != 0 && epsilon != 1) fail(ErrorCode::OutOfRange, "epsilon must be 0 or 1");
  const int n = f.num_vars();
  const Degree d = f.degree();
  if (d.is_neg_inf() || d.value() < 2) fail(ErrorCode::OutOfRange, "needs degree >= 2");
  const int r = d.value();
  if (!symmetric_hyperplane_drops(n, r, omega)) return DropAmount::NoDrop;
  const bool has_lower = f.coeff(low_bits(r - 1));
  if (has_lower) return epsilon == 0 ? DropAmount::One : DropAmount::AtLeastTwo;
  if (r == n - 1 && omega < n && omega % 2 == 0) return DropAmount::One;
  if (r == n && omega % 2 == 0) return epsilon == 0 ? DropAmount::One : DropAmount::AtLeastTwo;
  return epsilon == 1 ? DropAmount::One : DropAmount::AtLeastTwo;
}

}  // namespace degstab

#endif  // DEGSTAB_SPECIAL_HPP
