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

// Hand-rolled generators and independent oracles shared by the test suites.
#ifndef DEGSTAB_TESTS_SUPPORT_HPP
#define DEGSTAB_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "degstab/degstab.hpp"

namespace degstab::testing {

using Rng = std::mt19937_64;

inline Mask random_mask(Rng& rng, int n) { return static_cast<Mask>(rng()) & low_bits(n); }

inline Mask random_nonzero_mask(Rng& rng, int n) {
  for (;;) {
    const Mask m = random_mask(rng, n);
    if (m != 0) return m;
  }
}

/// Each monomial of weight r kept with probability 1/2; never zero.
inline Anf random_homogeneous(Rng& rng, int n, int r) {
  const std::vector<Mask> pool = detail::masks_of_weight(n, r);
  for (;;) {
    Anf f(n);
    for (Mask m : pool) {
      if (rng() & 1u) f.toggle(m);
    }
    if (!f.is_zero()) return f;
  }
}

/// Uniform over all functions of n variables.
inline Anf random_anf(Rng& rng, int n) {
  Anf f(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < total; ++m) {
    if (rng() & 1u) f.toggle(static_cast<Mask>(m));
  }
  return f;
}

/// Uniform set of k independent forms.
inline std::vector<Mask> random_independent_forms(Rng& rng, int n, int k) {
  for (;;) {
    std::vector<Mask> forms;
    for (int i = 0; i < k; ++i) forms.push_back(random_nonzero_mask(rng, n));
    if (rank_masks(forms) == static_cast<std::size_t>(k)) return forms;
  }
}

/// Every nonzero homogeneous degree-r function of n variables, r-subsets
/// indexed by a binary counter.
template <typename Fn>
void for_each_homogeneous(int n, int r, Fn&& fn) {
  const std::vector<Mask> pool = detail::masks_of_weight(n, r);
  const std::uint64_t total = std::uint64_t{1} << pool.size();
  for (std::uint64_t sel = 1; sel < total; ++sel) {
    Anf f(n);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if ((sel >> i) & 1u) f.toggle(pool[i]);
    }
    fn(f);
  }
}

/// Degree of f on {x : <forms_i, x> = c_i} by symbolic substitution: each
/// pivot variable is replaced by the rest of its equation and the product is
/// expanded. Shares no code with the truth-table restriction.
inline Degree symbolic_restricted_degree(const Anf& f, const std::vector<Mask>& forms, Mask constants) {
  const int n = f.num_vars();
  std::vector<Mask> rows = forms;
  std::vector<bool> rhs;
  for (std::size_t i = 0; i < forms.size(); ++i) rhs.push_back((constants >> i) & 1u);
  // Gauss-Jordan with the right-hand side carried along.
  std::vector<int> pivot_of_row;
  std::size_t r = 0;
  for (int c = 0; c < n && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && !((rows[sel] >> c) & 1u)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    std::vector<bool>::swap(rhs[sel], rhs[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && ((rows[i] >> c) & 1u)) {
        rows[i] ^= rows[r];
        rhs[i] = rhs[i] != rhs[r];
      }
    }
    pivot_of_row.push_back(c);
    ++r;
  }
  std::vector<Anf> sub;
  for (int v = 0; v < n; ++v) sub.push_back(Anf::monomial(n, Mask{1} << v));
  for (std::size_t i = 0; i < pivot_of_row.size(); ++i) {
    const int p = pivot_of_row[i];
    Anf l = Anf::constant(n, rhs[i]);
    for (int v = 0; v < n; ++v) {
      if (v != p && ((rows[i] >> v) & 1u)) l += Anf::monomial(n, Mask{1} << v);
    }
    sub[static_cast<std::size_t>(p)] = l;
  }
  Anf g(n);
  for (Mask m : f.monomials()) {
    Anf term = Anf::constant(n, true);
    for (int v = 0; v < n; ++v) {
      if ((m >> v) & 1u) term = multiply(term, sub[static_cast<std::size_t>(v)]);
    }
    g += term;
  }
  return g.degree();
}

/// Degree-drop hyperplanes by brute force with the symbolic oracle.
inline std::uint64_t symbolic_hyperplane_count(const Anf& f) {
  const Degree d = f.degree();
  std::uint64_t c = 0;
  for (Mask a = 1; a <= low_bits(f.num_vars()); ++a) {
    if (symbolic_restricted_degree(f, {a}, 0) < d) ++c;
  }
  return c;
}

inline const char* kCounterexample = "3456+2357+1457+1267+1238+1358+1458+2468+1378+3478";

}  // namespace degstab::testing

#endif  // DEGSTAB_TESTS_SUPPORT_HPP
