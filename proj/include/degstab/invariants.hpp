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

#ifndef DEGSTAB_INVARIANTS_HPP
#define DEGSTAB_INVARIANTS_HPP

#include <cstdint>
#include <vector>

#include "degstab/anf.hpp"
#include "degstab/degdrop.hpp"
#include "degstab/error.hpp"
#include "degstab/f2_matrix.hpp"

namespace degstab {

namespace detail {

inline std::vector<Mask> masks_of_weight(int n, int w) {
  std::vector<Mask> out;
  if (w < 0 || w > n) return out;
  if (w == 0) return {0};
  // Gosper's hack, ascending.
  Mask m = low_bits(w);
  const Mask limit = Mask{1} << n;
  while (m < limit && m != 0) {
    out.push_back(m);
    const Mask c = m & (~m + 1);
    const Mask r = m + c;
    if (r == 0) break;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

inline int homogeneous_degree(const Anf& f) {
  if (f.is_zero() || !f.is_homogeneous()) fail(ErrorCode::NotHomogeneous, "needs a nonzero homogeneous function");
  return f.degree().value();
}

}  // namespace detail

/// Dimension of the kernel of g -> (g f) mod lower degrees, from degree-k
/// forms to degree-(r+k) forms. Column g of the map collects the monomials
/// g*m over monomials m of f disjoint from g.
inline int r_k(const Anf& f, int k) {
  const int r = detail::homogeneous_degree(f);
  const int n = f.num_vars();
  if (k < 1 || k > n - r) fail(ErrorCode::OutOfRange, "k must be in [1, n - deg f]");
  const std::vector<Mask> domain = detail::masks_of_weight(n, k);
  const std::vector<Mask> target = detail::masks_of_weight(n, r + k);
  std::vector<std::uint32_t> slot(std::size_t{1} << n, 0);
  for (std::size_t i = 0; i < target.size(); ++i) slot[target[i]] = static_cast<std::uint32_t>(i);
  const std::vector<Mask> mons = f.monomials();
  F2Matrix phi(domain.size(), target.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    for (Mask m : mons) {
      if ((m & domain[i]) == 0) {
        const std::size_t c = slot[m | domain[i]];
        phi.set(i, c, !phi.get(i, c));
      }
    }
  }
  return static_cast<int>(domain.size() - rank(phi));
}

/// (R_1, ..., R_kmax), truncated at n - deg f.
inline std::vector<int> r_values(const Anf& f, int k_max) {
  const int r = detail::homogeneous_degree(f);
  std::vector<int> out;
  for (int k = 1; k <= k_max && k <= f.num_vars() - r; ++k) out.push_back(r_k(f, k));
  return out;
}

/// Profile counts (count_1, count_2, new_2, ..., count_kmax, new_kmax).
inline std::vector<std::uint64_t> fingerprint(const Anf& f, int k_max = 3, unsigned threads = 1) {
  return profile(f, k_max, threads).tuple();
}

/// n minus the dimension of the fast-point space. An estimator of the rank
/// modulo lower-degree functions; exact against brute force for n <= 4.
inline int rank_mod_lower(const Anf& f) {
  detail::homogeneous_degree(f);
  return f.num_vars() - fast_points(f).dim();
}

}  // namespace degstab

#endif  // DEGSTAB_INVARIANTS_HPP
