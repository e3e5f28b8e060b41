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

#ifndef DEGSTAB_CONSTRUCT_HPP
#define DEGSTAB_CONSTRUCT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <unordered_set>
#include <vector>

#include "degstab/anf.hpp"
#include "degstab/counting.hpp"
#include "degstab/error.hpp"
#include "degstab/invariants.hpp"

namespace degstab {

/// Degree-r monomials over n variables, kept sorted and unique. Works
/// symbolically, so n up to 31 is fine as long as no ANF is materialized.
class MonomialSet {
 public:
  MonomialSet(int n, int r) : n_(n), r_(r) {
    if (n < 1 || n > kMaxVars) fail(ErrorCode::OutOfRange, "variable count must be in [1, 31]");
    if (r < 0 || r > n) fail(ErrorCode::OutOfRange, "degree must be in [0, n]");
  }

  static MonomialSet from_anf(const Anf& f) {
    if (f.is_zero() || !f.is_homogeneous()) fail(ErrorCode::NotHomogeneous, "needs a nonzero homogeneous function");
    MonomialSet s(f.num_vars(), f.degree().value());
    s.mons_ = f.monomials();
    return s;
  }

  int num_vars() const noexcept { return n_; }
  int degree() const noexcept { return r_; }
  const std::vector<Mask>& monomials() const noexcept { return mons_; }
  std::size_t size() const noexcept { return mons_.size(); }

  bool contains(Mask m) const { return std::binary_search(mons_.begin(), mons_.end(), m); }

  void insert(Mask m) {
    if (popcount(m) != r_ || (m & ~low_bits(n_)) != 0) fail(ErrorCode::OutOfRange, "monomial has the wrong degree or width");
    const auto it = std::lower_bound(mons_.begin(), mons_.end(), m);
    if (it == mons_.end() || *it != m) mons_.insert(it, m);
  }

  Anf to_anf() const { return Anf::from_monomials(n_, mons_); }

  friend bool operator==(const MonomialSet&, const MonomialSet&) = default;

 private:
  int n_;
  int r_;
  std::vector<Mask> mons_;
};

// Sufficient and necessary-condition checkers. All take a homogeneous
// monomial set; Anf overloads convert.

/// No variable common to all monomials.
inline bool check_c1(const MonomialSet& f) {
  Mask common = low_bits(f.num_vars());
  for (Mask m : f.monomials()) common &= m;
  return !f.monomials().empty() && common == 0;
}

/// Every k-set of variables is avoided by some monomial.
inline bool check_ck(const MonomialSet& f, int k) {
  if (k < 1 || k > f.num_vars()) fail(ErrorCode::OutOfRange, "k must be in [1, n]");
  for (Mask s : detail::masks_of_weight(f.num_vars(), k)) {
    const bool avoided = std::any_of(f.monomials().begin(), f.monomials().end(), [s](Mask m) { return (m & s) == 0; });
    if (!avoided) return false;
  }
  return true;
}

/// |Var(m_i) & Var(m_j)| <= bound for all distinct monomials.
inline bool check_pairwise_intersection(const MonomialSet& f, int bound) {
  const auto& ms = f.monomials();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (popcount(ms[i] & ms[j]) > bound) return false;
    }
  }
  return true;
}

/// k-avoidance plus pairwise intersections <= r-k-1; implies no degree-drop
/// space of co-dimension k.
inline bool check_prop4(const MonomialSet& f, int k) {
  if (k < 1 || k >= f.degree()) fail(ErrorCode::OutOfRange, "needs 1 <= k < deg");
  return check_ck(f, k) && check_pairwise_intersection(f, f.degree() - k - 1);
}

/// Witness map x_i -> monomial m with i outside m and x_i m / x_t absent
/// from f for every t in m. Present only when every i in Var(f) has one,
/// which rules out degree-drop hyperplanes.
inline std::optional<std::map<int, Mask>> check_theorem5(const MonomialSet& f) {
  Mask vars = 0;
  for (Mask m : f.monomials()) vars |= m;
  std::map<int, Mask> witness;
  for (Mask rest = vars; rest != 0; rest &= rest - 1) {
    const Mask xi = rest & (~rest + 1);
    bool found = false;
    for (Mask m : f.monomials()) {
      if (m & xi) continue;
      bool clean = true;
      for (Mask t = m; t != 0 && clean; t &= t - 1) {
        const Mask xt = t & (~t + 1);
        if (f.contains((m ^ xt) | xi)) clean = false;
      }
      if (clean) {
        witness[std::countr_zero(xi) + 1] = m;
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return witness;
}

/// Dual form: each i in Var(f) lies in a monomial m such that x_t m / x_i is
/// absent for every t outside m. Implies no fast points. False when f misses
/// a variable x_j, since e_j is then a fast point.
inline bool check_fastpoint_sufficient(const MonomialSet& f) {
  Mask vars = 0;
  for (Mask m : f.monomials()) vars |= m;
  const Mask all = low_bits(f.num_vars());
  if (vars != all) return false;
  for (Mask rest = vars; rest != 0; rest &= rest - 1) {
    const Mask xi = rest & (~rest + 1);
    const bool found = std::any_of(f.monomials().begin(), f.monomials().end(), [&](Mask m) {
      if (!(m & xi)) return false;
      for (Mask t = all & ~m; t != 0; t &= t - 1) {
        if (f.contains((m ^ xi) | (t & (~t + 1)))) return false;
      }
      return true;
    });
    if (!found) return false;
  }
  return true;
}

/// Verdict that f^c has no degree-drop space of co-dimension k: pairwise
/// intersections <= r-k-1 and every k-set of variables inside some monomial.
inline bool complement_membership(const MonomialSet& f, int k) {
  if (k < 1 || k >= f.degree()) fail(ErrorCode::OutOfRange, "needs 1 <= k < deg");
  if (!check_pairwise_intersection(f, f.degree() - k - 1)) return false;
  for (Mask s : detail::masks_of_weight(f.num_vars(), k)) {
    const bool covered = std::any_of(f.monomials().begin(), f.monomials().end(), [s](Mask m) { return (m & s) == s; });
    if (!covered) return false;
  }
  return true;
}

inline bool check_c1(const Anf& f) { return check_c1(MonomialSet::from_anf(f)); }
inline bool check_ck(const Anf& f, int k) { return check_ck(MonomialSet::from_anf(f), k); }
inline bool check_pairwise_intersection(const Anf& f, int bound) { return check_pairwise_intersection(MonomialSet::from_anf(f), bound); }
inline bool check_prop4(const Anf& f, int k) { return check_prop4(MonomialSet::from_anf(f), k); }
inline std::optional<std::map<int, Mask>> check_theorem5(const Anf& f) { return check_theorem5(MonomialSet::from_anf(f)); }
inline bool check_fastpoint_sufficient(const Anf& f) { return check_fastpoint_sufficient(MonomialSet::from_anf(f)); }
inline bool complement_membership(const Anf& f, int k) { return complement_membership(MonomialSet::from_anf(f), k); }

struct Algorithm1Result {
  MonomialSet core;                // m_1 .. m_n
  MonomialSet full;                // core plus the extension G
  std::vector<int> failed;         // |Failed_i| per step
  std::vector<std::uint64_t> blocked;  // |(Forbidden u Failed_i) avoiding x_i| per step
  std::uint64_t blocked_limit = 0;     // (n-1)(n-2)
};

inline bool algorithm1_supported(int n, int r) {
  return (n >= 10 && r >= 3 && r <= n - 4) || (n == 9 && (r == 4 || r == 5));
}

/// Builds n monomials passing the swap test: step i picks m_i avoiding
/// x_i uniformly from the unused candidates and retries while some x_i m_i / x_t
/// is already chosen. With extend_prob > 0 every remaining allowed monomial is
/// added independently with that probability.
inline Algorithm1Result algorithm1(int n, int r, std::uint64_t seed, double extend_prob = 0.0) {
  if (!algorithm1_supported(n, r)) {
    fail(ErrorCode::PreconditionViolated, "supported for n >= 10 with 3 <= r <= n-4, or n = 9 with r in {4, 5}");
  }
  if (extend_prob < 0.0 || extend_prob > 1.0) fail(ErrorCode::OutOfRange, "extension probability must be in [0, 1]");
  std::mt19937_64 rng(seed);
  Algorithm1Result res{MonomialSet(n, r), MonomialSet(n, r), {}, {}, static_cast<std::uint64_t>(n - 1) * static_cast<std::uint64_t>(n - 2)};
  std::unordered_set<Mask> forbidden;
  std::unordered_set<Mask> chosen;

  for (int i = 0; i < n; ++i) {
    const Mask xi = Mask{1} << i;
    std::unordered_set<Mask> failed;
    std::vector<int> others;
    for (int v = 0; v < n; ++v) {
      if (v != i) others.push_back(v);
    }
    auto blocked = [&](Mask m) { return forbidden.contains(m) || failed.contains(m); };
    auto draw = [&]() -> Mask {
      // Uniform r-subset of the other variables, rejected while blocked.
      for (int attempt = 0; attempt < 4096; ++attempt) {
        for (int j = 0; j < r; ++j) {
          std::uniform_int_distribution<int> pick(j, n - 2);
          std::swap(others[static_cast<std::size_t>(j)], others[static_cast<std::size_t>(pick(rng))]);
        }
        Mask m = 0;
        for (int j = 0; j < r; ++j) m |= Mask{1} << others[static_cast<std::size_t>(j)];
        if (!blocked(m)) return m;
      }
      std::vector<Mask> eligible;
      for (Mask m : detail::masks_of_weight(n, r)) {
        if (!(m & xi) && !blocked(m)) eligible.push_back(m);
      }
      if (eligible.empty()) fail(ErrorCode::InternalInvariant, "no eligible monomial left");
      std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
      return eligible[pick(rng)];
    };

    Mask mi = 0;
    std::vector<Mask> vi;
    while (true) {
      mi = draw();
      vi.clear();
      for (Mask t = mi; t != 0; t &= t - 1) vi.push_back((mi ^ (t & (~t + 1))) | xi);
      const bool clash = std::any_of(vi.begin(), vi.end(), [&](Mask v) { return chosen.contains(v); });
      if (!clash) break;
      failed.insert(mi);
    }
    std::uint64_t c = 0;
    for (Mask m : forbidden) c += (m & xi) ? 0 : 1;
    for (Mask m : failed) c += (m & xi) ? 0 : 1;
    res.failed.push_back(static_cast<int>(failed.size()));
    res.blocked.push_back(c);
    if (c > res.blocked_limit) fail(ErrorCode::InternalInvariant, "failed-candidate bound exceeded");
    chosen.insert(mi);
    res.core.insert(mi);
    forbidden.insert(vi.begin(), vi.end());
  }

  res.full = res.core;
  if (extend_prob > 0.0) {
    if (binomial(n, r) > 50'000'000ull) fail(ErrorCode::OutOfRange, "extension needs C(n, r) <= 5e7");
    std::bernoulli_distribution coin(extend_prob);
    for (Mask m : detail::masks_of_weight(n, r)) {
      if (!forbidden.contains(m) && coin(rng)) res.full.insert(m);
    }
  }
  return res;
}

/// n/(k+1) monomials of degree r on a circular index wheel: monomial j covers
/// x_{j(k+1)+1} .. x_{j(k+1)+r}, indices mod n.
inline MonomialSet circular_construction(int n, int r, int k) {
  if (k < 1 || n < 1 || n % (k + 1) != 0) fail(ErrorCode::DivisibilityViolated, "k+1 must divide n");
  if (r < k + 1 || r > n) fail(ErrorCode::OutOfRange, "needs k+1 <= r <= n");
  MonomialSet s(n, r);
  for (int j = 0; j < n / (k + 1); ++j) {
    Mask m = 0;
    for (int v = 0; v < r; ++v) m |= Mask{1} << ((j * (k + 1) + v) % n);
    s.insert(m);
  }
  return s;
}

/// x_1..x_r + x_{r+1}..x_{2r} + ... with p monomials.
inline MonomialSet direct_sum(int r, int p, int n) {
  if (r < 1 || p < 1) fail(ErrorCode::OutOfRange, "needs r, p >= 1");
  if (static_cast<long long>(p) * r > n) fail(ErrorCode::TooManyMonomials, "p*r exceeds n");
  MonomialSet s(n, r);
  for (int j = 0; j < p; ++j) s.insert(low_bits(r) << (j * r));
  return s;
}

}  // namespace degstab

#endif  // DEGSTAB_CONSTRUCT_HPP
