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

#ifndef DEGSTAB_DEGDROP_HPP
#define DEGSTAB_DEGDROP_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <mutex>
#include <span>
#include <unordered_set>
#include <vector>

#include "degstab/anf.hpp"
#include "degstab/bits.hpp"
#include "degstab/error.hpp"
#include "degstab/subspace.hpp"

namespace degstab {

namespace detail {

inline constexpr int kZeroDegree = std::numeric_limits<int>::min() / 2;

inline int numeric_degree(const BitTable& coeffs) noexcept {
  const int d = coeffs.max_set_weight();
  return d < 0 ? kZeroDegree : d;
}

}  // namespace detail

/// Repeated degree-drop tests against one function. Keeps the truth table
/// and a scratch buffer; one instance per thread.
class DropTester {
 public:
  explicit DropTester(const Anf& f) : tt_(to_truth_table(f)), n_(f.num_vars()) {
    const Degree d = f.degree();
    if (d.is_neg_inf()) fail(ErrorCode::ZeroFunction, "degree drop is undefined for the zero function");
    degree_ = d.value();
  }

  int degree() const noexcept { return degree_; }
  int num_vars() const noexcept { return n_; }

  /// Degree of f on {x : forms.x = constants}, or detail::kZeroDegree.
  int restricted_degree(std::span<const Mask> forms, Mask constants = 0) {
    Parameterization p = parameterize(n_, forms, constants);
    const int d = static_cast<int>(p.basis.size());
    if (scratch_.num_vars() != d || scratch_.words().empty()) scratch_ = BitTable(d);
    restrict_table(tt_, p, scratch_);
    return detail::numeric_degree(scratch_);
  }

  bool drops(std::span<const Mask> forms, Mask constants = 0) {
    // Dimension below the degree always drops.
    if (n_ - static_cast<int>(forms.size()) < degree_) return true;
    return restricted_degree(forms, constants) < degree_;
  }

 private:
  TruthTable tt_;
  int n_;
  int degree_ = 0;
  BitTable scratch_;
};

inline bool is_degree_drop(const Anf& f, const AffineSubspace& a) {
  if (a.num_vars() != f.num_vars()) fail(ErrorCode::DimensionMismatch, "subspace and function differ in n");
  DropTester t(f);
  return t.drops(a.linear().forms(), a.constants());
}

inline bool is_degree_drop(const Anf& f, const LinearSubspace& v) { return is_degree_drop(f, AffineSubspace(v)); }

/// All co-dimension k linear degree-drop subspaces, in canonical order.
inline std::vector<LinearSubspace> enumerate_degree_drop(const Anf& f, int k, unsigned threads = 1) {
  const int n = f.num_vars();
  DropTester probe(f);
  const unsigned t_count = resolve_threads(threads);
  std::vector<std::vector<std::pair<std::uint64_t, std::vector<Mask>>>> found(t_count);
  std::vector<DropTester> testers(t_count, probe);
  parallel_for_codim(n, k, t_count, [&](unsigned t, std::uint64_t idx, std::span<const Mask> forms) {
    if (testers[t].drops(forms)) found[t].emplace_back(idx, std::vector<Mask>(forms.begin(), forms.end()));
  });
  std::vector<std::pair<std::uint64_t, std::vector<Mask>>> all;
  for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(all));
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<LinearSubspace> out;
  out.reserve(all.size());
  for (auto& [idx, forms] : all) out.push_back(LinearSubspace::from_canonical(n, std::move(forms)));
  return out;
}

/// True when some co-dimension k linear subspace is degree-drop. Stops early.
inline bool exists_degree_drop(const Anf& f, int k, unsigned threads = 1) {
  DropTester probe(f);
  if (f.num_vars() - k < probe.degree()) return true;
  const unsigned t_count = resolve_threads(threads);
  std::vector<DropTester> testers(t_count, probe);
  std::atomic<bool> hit{false};
  parallel_for_codim(
      f.num_vars(), k, t_count,
      [&](unsigned t, std::uint64_t, std::span<const Mask> forms) {
        if (testers[t].drops(forms)) hit.store(true, std::memory_order_relaxed);
      },
      &hit);
  return hit.load();
}

struct ProfileEntry {
  int codim = 0;
  std::uint64_t count = 0;
  std::uint64_t new_count = 0;  // not inside a co-dimension (codim-1) degree-drop space

  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

struct DegreeDropProfile {
  std::vector<ProfileEntry> entries;

  /// (count_1, count_2, new_2, count_3, new_3, ...).
  std::vector<std::uint64_t> tuple() const {
    std::vector<std::uint64_t> out;
    for (const auto& e : entries) {
      out.push_back(e.count);
      if (e.codim > 1) out.push_back(e.new_count);
    }
    return out;
  }

  friend bool operator==(const DegreeDropProfile&, const DegreeDropProfile&) = default;
};

namespace detail {

using FormsSet = std::unordered_set<std::vector<Mask>, FormsHash>;

// The 2^k - 1 co-dimension (k-1) superspaces of V: one per nonzero functional
// c on the annihilator. With p the lowest index where c is 1, the superspace
// annihilator is spanned by a_j + c_j a_p for j != p.
inline bool has_parent_in(std::span<const Mask> forms, const FormsSet& parents) {
  const std::size_t k = forms.size();
  std::vector<Mask> basis;
  basis.reserve(k - 1);
  for (std::uint32_t c = 1; c < (std::uint32_t{1} << k); ++c) {
    const std::size_t p = static_cast<std::size_t>(std::countr_zero(c));
    basis.clear();
    for (std::size_t j = 0; j < k; ++j) {
      if (j == p) continue;
      basis.push_back(forms[j] ^ (((c >> j) & 1u) ? forms[p] : 0));
    }
    if (parents.contains(rref_masks(basis).rows)) return true;
  }
  return false;
}

}  // namespace detail

/// Counts per co-dimension 1..k_max. Where no co-dimension (k-1)
/// degree-drop space exists every co-dimension k one counts as new.
inline DegreeDropProfile profile(const Anf& f, int k_max, unsigned threads = 1) {
  const int n = f.num_vars();
  if (k_max < 1 || k_max > n) fail(ErrorCode::OutOfRange, "k_max must be in [1, n]");
  DegreeDropProfile prof;
  detail::FormsSet previous;
  for (int k = 1; k <= k_max; ++k) {
    const std::vector<LinearSubspace> dd = enumerate_degree_drop(f, k, threads);
    ProfileEntry e;
    e.codim = k;
    e.count = dd.size();
    detail::FormsSet current;
    for (const auto& v : dd) {
      if (k == 1 || !detail::has_parent_in(v.forms(), previous)) ++e.new_count;
      if (k < k_max) current.insert(v.forms());
    }
    prof.entries.push_back(e);
    previous = std::move(current);
  }
  return prof;
}

/// Largest k with no co-dimension k degree-drop subspace.
inline int deg_stab(const Anf& f, unsigned threads = 1) {
  const Degree d = f.degree();
  if (d.is_neg_inf() || d.value() == 0) fail(ErrorCode::ZeroOrConstantFunction, "deg_stab needs degree >= 1");
  const int n = f.num_vars();
  const int r = d.value();
  for (int k = 1; k <= n - r; ++k) {
    if (exists_degree_drop(f, k, threads)) return k - 1;
  }
  return n - r;
}

/// Nonzero points plus a basis of the subspace they span with zero.
struct PointSpace {
  std::vector<Mask> points;  // ascending
  std::vector<Mask> basis;   // canonical echelon form
  int dim() const noexcept { return static_cast<int>(basis.size()); }
  bool closed() const noexcept { return points.size() + 1 == (std::uint64_t{1} << basis.size()); }
};

namespace detail {

inline PointSpace make_point_space(std::vector<Mask> points) {
  PointSpace s;
  s.basis = rref_masks(points).rows;
  s.points = std::move(points);
  return s;
}

}  // namespace detail

/// Normals a of the degree-drop linear hyperplanes a.x = 0, checked to form
/// a vector space together with zero.
inline PointSpace dd_hyperplane_normal_space(const Anf& f) {
  DropTester t(f);
  const int n = f.num_vars();
  std::vector<Mask> normals;
  const Mask top = low_bits(n);
  for (Mask a = 1; a != 0 && a <= top; ++a) {
    const Mask form[1] = {a};
    if (t.drops(form)) normals.push_back(a);
  }
  PointSpace s = detail::make_point_space(std::move(normals));
  if (!s.closed()) fail(ErrorCode::ClosureViolation, "degree-drop hyperplane normals are not closed under addition");
  return s;
}

/// Directions a != 0 with deg(D_a f) < deg(f) - 1.
inline PointSpace fast_points(const Anf& f) {
  const int n = f.num_vars();
  BitTable tt = f.coefficients();
  tt.mobius();
  const int r = detail::numeric_degree(f.coefficients());
  std::vector<Mask> pts;
  const Mask top = low_bits(n);
  for (Mask a = 1; a != 0 && a <= top; ++a) {
    BitTable d = detail::translate(tt, a);
    d ^= tt;
    d.mobius();
    if (detail::numeric_degree(d) < r - 1) pts.push_back(a);
  }
  return detail::make_point_space(std::move(pts));
}

/// deg(D_{a1} ... D_{ak} f) < deg(f) - k.
inline bool is_fast_space(const Anf& f, std::span<const Mask> directions) {
  const Anf d = iterated_derivative(f, directions);
  const int r = detail::numeric_degree(f.coefficients());
  return detail::numeric_degree(d.coefficients()) < r - static_cast<int>(directions.size());
}

struct DualityReport {
  bool hyperplanes_match = true;
  std::uint64_t subspaces_checked = 0;
  std::uint64_t mismatches = 0;
  bool ok() const noexcept { return hyperplanes_match && mismatches == 0; }
};

/// Cross-checks degree-drop spaces of f against fast spaces of its complement
/// for co-dimensions 1..k_max.
inline DualityReport check_dd_fast_duality(const Anf& f, int k_max = 1) {
  if (!f.is_homogeneous()) fail(ErrorCode::NotHomogeneous, "duality check needs a homogeneous function");
  const int n = f.num_vars();
  const int r = f.degree().value();
  if (r < 1 || r > n - 1) fail(ErrorCode::OutOfRange, "duality check needs 1 <= deg <= n-1");
  const Anf fc = complement(f);
  DualityReport rep;
  rep.hyperplanes_match = dd_hyperplane_normal_space(f).points == fast_points(fc).points;
  DropTester t(f);
  BitTable tc = fc.coefficients();
  tc.mobius();
  const int rc = n - r;
  for (int k = 2; k <= k_max && k <= n; ++k) {
    for_each_codim(n, k, [&](std::uint64_t, std::span<const Mask> forms) {
      // Iterated derivative as an XOR of translates.
      BitTable acc(n);
      for_each_span_point(0, forms, [&](std::uint64_t, Mask shift) { acc ^= detail::translate(tc, shift); });
      acc.mobius();
      const bool fast = detail::numeric_degree(acc) < rc - k;
      ++rep.subspaces_checked;
      if (fast != t.drops(forms)) ++rep.mismatches;
    });
  }
  return rep;
}

/// Membership of f in K_{k, deg f, n}; only the top-degree part matters.
inline bool k_membership(const Anf& f, int k, unsigned threads = 1) {
  if (f.is_zero()) fail(ErrorCode::ZeroFunction, "membership is undefined for the zero function");
  return !exists_degree_drop(top_part(f), k, threads);
}

}  // namespace degstab

#endif  // DEGSTAB_DEGDROP_HPP
