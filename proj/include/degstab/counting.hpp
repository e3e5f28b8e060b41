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

#ifndef DEGSTAB_COUNTING_HPP
#define DEGSTAB_COUNTING_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "degstab/error.hpp"

namespace degstab {

/// Exact integer for counts. Signed so alternating sums can be formed
/// directly; every public result is checked non-negative.
using BigCount = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigCount pow2(std::uint64_t e) { return BigCount(1) << e; }

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t v = 1;
  for (int i = 1; i <= k; ++i) v = v * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return v;
}

/// Number of k-dimensional subspaces of F_2^n.
inline BigCount gaussian_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) fail(ErrorCode::OutOfRange, "gaussian binomial needs 0 <= k <= n");
  BigCount num = 1;
  BigCount den = 1;
  for (int i = 0; i < k; ++i) {
    num *= pow2(static_cast<std::uint64_t>(n - i)) - 1;
    den *= pow2(static_cast<std::uint64_t>(i + 1)) - 1;
  }
  return num / den;
}

namespace detail {

inline void check_rn(int r, int n) {
  if (n < 1 || r < 1 || r > n) fail(ErrorCode::OutOfRange, "needs 1 <= r <= n");
}

inline BigCount nonnegative(BigCount v) {
  if (v < 0) fail(ErrorCode::InternalInvariant, "counting formula went negative");
  return v;
}

// sum_{i=0}^{r} (-1)^i 2^{i(i-1)/2} [n i]_2 (2^{C(n-i, r-i)} - 1)
inline BigCount alternating_k1_sum(int r, int n) {
  BigCount s = 0;
  for (int i = 0; i <= r && i <= n; ++i) {
    const BigCount term = pow2(static_cast<std::uint64_t>(i) * static_cast<std::uint64_t>(std::max(i - 1, 0)) / 2) *
                          gaussian_binomial(n, i) * (pow2(binomial(n - i, r - i)) - 1);
    if (i % 2 == 0) {
      s += term;
    } else {
      s -= term;
    }
  }
  return s;
}

}  // namespace detail

/// Number of degree-r homogeneous functions of n variables (zero excluded).
inline BigCount homogeneous_count(int r, int n) {
  detail::check_rn(r, n);
  return pow2(binomial(n, r)) - 1;
}

/// |K_{1,r,n}|: homogeneous degree-r functions without degree-drop hyperplanes.
inline BigCount k1_count(int r, int n) {
  detail::check_rn(r, n);
  return detail::nonnegative(detail::alternating_k1_sum(r, n));
}

/// Entry j: number of homogeneous degree-r functions with exactly 2^j - 1
/// degree-drop linear hyperplanes, for j = 0..r.
inline std::vector<BigCount> dd_hyperplane_histogram(int r, int n) {
  detail::check_rn(r, n);
  std::vector<BigCount> out;
  for (int j = 0; j <= r; ++j) {
    out.push_back(detail::nonnegative(gaussian_binomial(n, j) * detail::alternating_k1_sum(r - j, n - j)));
  }
  return out;
}

/// Homogeneous degree-r functions having at least one degree-drop hyperplane.
inline BigCount with_drop_count(int r, int n) { return homogeneous_count(r, n) - k1_count(r, n); }

struct DropProbability {
  BigRational exact;
  double value = 0;
  bool bounds_apply = false;  // the two-term bounds hold for 3 <= r <= n-3
  double lower = 0;
  double upper = 0;
  double approximation = 0;  // 2^-(C(n-1,r) - n)
};

/// Probability that a random nonzero homogeneous degree-r function has a
/// degree-drop hyperplane.
inline DropProbability dd_probability(int r, int n) {
  detail::check_rn(r, n);
  const BigCount total = homogeneous_count(r, n);
  DropProbability p;
  p.exact = BigRational(with_drop_count(r, n), total);
  p.value = static_cast<double>(p.exact);
  const BigRational first(gaussian_binomial(n, 1) * (pow2(binomial(n - 1, r - 1)) - 1), total);
  const BigRational second(2 * gaussian_binomial(n, 2) * (pow2(binomial(n - 2, r - 2)) - 1), total);
  p.bounds_apply = r >= 3 && r <= n - 3;
  p.upper = static_cast<double>(first);
  p.lower = static_cast<double>(first - second);
  const long long e = static_cast<long long>(binomial(n - 1, r)) - n;
  p.approximation = std::ldexp(1.0, static_cast<int>(-e));
  return p;
}

/// Closed form for r = 2: (2^n-1)(2^{n-1}-1) / (3 (2^{C(n,2)} - 1)).
inline BigRational quadratic_dd_probability(int n) {
  if (n < 2) fail(ErrorCode::OutOfRange, "needs n >= 2");
  return BigRational((pow2(static_cast<std::uint64_t>(n)) - 1) * (pow2(static_cast<std::uint64_t>(n - 1)) - 1),
                     3 * (pow2(binomial(n, 2)) - 1));
}

/// Nine significant digits.
inline std::string format_probability(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

struct StabBounds {
  int lower = 0;
  int upper = 0;
  bool exact() const noexcept { return lower == upper; }
};

/// Bounds on the largest deg_stab over degree-r functions of n variables.
inline StabBounds degstab_bounds(int r, int n) {
  detail::check_rn(r, n);
  if (r == 1 || r >= n - 1) return {0, 0};
  if (r == n - 2) {
    const int v = n % 2 == 0 ? 1 : 0;
    return {v, v};
  }
  if (r == 2) return {n / 2 - 1, n / 2 - 1};
  StabBounds b{(n - r) / r, n - r - 1};
  if ((r == 3 || r == 4) && n >= 8) b.upper = std::min(b.upper, n - 6);
  if (r % 2 == 1 && r >= 5 && r <= n - 2) b.upper = std::min(b.upper, n - r - 2);
  b.lower = std::min(b.lower, b.upper);
  return b;
}

}  // namespace degstab

#endif  // DEGSTAB_COUNTING_HPP
