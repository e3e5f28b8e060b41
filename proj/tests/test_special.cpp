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

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "support.hpp"

namespace degstab {
namespace {

using testing::Rng;

TEST(Quadratic, Examples) {
  EXPECT_EQ(quadratic_t(parse_anf("12+34", 5)), 2);
  EXPECT_EQ(quadratic_deg_stab(parse_anf("12+34", 5)), 1);
  EXPECT_EQ(quadratic_t(parse_anf("12", 3)), 1);
  EXPECT_EQ(quadratic_deg_stab(parse_anf("12", 3)), 0);
  EXPECT_EQ(quadratic_t(parse_anf("12+13", 3)), 1);
  EXPECT_EQ(quadratic_t(parse_anf("12+13+1+x2", 4)), 1);
  EXPECT_THROW(quadratic_t(parse_anf("123", 3)), Error);
}

TEST(Quadratic, ClosedFormMatchesEnumerationExhaustively) {
  for (int n = 2; n <= 5; ++n) {
    testing::for_each_homogeneous(n, 2, [&](const Anf& f) { ASSERT_EQ(quadratic_deg_stab(f), deg_stab(f)) << format_anf(f); });
  }
}

TEST(Quadratic, ClosedFormMatchesEnumerationRandom) {
  Rng rng(1);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 3);
    Anf f = testing::random_homogeneous(rng, n, 2) + testing::random_homogeneous(rng, n, 1);
    if (f.degree() != Degree(2)) continue;
    EXPECT_EQ(quadratic_deg_stab(f), deg_stab(f)) << format_anf(f);
  }
}

TEST(DirectSum, DegStabIsPMinusOne) {
  for (auto [r, p] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    for (int n = r * p; n <= 8; ++n) EXPECT_EQ(deg_stab(direct_sum(r, p, n).to_anf()), p - 1) << r << " " << p << " " << n;
  }
}

TEST(HighDegree, ClosedFormsAgainstEnumeration) {
  Rng rng(2);
  for (int n = 5; n <= 8; ++n) {
    for (int r = n - 2; r <= n; ++r) {
      const HighDegreeFacts h = high_degree_facts(r, n);
      bool saw_member = false;
      for (int trial = 0; trial < 30; ++trial) {
        const Anf f = testing::random_homogeneous(rng, n, r) + testing::random_homogeneous(rng, n, r - 1);
        if (f.degree() != Degree(r)) continue;
        const auto hyper = enumerate_degree_drop(f, 1).size();
        if (h.forced_hyperplanes != 0) { EXPECT_EQ(hyper, h.forced_hyperplanes); }
        EXPECT_LE(deg_stab(f), h.deg_stab);
        if (h.k1_empty) { EXPECT_GT(hyper, 0u); }
        if (r == n - 2) {
          EXPECT_EQ(degree_n_minus_2_k1_member(f), hyper == 0);
          saw_member = saw_member || hyper == 0;
        }
      }
      if (r == n - 2 && n % 2 == 0) {
        // Complement of a full-rank quadratic attains deg_stab 1.
        const Anf f = complement(direct_sum(2, n / 2, n).to_anf());
        EXPECT_EQ(deg_stab(f), 1);
        EXPECT_TRUE(degree_n_minus_2_k1_member(f));
      }
    }
  }
  EXPECT_THROW(high_degree_facts(3, 8), Error);
}

TEST(Symmetric, FromValuesMatchesTruthTable) {
  Rng rng(3);
  for (int n = 1; n <= 9; ++n) {
    std::vector<std::uint8_t> v(static_cast<std::size_t>(n) + 1);
    for (auto& b : v) b = rng() & 1u;
    const Anf f = symmetric_from_values(v);
    EXPECT_TRUE(is_symmetric(f));
    for (Mask x = 0; x < (Mask{1} << n); ++x) EXPECT_EQ(evaluate(f, x), v[static_cast<std::size_t>(popcount(x))] != 0);
  }
}

TEST(Symmetric, KnownExamples) {
  EXPECT_EQ(symmetric_dd(8, 4).hyperplane_count, 0u);
  const auto v = symmetric_dd(8, 3);
  EXPECT_EQ(v.hyperplane_count, 1u);
  EXPECT_EQ(v.drop_weights, std::vector<int>{8});
  EXPECT_EQ(enumerate_degree_drop(elementary_symmetric(8, 4), 1).size(), 0u);
  const auto dd = enumerate_degree_drop(elementary_symmetric(8, 3), 1);
  ASSERT_EQ(dd.size(), 1u);
  EXPECT_EQ(dd[0].forms()[0], low_bits(8));
}

TEST(Symmetric, VerdictMatchesEnumeration) {
  for (int n = 4; n <= 9; ++n) {
    for (int r = 1; r <= n; ++r) {
      const Anf f = elementary_symmetric(n, r);
      const auto dd = enumerate_degree_drop(f, 1);
      std::vector<Mask> got;
      for (const auto& s : dd) got.push_back(s.forms()[0]);
      std::vector<Mask> want;
      for (Mask a = 1; a <= low_bits(n); ++a) {
        if (symmetric_hyperplane_drops(n, r, popcount(a))) want.push_back(a);
      }
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, want) << n << " " << r;
      EXPECT_EQ(symmetric_dd(n, r).hyperplane_count, want.size());
    }
  }
}

TEST(Symmetric, MajorityHasDropHyperplanesOnlyNearPowersOfTwo) {
  for (int n = 4; n <= 10; ++n) {
    const bool want = n == 4 || n == 5 || n == 8 || n == 9;
    EXPECT_EQ(exists_degree_drop(majority(n), 1), want) << n;
  }
}

TEST(Symmetric, DropAmountAgainstRestriction) {
  Rng rng(4);
  int checked = 0;
  for (int n = 3; n <= 8; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::uint8_t> v(static_cast<std::size_t>(n) + 1);
      for (auto& b : v) b = rng() & 1u;
      const Anf f = symmetric_from_values(v);
      if (f.degree() < Degree(2)) continue;
      const int r = f.degree().value();
      for (int w = 1; w <= n; ++w) {
        for (int eps = 0; eps <= 1; ++eps) {
          const Mask form[1] = {low_bits(w)};
          const Anf g = restrict_to(f, AffineSubspace::from_equations(n, form, static_cast<Mask>(eps)));
          const int drop = g.is_zero() ? n + 1 : r - g.degree().value();
          const DropAmount want = drop <= 0 ? DropAmount::NoDrop : (drop == 1 ? DropAmount::One : DropAmount::AtLeastTwo);
          EXPECT_EQ(symmetric_drop_amount(f, w, eps), want) << format_anf(f) << " w=" << w << " eps=" << eps;
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(Symmetric, DropAmountRejectsBadInput) {
  EXPECT_THROW(symmetric_drop_amount(parse_anf("12", 3), 1, 0), Error);
  EXPECT_THROW(symmetric_drop_amount(elementary_symmetric(4, 2), 1, 2), Error);
}

}  // namespace
}  // namespace degstab
