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

#include <set>
#include <vector>

#include "support.hpp"

namespace degstab {
namespace {

using testing::Rng;

Anf rep(const char* id) { return catalog::representative(id).at(8); }

Anf substituted(const Anf& f, const char* sub) {
  return top_part(compose_affine(f, parse_substitution(sub, f.num_vars()), 0));
}

// Sparse homogeneous functions pass the sufficient checkers more often.
Anf sparse_homogeneous(Rng& rng, int n, int r, unsigned per_256) {
  const auto pool = detail::masks_of_weight(n, r);
  for (;;) {
    Anf f(n);
    for (Mask m : pool) {
      if ((rng() & 255u) < per_256) f.toggle(m);
    }
    if (!f.is_zero()) return f;
  }
}

TEST(MonomialSet, RoundTripAndValidation) {
  const Anf f = parse_anf("12+34", 5);
  const MonomialSet s = MonomialSet::from_anf(f);
  EXPECT_EQ(s.degree(), 2);
  EXPECT_EQ(s.to_anf(), f);
  EXPECT_TRUE(s.contains(0b11));
  MonomialSet t(5, 2);
  EXPECT_THROW(t.insert(0b111), Error);
  EXPECT_THROW(MonomialSet::from_anf(parse_anf("12+3", 4)), Error);
}

TEST(Checkers, ConditionOne) {
  EXPECT_TRUE(check_c1(parse_anf("12+34", 4)));
  EXPECT_FALSE(check_c1(parse_anf("345+125", 5)));
}

TEST(Checkers, Prop4Examples) {
  EXPECT_TRUE(check_prop4(parse_anf("12+34", 5), 1));
  EXPECT_TRUE(k_membership(parse_anf("12+34", 5), 1));
  // Condition one holds yet x1+x2=0 is a degree-drop hyperplane.
  const Anf g = parse_anf("13+14+23+24", 4);
  EXPECT_TRUE(check_c1(g));
  EXPECT_FALSE(check_prop4(g, 1));
  EXPECT_TRUE(is_degree_drop(g, parse_subspace("x1+x2=0", 4)));
  EXPECT_THROW(check_prop4(g, 2), Error);
}

TEST(Checkers, Prop4OnCatalog) {
  std::vector<int> pass;
  for (const auto& r : catalog::representatives()) {
    if (r.index() >= 13 && check_prop4(r.at(8), 1)) pass.push_back(r.index());
  }
  EXPECT_EQ(pass, (std::vector<int>{13, 15, 16, 28, 29, 30, 32}));
}

// k_membership implies every k-set of variables is avoided by some monomial.
TEST(Checkers, AvoidanceIsNecessaryOnCatalog) {
  for (const auto& r : catalog::representatives()) {
    const Anf f = r.at(8);
    for (int k = 1; k <= 2; ++k) {
      if (k_membership(f, k)) { EXPECT_TRUE(check_ck(f, k)) << r.id << " k=" << k; }
    }
  }
}

TEST(SwapCondition, Examples) {
  EXPECT_TRUE(check_theorem5(rep("f11")).has_value());
  EXPECT_FALSE(check_theorem5(parse_anf("123+145+167", 7)).has_value());
  const auto w = check_theorem5(parse_anf("12+34", 4));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->size(), 4u);
}

TEST(SwapCondition, CatalogFromThirteen) {
  for (const auto& r : catalog::representatives()) {
    if (r.index() < 13) continue;
    EXPECT_EQ(check_theorem5(r.at(8)).has_value(), r.id != "f22") << r.id;
  }
}

// The change of variables 1<-1+3, 2<-2+5+7, 7<-5+7 does not make f22 pass
// under any reading of the arrows; replacing the last entry by 7<-4+7 does,
// and 2<-2+4, 7<-4+7 is a shorter one.
TEST(SwapCondition, F22AfterChangeOfVariables) {
  const Anf f = rep("f22");
  EXPECT_FALSE(check_theorem5(substituted(f, "1<-1+3, 2<-2+5+7, 7<-5+7")).has_value());
  EXPECT_TRUE(check_theorem5(substituted(f, "1<-1+3, 2<-2+5+7, 7<-4+7")).has_value());
  EXPECT_TRUE(check_theorem5(substituted(f, "2<-2+4, 7<-4+7")).has_value());
  EXPECT_TRUE(k_membership(f, 1));
}

TEST(FastPointChecker, CatalogFromThirteen) {
  std::set<std::string> fails;
  for (const auto& r : catalog::representatives()) {
    if (r.index() >= 13 && !check_fastpoint_sufficient(r.at(8))) fails.insert(r.id);
  }
  // f24 also fails: x8 occurs only in 568 and both 356 and 456 are present.
  EXPECT_EQ(fails, (std::set<std::string>{"f18", "f21", "f22", "f24"}));
}

TEST(FastPointChecker, AfterChangeOfVariables) {
  EXPECT_TRUE(check_fastpoint_sufficient(substituted(rep("f18"), "8<-1+8")));
  EXPECT_TRUE(check_fastpoint_sufficient(substituted(rep("f21"), "3<-3+4")));
  // The reference 1<-1+3, 7<-5+7 leaves f22 failing; 7<-7+8 in its place works.
  EXPECT_FALSE(check_fastpoint_sufficient(substituted(rep("f22"), "1<-1+3, 7<-5+7")));
  EXPECT_TRUE(check_fastpoint_sufficient(substituted(rep("f22"), "1<-1+3, 7<-7+8")));
  EXPECT_TRUE(fast_points(rep("f24")).points.empty());
}

TEST(FastPointChecker, SingleMonomial) {
  const Anf f = parse_anf("12", 3);
  EXPECT_FALSE(check_fastpoint_sufficient(f));
  const auto fp = fast_points(f);
  EXPECT_EQ(fp.points, std::vector<Mask>{0b100});
}

TEST(ComplementMembership, FullCoverage) {
  const Anf f = parse_anf("12+34", 4);
  EXPECT_TRUE(complement_membership(f, 1));
  EXPECT_TRUE(k_membership(complement(f), 1));
}

// Every sufficient checker is sound against exhaustive enumeration.
TEST(Checkers, SoundOnRandomFunctions) {
  Rng rng(1);
  int hits = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 3);
    const int r = 2 + static_cast<int>(rng() % static_cast<unsigned>(n - 3));
    const Anf f = sparse_homogeneous(rng, n, r, 40 + static_cast<unsigned>(rng() % 60));
    const MonomialSet s = MonomialSet::from_anf(f);
    if (check_theorem5(s)) {
      ++hits;
      EXPECT_FALSE(exists_degree_drop(f, 1)) << format_anf(f);
    }
    if (check_fastpoint_sufficient(s)) {
      ++hits;
      EXPECT_TRUE(fast_points(f).points.empty()) << format_anf(f);
    }
    for (int k = 1; k < r && k <= 2; ++k) {
      if (check_prop4(s, k)) {
        ++hits;
        EXPECT_FALSE(exists_degree_drop(f, k)) << format_anf(f);
      }
      if (complement_membership(s, k)) {
        ++hits;
        EXPECT_FALSE(exists_degree_drop(complement(f), k)) << format_anf(f);
      }
    }
  }
  EXPECT_GT(hits, 50);
}

TEST(NoDropBuilder, TenThreeHasNoDropHyperplane) {
  const auto res = algorithm1(10, 3, 1);
  EXPECT_LE(res.core.size(), 10u);  // one monomial may serve several steps
  EXPECT_TRUE(check_theorem5(res.core).has_value());
  EXPECT_FALSE(exists_degree_drop(res.core.to_anf(), 1));
}

TEST(NoDropBuilder, TwelveFivePassesSwapCheck) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto res = algorithm1(12, 5, seed);
    EXPECT_TRUE(check_theorem5(res.core).has_value()) << seed;
    for (auto b : res.blocked) EXPECT_LE(b, res.blocked_limit);
  }
}

TEST(NoDropBuilder, ExtensionKeepsSwapCheck) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto res = algorithm1(10, 4, seed, 0.3);
    EXPECT_GE(res.full.size(), res.core.size());
    EXPECT_TRUE(check_theorem5(res.full).has_value()) << seed;
    EXPECT_FALSE(exists_degree_drop(res.full.to_anf(), 1)) << seed;
  }
}

TEST(NoDropBuilder, DeterministicPerSeed) {
  EXPECT_EQ(algorithm1(11, 4, 7, 0.2).full, algorithm1(11, 4, 7, 0.2).full);
}

TEST(NoDropBuilder, Preconditions) {
  try {
    algorithm1(10, 7, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PreconditionViolated);
  }
  EXPECT_THROW(algorithm1(8, 3, 1), Error);
  EXPECT_THROW(algorithm1(10, 3, 1, 1.5), Error);
}

TEST(Circular, Examples) {
  EXPECT_EQ(circular_construction(15, 5, 2).to_anf(),
            parse_anf("x1*x2*x3*x4*x5+x4*x5*x6*x7*x8+x7*x8*x9*x10*x11+x10*x11*x12*x13*x14+x13*x14*x15*x1*x2", 15));
  EXPECT_TRUE(check_prop4(circular_construction(15, 5, 2), 2));
  EXPECT_EQ(circular_construction(10, 7, 1).size(), 5u);
  EXPECT_EQ(circular_construction(6, 2, 1).to_anf(), parse_anf("12+34+56", 6));
  EXPECT_THROW(circular_construction(10, 5, 2), Error);
}

TEST(Circular, TenSevenHasNoDropHyperplane) {
  const MonomialSet s = circular_construction(10, 7, 1);
  EXPECT_TRUE(check_prop4(s, 1));
  EXPECT_FALSE(exists_degree_drop(s.to_anf(), 1));
}

TEST(DirectSum, Shape) {
  EXPECT_EQ(direct_sum(2, 3, 7).to_anf(), parse_anf("12+34+56", 7));
  EXPECT_THROW(direct_sum(3, 3, 8), Error);
}

}  // namespace
}  // namespace degstab
