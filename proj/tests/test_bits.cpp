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

TEST(Bits, PopcountAndParity) {
  EXPECT_EQ(popcount(0b1011), 3);
  EXPECT_EQ(parity(0b1011), 1);
  EXPECT_EQ(parity(0b11), 0);
  EXPECT_EQ(low_bits(0), 0u);
  EXPECT_EQ(low_bits(5), 31u);
  EXPECT_EQ(low_bits(32), ~Mask{0});
}

TEST(BitTable, SetGetFlipCount) {
  BitTable t(7);
  EXPECT_TRUE(t.none());
  t.set(3, true);
  t.set(100, true);
  t.flip(127);
  EXPECT_TRUE(t.get(3));
  EXPECT_TRUE(t.get(100));
  EXPECT_TRUE(t.get(127));
  EXPECT_EQ(t.count(), 3u);
  t.set(3, false);
  EXPECT_FALSE(t.get(3));
  EXPECT_EQ(t.count(), 2u);
}

TEST(BitTable, MaxSetWeight) {
  BitTable t(8);
  EXPECT_EQ(t.max_set_weight(), -1);
  t.set(0, true);
  EXPECT_EQ(t.max_set_weight(), 0);
  t.set(0b10110001, true);
  EXPECT_EQ(t.max_set_weight(), 4);
  t.set(0b01111111, true);
  EXPECT_EQ(t.max_set_weight(), 7);
}

TEST(BitTable, MaxSetWeightMatchesScan) {
  Rng rng(11);
  for (int n = 0; n <= 10; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      BitTable t(n);
      const std::uint64_t size = std::uint64_t{1} << n;
      const int density = static_cast<int>(rng() % 5);
      int want = -1;
      for (std::uint64_t i = 0; i < size; ++i) {
        if (static_cast<int>(rng() % 16) < density) {
          t.set(i, true);
          want = std::max(want, std::popcount(i));
        }
      }
      EXPECT_EQ(t.max_set_weight(), want) << "n=" << n;
    }
  }
}

// The transform over F_2 is its own inverse.
TEST(BitTable, MobiusIsAnInvolution) {
  Rng rng(5);
  for (int n = 0; n <= 12; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      BitTable t(n);
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) t.set(i, rng() & 1u);
      BitTable u = t;
      u.mobius();
      u.mobius();
      EXPECT_EQ(t, u);
    }
  }
}

TEST(BitTable, MobiusMatchesSubsetSum) {
  Rng rng(9);
  for (int n = 1; n <= 7; ++n) {
    BitTable t(n);
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t i = 0; i < size; ++i) t.set(i, rng() & 1u);
    BitTable u = t;
    u.mobius();
    for (std::uint64_t x = 0; x < size; ++x) {
      bool acc = false;
      for (std::uint64_t s = 0; s < size; ++s) {
        if ((s & x) == s) acc ^= t.get(s);
      }
      EXPECT_EQ(u.get(x), acc);
    }
  }
}

TEST(SpanPoints, VisitsEveryPointOnceInGrayOrder) {
  const std::vector<Mask> basis = {0b0011, 0b0110, 0b1000};
  std::set<Mask> seen;
  std::vector<std::uint64_t> order;
  for_each_span_point(0b10000, basis, [&](std::uint64_t g, Mask p) {
    seen.insert(p);
    order.push_back(g);
    Mask want = 0b10000;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if ((g >> i) & 1u) want ^= basis[i];
    }
    EXPECT_EQ(p, want);
  });
  EXPECT_EQ(seen.size(), 8u);
  EXPECT_EQ(order.size(), 8u);
}

}  // namespace
}  // namespace degstab
