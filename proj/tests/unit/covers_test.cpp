// Copyright 2026 The coarsekit Authors
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


#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "coarsekit/constructions.hpp"
#include "coarsekit/cover.hpp"
#include "coarsekit/error.hpp"
#include "coarsekit/metric_space.hpp"
#include "coarsekit/word_metric.hpp"

namespace ck = coarsekit;

namespace {

std::vector<ck::PointSet> random_sets(std::size_t n, std::mt19937& rng) {
  std::vector<ck::PointSet> sets;
  const std::size_t k = 2 + rng() % 4;
  for (std::size_t i = 0; i < k; ++i) {
    ck::PointSet s;
    const std::size_t lo = rng() % n;
    const std::size_t hi = std::min(n - 1, lo + rng() % 5);
    for (std::size_t x = lo; x <= hi; ++x) s.push_back(ck::PointId(x));
    sets.push_back(s);
  }
  // make it covering
  std::vector<char> hit(n, 0);
  for (const auto& s : sets) {
    for (auto x : s) hit[x] = 1;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!hit[x]) sets.push_back({ck::PointId(x)});
  }
  return sets;
}

bool subset_of(const std::vector<ck::PointId>& a, std::span<const ck::PointId> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

TEST(Cover, RejectsNonCovering) {
  auto s = ck::DenseMetricSpace::integer_segment(0, 3);
  try {
    ck::Cover c(s, {{0, 1}, {3}});
    FAIL() << "no throw";
  } catch (const ck::Error& e) {
    EXPECT_EQ(e.code(), ck::ErrorCode::kNotCovering);
  }
  EXPECT_THROW(ck::Cover(s, {{0, 1, 2, 3}, {}}), ck::Error);
}

TEST(Cover, BallCoverOnZ) {
  auto win = ck::ball_space(ck::parse_group("zn:1"), 8);
  const auto cover = ck::ball_cover(win, 2);
  const auto stats = ck::cover_stats(cover, 2);
  EXPECT_EQ(stats.multiplicity, 5u);
  EXPECT_GE(stats.lebesgue_pointwise, 2);
  EXPECT_EQ(stats.diameter, 4);
  EXPECT_TRUE(ck::lebesgue_at_least(cover, 2, 2));
}

// Pointwise Lebesgue number against its definition.
TEST(Cover, PointwiseLebesgueBruteForce) {
  std::mt19937 rng(21);
  auto s = ck::DenseMetricSpace::integer_segment(0, 11);
  for (int t = 0; t < 200; ++t) {
    ck::Cover c(s, random_sets(s->size(), rng));
    double expect = ck::kInfinity;
    for (ck::PointId x = 0; x < s->size(); ++x) {
      double best = 0;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto set = c.set(i);
        if (!std::binary_search(set.begin(), set.end(), x)) continue;
        double d = ck::kInfinity;
        for (ck::PointId y = 0; y < s->size(); ++y) {
          if (!std::binary_search(set.begin(), set.end(), y)) {
            d = std::min(d, s->distance(x, y));
          }
        }
        best = std::max(best, d);
      }
      expect = std::min(expect, best);
    }
    EXPECT_EQ(ck::pointwise_lebesgue(c), expect);
    std::size_t m = 0;
    for (ck::PointId x = 0; x < s->size(); ++x) {
      std::size_t k = 0;
      for (std::size_t i = 0; i < c.size(); ++i) {
        const auto set = c.set(i);
        k += std::binary_search(set.begin(), set.end(), x);
      }
      m = std::max(m, k);
    }
    EXPECT_EQ(ck::multiplicity(c), m);
  }
}

// Exact Lebesgue test against enumeration of all subsets.
TEST(Cover, ExactLebesgueBruteForce) {
  std::mt19937 rng(4);
  auto s = ck::DenseMetricSpace::integer_segment(0, 9);
  const std::size_t n = s->size();
  for (int t = 0; t < 100; ++t) {
    ck::Cover c(s, random_sets(n, rng));
    for (double lam : {0.0, 1.0, 2.0, 3.0}) {
      bool expect = true;
      for (std::uint32_t mask = 1; mask < (1u << n) && expect; ++mask) {
        std::vector<ck::PointId> sub;
        for (std::size_t x = 0; x < n; ++x) {
          if (mask >> x & 1) sub.push_back(ck::PointId(x));
        }
        if (ck::set_diameter(*s, sub) > lam) continue;
        bool inside = false;
        for (std::size_t i = 0; i < c.size() && !inside; ++i) {
          inside = subset_of(sub, c.set(i));
        }
        expect = inside;
      }
      EXPECT_EQ(ck::exact_lebesgue_at_least(c, lam), expect) << "lambda=" << lam;
    }
  }
}

TEST(Cover, MaximalCliquesOnSegment) {
  auto s = ck::DenseMetricSpace::integer_segment(0, 5);
  std::vector<ck::PointSet> got;
  ck::for_each_maximal_clique(*s, 1, [&](const ck::PointSet& c) {
    got.push_back(c);
    return true;
  });
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<ck::PointSet>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}));
}

TEST(Bricks, StandardBricksOnZ2) {
  auto win = ck::ball_space(ck::parse_group("zn:2"), 10);
  for (int lam : {1, 2, 3}) {
    const auto c = ck::brick_cover_zl(win, 2, lam);
    const auto st = ck::cover_stats(c);
    EXPECT_LE(st.multiplicity, 3u);
    EXPECT_TRUE(ck::lebesgue_at_least(c, lam));
  }
}

TEST(Bricks, TightBricksPassExactTest) {
  auto win = ck::ball_space(ck::parse_group("zn:1"), 12);
  for (int lam : {1, 2, 3}) {
    const auto c = ck::brick_cover_zl(win, 1, lam, ck::BrickSpacing::kTight);
    EXPECT_TRUE(ck::exact_lebesgue_at_least(c, lam));
    EXPECT_LE(ck::multiplicity(c), 2u);
  }
}

TEST(Families, BrickFamiliesToCover) {
  auto win = ck::ball_space(ck::parse_group("zn:2"), 12);
  for (int lam : {1, 2, 4}) {
    const int r = 2 * lam + 1;
    const auto fams = ck::brick_families(*win, r);
    EXPECT_EQ(fams.size(), 3u);
    const auto c = ck::families_to_cover(win, fams, r, lam);
    EXPECT_LE(ck::multiplicity(c), 3u);
    EXPECT_TRUE(ck::lebesgue_at_least(c, lam));
  }
}

TEST(Families, RejectsSmallR) {
  auto win = ck::ball_space(ck::parse_group("zn:2"), 6);
  const auto fams = ck::brick_families(*win, 5);
  try {
    ck::families_to_cover(win, fams, 4, 2);
    FAIL() << "no throw";
  } catch (const ck::Error& e) {
    EXPECT_EQ(e.code(), ck::ErrorCode::kPreconditionFailed);
  }
}

TEST(PartitionOfUnity, SumsToOne) {
  auto win = ck::ball_space(ck::parse_group("zn:2"), 6);
  const auto c = ck::ball_cover(win, 1);
  const auto phi = ck::partition_of_unity(c);
  ASSERT_EQ(phi.size(), win->size());
  for (const auto& v : phi) {
    EXPECT_TRUE(v.nonnegative());
    EXPECT_NEAR(v.norm(1), 1.0, 1e-12);
  }
}

TEST(PartitionOfUnity, LipschitzWithinBound) {
  auto win = ck::ball_space(ck::parse_group("zn:1"), 12);
  const auto c = ck::ball_cover(win, 2);
  const auto audit = ck::lipschitz_audit(c);
  EXPECT_TRUE(audit.pass);
  EXPECT_TRUE(audit.exhaustive);
  EXPECT_LE(audit.measured, audit.bound + 1e-9);
}

TEST(Shrink, PrivatePointsAndCoverage) {
  auto win = ck::ball_space(ck::parse_group("zn:1"), 20);
  const auto c = ck::ball_cover(win, 3);
  const auto irr = ck::shrink_to_irreducible(c, 2);
  ASSERT_EQ(irr.private_points.size(), irr.cover.size());
  for (std::size_t j = 0; j < irr.cover.size(); ++j) {
    const auto set = irr.cover.set(j);
    const auto y = irr.private_points[j];
    EXPECT_TRUE(std::binary_search(set.begin(), set.end(), y));
    EXPECT_GT(ck::distance_to_complement(*win, y, set), 2);
    // y is deep inside no other member
    for (std::size_t i = 0; i < irr.cover.size(); ++i) {
      if (i == j) continue;
      EXPECT_LE(ck::distance_to_complement(*win, y, irr.cover.set(i)), 2);
    }
  }
  EXPECT_LE(irr.cover.size(), c.size());
}

}  // namespace
