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
#include "coarsekit/embedding.hpp"
#include "coarsekit/error.hpp"
#include "coarsekit/property_a.hpp"
#include "coarsekit/word_metric.hpp"

namespace ck = coarsekit;

namespace {

ck::SparseVector random_unit(std::mt19937& rng, double p) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<ck::SparseVector::Entry> e;
  for (ck::SparseVector::Index i = 0; i < 12; ++i) {
    if (rng() % 2) e.emplace_back(i, u(rng));
  }
  if (e.empty()) e.emplace_back(0, 1.0);
  ck::SparseVector v(std::move(e));
  return v.scaled(1.0 / v.norm(p));
}

std::vector<std::pair<double, ck::Cover>> brick_covers_on_z(
    std::shared_ptr<const ck::WordMetricWindow> win) {
  std::vector<std::pair<double, ck::Cover>> covers;
  for (int n = 2; n <= 8; ++n) covers.emplace_back(n, ck::brick_cover_zl(win, 1, n + 1));
  return covers;
}

TEST(TentFamily, InfinityVariationWithinKOverN) {
  auto win = ck::ball_space(ck::parse_group("zn:2"), 8);
  const auto fam = ck::a_infinity_family(win, {1, 2, 3, 4, 6});
  ck::validate_family(fam);
  const auto rep = ck::variation_report(fam, {1, 2, 4});
  EXPECT_TRUE(rep.within_bounds);
  for (std::size_t i = 0; i < rep.levels.size(); ++i) {
    for (std::size_t k = 0; k < rep.Ks.size(); ++k) {
      EXPECT_LE(rep.measured[i][k], rep.Ks[k] / rep.levels[i] + 1e-12);
    }
  }
}

TEST(TentFamily, FiniteNormalization) {
  auto win = ck::ball_space(ck::parse_group("free:2"), 3);
  for (double p : {1.0, 2.0, 3.0}) {
    const auto fam = ck::tent_family(win, {1, 2}, p);
    ck::validate_family(fam);
    for (const auto& row : fam.functions) {
      for (const auto& v : row) EXPECT_NEAR(v.norm(p), 1.0, 1e-9);
    }
    const auto rep = ck::variation_report(fam, {1});
    EXPECT_TRUE(std::isnan(rep.bound[0][0]));
  }
}

TEST(CoverFamily, NeedsLebesgueAboveN) {
  auto win = ck::ball_space(ck::parse_group("zn:1"), 20);
  std::vector<std::pair<double, ck::Cover>> covers;
  covers.emplace_back(3, ck::ball_cover(win, 2));  // Lambda = 3
  try {
    ck::family_from_covers(covers, 2);
    FAIL() << "no throw";
  } catch (const ck::Error& e) {
    EXPECT_EQ(e.code(), ck::ErrorCode::kLebesgueTooSmall);
  }
}

TEST(CoverFamily, BricksOnZWithinBoundAndDecaying) {
  auto win = ck::ball_space(ck::parse_group("zn:1"), 40);
  for (double p : {1.0, 2.0}) {
    const auto fam = ck::family_from_covers(brick_covers_on_z(win), p);
    ck::validate_family(fam);
    const auto rep = ck::variation_report(fam, {1, 2, 4});
    EXPECT_TRUE(rep.within_bounds) << p;
    EXPECT_TRUE(rep.monotone) << p;
  }
}

TEST(Inequalities, PowerAndHolderOnRandomVectors) {
  std::mt19937 rng(17);
  for (auto [p, m] : {std::pair{1.0, 2.0}, std::pair{2.0, 4.0}, std::pair{1.5, 3.0}}) {
    for (int t = 0; t < 500; ++t) {
      const auto a = random_unit(rng, p), b = random_unit(rng, p);
      EXPECT_GE(ck::power_inequality_slack(a, b, p, m), -1e-9);
    }
  }
  for (double p : {2.0, 3.0}) {
    for (int t = 0; t < 500; ++t) {
      const auto a = random_unit(rng, p), b = random_unit(rng, p);
      EXPECT_GE(ck::holder_inequality_slack(a, b, p), -1e-9);
    }
  }
}

TEST(Conversions, UpAndDownKeepBounds) {
  auto win = ck::ball_space(ck::parse_group("zn:1"), 30);
  const auto fam = ck::family_from_covers(brick_covers_on_z(win), 2);
  const auto up = ck::convert_up(fam, 4);
  ck::validate_family(up.family);
  EXPECT_GE(up.audit.min_slack, -1e-9);
  EXPECT_TRUE(ck::variation_report(up.family, {1, 2, 4}).within_bounds);
  const auto down = ck::convert_down_to_1(fam);
  ck::validate_family(down.family);
  EXPECT_GE(down.audit.min_slack, -1e-9);
  EXPECT_TRUE(ck::variation_report(down.family, {1, 2, 4}).within_bounds);
}

TEST(Embedding, TentsOnZPass) {
  auto win = ck::ball_space(ck::parse_group("zn:1"), 40);
  std::vector<double> levels;
  for (int n = 1; n <= 40; ++n) levels.push_back(n);
  const auto fam = ck::tent_family(win, levels, 2);
  const auto base = *win->find({0});
  const auto res = ck::coarse_embedding(fam, base, 4);
  EXPECT_TRUE(res.pass);
  EXPECT_EQ(res.images[base].support_size(), 0u);
  for (const auto& b : res.buckets) {
    EXPECT_LE(b.rho1, b.min_norm + 1e-9);
    EXPECT_LE(b.max_norm, b.rho2 + 1e-9);
  }
}

TEST(Embedding, TruncatedScheduleIsReported) {
  auto win = ck::ball_space(ck::parse_group("zn:1"), 20);
  const auto fam = ck::tent_family(win, {1, 2}, 2);
  try {
    ck::coarse_embedding(fam, *win->find({0}), 5);
    FAIL() << "no throw";
  } catch (const ck::Error& e) {
    EXPECT_EQ(e.code(), ck::ErrorCode::kSubsequenceUnavailable);
  }
  const auto finf = ck::a_infinity_family(win, {1, 2});
  EXPECT_THROW(ck::coarse_embedding(finf, 0, 1), ck::Error);
}

}  // namespace
