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
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "coarsekit/error.hpp"
#include "coarsekit/json_io.hpp"
#include "coarsekit/metric_space.hpp"
#include "coarsekit/sparse_vector.hpp"

namespace ck = coarsekit;

namespace {

TEST(DenseMetricSpace, SegmentDistances) {
  auto s = ck::DenseMetricSpace::integer_segment(-2, 3);
  ASSERT_EQ(s->size(), 6u);
  EXPECT_EQ(s->distance(0, 5), 5);
  EXPECT_EQ(s->label(0), "-2");
  EXPECT_TRUE(ck::find_triangle_violation(*s).empty());
}

TEST(DenseMetricSpace, RejectsBrokenTriangle) {
  // d(0,2) = 5 > d(0,1) + d(1,2) = 2
  std::vector<double> m = {0, 1, 5, 1, 0, 1, 5, 1, 0};
  EXPECT_THROW(ck::DenseMetricSpace({"a", "b", "c"}, m), ck::Error);
}

TEST(DenseMetricSpace, RejectsAsymmetry) {
  std::vector<double> m = {0, 1, 2, 0};
  EXPECT_THROW(ck::DenseMetricSpace({"a", "b"}, m), ck::Error);
}

TEST(DenseMetricSpace, RestrictKeepsDistances) {
  auto s = ck::DenseMetricSpace::integer_segment(0, 9);
  std::vector<ck::PointId> pts = {1, 4, 8};
  auto r = ck::DenseMetricSpace::restrict(*s, pts);
  EXPECT_EQ(r->distance(0, 2), 7);
  EXPECT_EQ(r->label(1), "4");
}

TEST(SetOperations, NeighborhoodsOnSegment) {
  auto s = ck::DenseMetricSpace::integer_segment(0, 9);
  std::vector<ck::PointId> a = {3, 4, 5, 6};
  EXPECT_EQ(ck::neighborhood(*s, a, 2), (ck::PointSet{1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_EQ(ck::inner_neighborhood(*s, a, 1), (ck::PointSet{4, 5}));
  EXPECT_TRUE(ck::inner_neighborhood(*s, a, 2).empty());
  EXPECT_EQ(ck::distance_to_complement(*s, 4, a), 2);
  EXPECT_EQ(ck::set_diameter(*s, a), 3);
  std::vector<ck::PointId> b = {9};
  EXPECT_EQ(ck::set_distance(*s, a, b), 3);
}

TEST(SetOperations, WholeSpaceHasInfiniteComplementDistance) {
  auto s = ck::DenseMetricSpace::integer_segment(0, 3);
  std::vector<ck::PointId> all = {0, 1, 2, 3};
  EXPECT_TRUE(std::isinf(ck::distance_to_complement(*s, 1, all)));
}

// inner_neighborhood(A, r) is exactly the set of points whose distance to
// the complement exceeds r.
TEST(SetOperations, InnerNeighborhoodMatchesComplementDistance) {
  auto s = ck::DenseMetricSpace::integer_segment(0, 20);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    ck::PointSet a;
    for (ck::PointId x = 0; x < s->size(); ++x) {
      if (rng() % 3 != 0) a.push_back(x);
    }
    const double r = rng() % 4;
    const auto inner = ck::inner_neighborhood(*s, a, r);
    ck::PointSet expect;
    for (ck::PointId x : a) {
      if (ck::distance_to_complement(*s, x, a) > r) expect.push_back(x);
    }
    EXPECT_EQ(inner, expect);
  }
}

TEST(SparseVector, NormsAndDifference) {
  ck::SparseVector v{{0, 3.0}, {5, -4.0}};
  EXPECT_DOUBLE_EQ(v.norm(2), 5.0);
  EXPECT_DOUBLE_EQ(v.norm(1), 7.0);
  EXPECT_DOUBLE_EQ(v.norm(ck::kInfinity), 4.0);
  ck::SparseVector w{{5, -4.0}, {7, 1.0}};
  const auto d = v.minus(w);
  EXPECT_EQ(d.support_size(), 2u);
  EXPECT_DOUBLE_EQ(d.at(0), 3.0);
  EXPECT_DOUBLE_EQ(d.at(7), -1.0);
  EXPECT_FALSE(v.nonnegative());
}

TEST(SparseVector, PoweredKeepsSupport) {
  ck::SparseVector v{{1, 0.25}, {2, 0.75}};
  const auto h = v.powered(0.5);
  EXPECT_DOUBLE_EQ(h.at(1), 0.5);
  EXPECT_NEAR(h.norm(2) * h.norm(2), v.norm(1), 1e-12);
}

TEST(JsonIo, SpaceRoundTrip) {
  auto s = ck::DenseMetricSpace::integer_segment(0, 4);
  const auto j = ck::space_to_json(*s);
  auto back = ck::space_from_json(j);
  ASSERT_EQ(back->size(), s->size());
  for (ck::PointId a = 0; a < s->size(); ++a) {
    for (ck::PointId b = 0; b < s->size(); ++b) {
      EXPECT_EQ(back->distance(a, b), s->distance(a, b));
    }
  }
}

TEST(JsonIo, NumberFormatting) {
  EXPECT_EQ(ck::json_number(3.0).dump(), "3");
  EXPECT_EQ(ck::json_number(1.0 / 3.0).dump(), "0.333333333");
  EXPECT_EQ(ck::json_number(ck::kInfinity).dump(), "\"inf\"");
  EXPECT_EQ(ck::dump_document({{"b", 1}, {"a", 2}}),
            "{\n  \"a\": 2,\n  \"b\": 1,\n  \"schema\": \"coarsekit/1\"\n}\n");
}

}  // namespace
