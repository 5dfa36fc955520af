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


#include <vector>

#include <gtest/gtest.h>

#include "coarsekit/dimension.hpp"
#include "coarsekit/error.hpp"
#include "coarsekit/extension.hpp"
#include "coarsekit/metric_space.hpp"

namespace ck = coarsekit;

namespace {

ck::ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const ck::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no throw";
  return ck::ErrorCode::kInvalidArgument;
}

TEST(Polynomial, ParseAndCompose) {
  const auto p = ck::Polynomial::parse("1,2,3");
  EXPECT_DOUBLE_EQ(p(2), 1 + 4 + 12);
  const auto id = ck::Polynomial::parse("0,1");
  // p2(p3(6 p1)) + 2 p1 with all three the identity
  EXPECT_DOUBLE_EQ(ck::gromov_bound_compose(id, id, id, 5), 40);
  const auto neg = ck::Polynomial::parse("0,-1");
  EXPECT_EQ(code_of([&] { ck::gromov_bound_compose(neg, id, id, 1); }),
            ck::ErrorCode::kInvalidArgument);
}

TEST(DPolicy, Parse) {
  EXPECT_DOUBLE_EQ(ck::DPolicy::parse("linear:4")(3), 12);
  EXPECT_DOUBLE_EQ(ck::DPolicy::parse("poly:1,0,1")(3), 10);
  EXPECT_THROW(ck::DPolicy::parse("cubic"), ck::Error);
}

TEST(Oracle, SmallSegments) {
  auto s = ck::DenseMetricSpace::integer_segment(0, 3);
  EXPECT_EQ(ck::oracle_min_multiplicity(s, 0, 0).multiplicity, 1u);
  EXPECT_EQ(ck::oracle_min_multiplicity(s, 1, 1).multiplicity, 2u);
  EXPECT_EQ(ck::oracle_min_multiplicity(s, 1, 3).multiplicity, 1u);
  EXPECT_EQ(code_of([&] { ck::oracle_min_multiplicity(s, 2, 1); }),
            ck::ErrorCode::kInfeasible);
  auto big = ck::DenseMetricSpace::integer_segment(0, 9);
  EXPECT_EQ(code_of([&] { ck::oracle_min_multiplicity(big, 1, 2); }),
            ck::ErrorCode::kTooLarge);
}

TEST(Oracle, WitnessesPassTheExactTest) {
  for (int n = 1; n <= 7; ++n) {
    auto s = ck::DenseMetricSpace::integer_segment(0, n - 1);
    for (double lam : {0.0, 1.0, 2.0}) {
      for (double D = lam; D <= 5; ++D) {
        const auto o = ck::oracle_min_multiplicity(s, lam, D);
        EXPECT_TRUE(ck::exact_lebesgue_at_least(o.cover, lam));
        EXPECT_LE(ck::cover_diameter(o.cover), D);
        EXPECT_EQ(ck::multiplicity(o.cover), o.multiplicity);
        const auto g = ck::greedy_min_multiplicity(s, lam, D);
        EXPECT_GE(g.multiplicity, o.multiplicity);
      }
    }
  }
}

TEST(Greedy, SquareBox) {
  std::vector<std::string> labels;
  std::vector<double> m;
  const int side = 8;
  for (int i = 0; i < side * side; ++i) labels.push_back(std::to_string(i));
  for (int a = 0; a < side * side; ++a) {
    for (int b = 0; b < side * side; ++b) {
      m.push_back(std::abs(a / side - b / side) + std::abs(a % side - b % side));
    }
  }
  auto s = std::make_shared<const ck::DenseMetricSpace>(labels, m);
  const auto g = ck::greedy_min_multiplicity(s, 1, 8);
  EXPECT_TRUE(ck::exact_lebesgue_at_least(g.cover, 1));
  EXPECT_LE(ck::cover_diameter(g.cover), 8);
  EXPECT_LE(g.multiplicity, 3u);
}

TEST(Gromov, LinearOnZ) {
  const auto rows = ck::gromov_profile(ck::parse_group("zn:1"), 2, {1, 2, 4, 8});
  for (const auto& r : rows) {
    EXPECT_LE(r.multiplicity, 2u);
    EXPECT_LE(r.diameter, 4 * r.lambda);
  }
  EXPECT_EQ(code_of([] { ck::gromov_profile(ck::parse_group("free:2"), 2, {1}); }),
            ck::ErrorCode::kInfeasible);
}

TEST(GrowthCurve, FlatOnZ) {
  const auto prof = ck::growth_curve(ck::parse_group("zn:1"), {1, 2, 3, 4},
                                     ck::DPolicy::parse("linear:4"), 12);
  std::size_t last = 0;
  for (const auto& r : prof.rows) {
    if (r.method != "best") continue;
    EXPECT_LE(r.multiplicity, 2u);
    EXPECT_GE(r.multiplicity, last);
    last = r.multiplicity;
  }
  EXPECT_GT(last, 0u);
}

TEST(Extension, PlaneConclusions) {
  const auto res = ck::plane_extension_cover(6, 2);
  const auto& e = res.extension;
  EXPECT_GE(e.stats.lebesgue_pointwise, 2);
  EXPECT_LE(e.stats.diameter, res.parameters.D + 2 * res.parameters.R);
  EXPECT_LE(e.stats.multiplicity,
            e.facts.base_multiplicity * e.facts.kernel_multiplicity);
}

TEST(Extension, SmallKernelLebesgueIsRejected) {
  EXPECT_EQ(code_of([] { ck::plane_extension_cover(6, 2, 10); }),
            ck::ErrorCode::kPreconditionFailed);
}

TEST(Extension, LamplighterSmall) {
  const auto res = ck::wreath_cover(ck::parse_group("lamplighter"), 3, 1);
  EXPECT_LE(res.extension.stats.multiplicity, res.parameters.theoretical_bound);
  EXPECT_GE(res.extension.stats.lebesgue_pointwise, 1);
}

}  // namespace
