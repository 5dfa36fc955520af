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
#ifndef COARSEKIT_DIMENSION_HPP_
#define COARSEKIT_DIMENSION_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "coarsekit/cover.hpp"
#include "coarsekit/extension.hpp"
#include "coarsekit/group.hpp"

namespace coarsekit {

struct MultiplicityWitness {
  std::size_t multiplicity = 0;
  Cover cover;
};

// Exact minimum of m(U) over covers by subsets of diameter <= D in which
// every subset of diameter <= lambda lies in one member. Up to 9 points
// (kTooLarge above); kInfeasible when some such subset has diameter > D.
MultiplicityWitness oracle_min_multiplicity(SpacePtr space, double lambda,
                                            double D);

// Upper bound by sweeping maximal lambda-cliques into sets of diameter
// <= D (and, on windows of Z or Z^2, tight bricks), then merging and
// dropping redundant sets. The witness passes the exact Lebesgue test and
// the diameter budget; kInfeasible as for the oracle.
MultiplicityWitness greedy_min_multiplicity(SpacePtr space, double lambda,
                                            double D);

// Diameter budget as a function of lambda: "linear:c" or "poly:c0,c1,...".
struct DPolicy {
  std::string text;
  Polynomial polynomial;

  static DPolicy parse(std::string_view text);
  double operator()(double lambda) const { return polynomial(lambda); }
};

struct ProfileRow {
  std::string group;
  double lambda = 0;
  double diam_budget = 0;
  std::size_t multiplicity = 0;
  std::string method;
  std::optional<double> envelope;
  double boundary_margin = 0;
};

struct DimensionProfile {
  std::vector<ProfileRow> rows;
  // Methods that could not run (cap, window too small), one line each.
  std::vector<std::string> notes;
};

// For each lambda: one row per method whose witness fits the budget
// (ball covers, bricks on Z^n, wreath_cover on Z^n wr G, heisenberg_cover,
// greedy on small windows) and a "best" row over every witness built for
// some lambda' >= lambda. Multiplicities are taken over points of margin
// >= lambda. Asserts the ball-cover envelope |B_lambda(e)| and
// monotonicity of the best rows (kAuditFailed).
DimensionProfile growth_curve(GroupPtr group, const std::vector<double>& lambdas,
                              const DPolicy& policy, int radius,
                              std::size_t cap = default_ball_cap());

struct GromovRow {
  std::string group;
  double lambda = 0;
  std::size_t cap = 0;
  double diameter = 0;
  std::optional<double> bound;  // linear bound for Z^n, D + 2R otherwise
  std::size_t multiplicity = 0;
  std::string method;
  double boundary_margin = 0;
};

// Smallest diameter reached under multiplicity <= cap: tight bricks on
// Z^n (asserted <= 2n(n+1) max(lambda, 1), i.e. <= 4 lambda on Z) and
// heisenberg_cover for the Heisenberg group (cap >= 6). kInfeasible when
// no construction meets the cap.
std::vector<GromovRow> gromov_profile(GroupPtr group, std::size_t cap,
                                      const std::vector<double>& lambdas,
                                      std::size_t ball_cap = default_ball_cap());

void write_profile_csv(std::ostream& out, const DimensionProfile& profile);
void write_gromov_csv(std::ostream& out, const std::vector<GromovRow>& rows);

// %.9g, with "inf" and "-inf".
std::string format_number(double v);

}  // namespace coarsekit

#endif  // COARSEKIT_DIMENSION_HPP_
