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
#ifndef COARSEKIT_PROPERTY_A_HPP_
#define COARSEKIT_PROPERTY_A_HPP_

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "coarsekit/cover.hpp"
#include "coarsekit/sparse_vector.hpp"

namespace coarsekit {

// Functions a^n_z on a finite space, one row per level n. Coordinates are
// indexed by point ids of the same space, so a^n_z lives in l_p(X).
struct PropertyAFamily {
  SpacePtr space;
  double p = 2;
  std::vector<double> levels;                         // increasing
  std::vector<double> support_radius;                 // R(n), per level
  std::vector<std::vector<SparseVector>> functions;   // [level][z]
  // Theoretical sup_{d(z,w) <= K} ||a^n_z - a^n_w||_p, if known.
  std::function<double(std::size_t level, double K)> bound;
  // Per level; 0 where no cover is involved.
  std::vector<std::size_t> multiplicity;
};

// Normalization within 1e-9, nonnegativity and supp(a^n_z) in
// B_{R(n)}(z). Throws Error(kAuditFailed) with the offending (n, z).
void validate_family(const PropertyAFamily& family);

// a^n_z = phi_z / ||phi_z||_p with phi_j(z) = d(z, X \ V_j), over the
// irreducible subcover left after shrinking cover_n by n. Coordinate j is
// written at the private point y_j of V_j. Needs Lambda(cover_n) >= n + 1
// (kLebesgueTooSmall). R(n) is the diameter of the subcover and the bound
// is 8 K m^{1/p} / n with m its multiplicity.
PropertyAFamily family_from_covers(
    const std::vector<std::pair<double, Cover>>& covers, double p);

// Tents max(1 - d(x, z)/n, 0), normalized in l_p. For p = inf this is the
// A_inf family with R(n) = n and bound K/n; finite p carries no bound.
PropertyAFamily tent_family(SpacePtr space, const std::vector<double>& levels,
                            double p = kInfinity);

inline PropertyAFamily a_infinity_family(SpacePtr space,
                                         const std::vector<double>& levels) {
  return tent_family(std::move(space), levels, kInfinity);
}

// The two pair inequalities behind the exponent changes.
//   power:  ||a^{p/m} - b^{p/m}||_m^m <= ||a - b||_p^p          (p <= m)
//   holder: ||a^p - b^p||_1 <= 2^{1/q} p ||a - b||_p           (1/p+1/q = 1)
// Both return the slack (right side minus left side).
double power_inequality_slack(const SparseVector& a, const SparseVector& b,
                              double p, double m);
double holder_inequality_slack(const SparseVector& a, const SparseVector& b,
                               double p);

struct ConversionAudit {
  std::size_t pairs = 0;
  double min_slack = kInfinity;
  std::size_t stride = 1;
};

struct ConvertedFamily {
  PropertyAFamily family;
  ConversionAudit audit;
};

// b = a^{p/m} for finite p <= m. Every pair with d <= max_K is audited
// against the power inequality (kAuditFailed on a violation).
ConvertedFamily convert_up(const PropertyAFamily& family, double m,
                           double max_K = 4,
                           std::size_t max_pairs = 20'000'000);

// a = b^p for integer p >= 2, audited against the Hoelder bound.
ConvertedFamily convert_down_to_1(const PropertyAFamily& family,
                                  double max_K = 4,
                                  std::size_t max_pairs = 20'000'000);

struct VariationReport {
  std::vector<double> levels;
  std::vector<double> Ks;
  // [level][K]; bound is NaN where the family carries none.
  std::vector<std::vector<double>> measured;
  std::vector<std::vector<double>> bound;
  std::size_t pairs = 0;
  std::size_t stride = 1;  // every stride-th base point was scanned
  bool within_bounds = true;
  // Nonincreasing in n for each K, up to 1e-9.
  bool monotone = true;
};

// sup over pairs with d(z, w) <= K of ||a^n_z - a^n_w||_p. Exact up to
// max_pairs pairs, then every stride-th base point.
VariationReport variation_report(const PropertyAFamily& family,
                                 const std::vector<double>& Ks,
                                 std::size_t max_pairs = 20'000'000);

}  // namespace coarsekit

#endif  // COARSEKIT_PROPERTY_A_HPP_
