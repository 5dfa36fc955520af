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
#ifndef COARSEKIT_CONSTRUCTIONS_HPP_
#define COARSEKIT_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "coarsekit/cover.hpp"
#include "coarsekit/sparse_vector.hpp"
#include "coarsekit/word_metric.hpp"

namespace coarsekit {

// {B_lambda(x) : x in X}. Set i is the ball around point i, which is also
// the Lebesgue hint for point i.
Cover ball_cover(SpacePtr space, double lambda);

using SetFamily = std::vector<PointSet>;

// Lambda-neighborhoods of every member of every family. Audits r > 2 lambda
// (kPreconditionFailed), r-disjointness inside each family (kNotDisjoint,
// witness pair), coverage (kNotCovering), and on the result multiplicity
// <= #families and Lambda >= lambda (kAuditFailed).
Cover families_to_cover(SpacePtr space, const std::vector<SetFamily>& families,
                        double r, double lambda);

// r-disjoint families on a window of Z (two families of blocks) or Z^2
// (three colour classes of a running-bond brick wall).
std::vector<SetFamily> brick_families(const WordMetricWindow& window, int r);

enum class BrickSpacing {
  kStandard,  // copies shifted by 2 lambda, cube side 2(l+1) lambda
  kTight,     // copies shifted by max(1, 2 lambda - 2)
};

// Groups points given by integer coordinates into l+1 shifted cube
// lattices. Each copy is a partition, so multiplicity <= l+1, and every
// point lies at l1-depth >= lambda in some cube. lambda = 0 gives
// singletons. Identical sets are merged.
std::vector<PointSet> brick_sets(
    const std::vector<std::vector<std::int64_t>>& coords, int lambda,
    BrickSpacing spacing = BrickSpacing::kStandard);

// Brick cover of a window of Z^l. Multiplicity and Lambda are audited
// against l+1 and lambda (kAuditFailed).
Cover brick_cover_zl(std::shared_ptr<const WordMetricWindow> window, int l,
                     int lambda, BrickSpacing spacing = BrickSpacing::kStandard);

// phi_U(x) = d(x, X \ U) / sum_V d(x, X \ V), indexed by set number.
// Sets equal to the whole space share the mass at every point.
SparseVector partition_of_unity_at(const Cover& cover, PointId x);
std::vector<SparseVector> partition_of_unity(const Cover& cover);

struct LipschitzAudit {
  double measured = 0;    // max ||p(x)-p(y)||_2 / d(x,y) over scanned pairs
  double bound = 0;       // (2n+3)^2 / Lambda
  std::size_t multiplicity = 0;
  double lebesgue = 0;
  std::size_t pairs_scanned = 0;
  bool exhaustive = true;
  double scan_radius = kInfinity;   // pairs farther apart were not scanned
  double unscanned_bound = 0;       // sqrt(2) / (next distance) for those
  std::size_t stride = 1;           // base points visited: every stride-th
  PointId witness_a = 0;
  PointId witness_b = 0;
  bool pass = false;
};

// Pairs are scanned exhaustively up to max_pairs. Past that, pairs within
// a radius are scanned and the rest are bounded by sqrt(2)/d, since p maps
// into the simplex. Very large spaces use every stride-th base point.
// Multiplicity and Lambda are recomputed unless passed in (0 and a
// negative value mean unknown).
LipschitzAudit lipschitz_audit(const Cover& cover,
                               std::size_t max_pairs = 20'000'000,
                               std::size_t known_multiplicity = 0,
                               double known_lebesgue = -1);

struct IrreducibleSubcover {
  Cover cover;                          // unshrunk members that survived
  std::vector<PointId> private_points;  // one per member, inside its shrink
  std::vector<std::size_t> source_indices;
};

// Shrinks every set by n, drops empty ones, removes redundant shrunk sets
// in index order and returns the unshrunk survivors.
IrreducibleSubcover shrink_to_irreducible(const Cover& cover, double n);

}  // namespace coarsekit

#endif  // COARSEKIT_CONSTRUCTIONS_HPP_
