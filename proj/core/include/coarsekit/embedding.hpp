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
#ifndef COARSEKIT_EMBEDDING_HPP_
#define COARSEKIT_EMBEDDING_HPP_

#include <cstddef>
#include <vector>

#include "coarsekit/property_a.hpp"
#include "coarsekit/sparse_vector.hpp"

namespace coarsekit {

// Min and max of ||f(z) - f(w)||_p over audited pairs at one distance,
// next to the two control functions at that distance.
struct EmbeddingBucket {
  double distance = 0;
  std::size_t pairs = 0;
  double min_norm = kInfinity;
  double max_norm = 0;
  double rho1 = 0;
  double rho2 = 0;
};

struct EmbeddingResult {
  std::vector<double> selected_levels;   // n_k for slots k = 1..S
  std::vector<double> slot_variation;    // measured sup var^p for each slot
  std::vector<SparseVector> images;      // f(z); index x * S + (k - 1)
  PointId base_point = 0;
  double safe_margin = 0;                // R of the last selected level
  std::size_t pairs_audited = 0;
  std::vector<EmbeddingBucket> buckets;  // by distance
  bool pass = false;
};

// f(z)(x, k) = a^{n_k}_z(x) - a^{n_k}_{z0}(x). Slot k takes the first level
// past the previous slot with sup (||a_z - a_w||_p)^p < 2^-k over pairs with
// d(z, w) < k and margin >= R(n). Every pair of points with margin >=
// R(n_S) is then audited against
//   rho1(d) = (max(0, 2 S(d/2) - 2))^{1/p},  rho2(d) = (2d + 1)^{1/p},
// with S(t) = #{k : R(n_k) < t}. Throws kSubsequenceUnavailable naming the
// slot that could not be filled and kAuditFailed with a witness pair.
// p = inf is rejected.
EmbeddingResult coarse_embedding(const PropertyAFamily& family, PointId base,
                                 std::size_t slots);

}  // namespace coarsekit

#endif  // COARSEKIT_EMBEDDING_HPP_
