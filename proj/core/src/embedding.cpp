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
#include "coarsekit/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "coarsekit/error.hpp"

namespace coarsekit {

EmbeddingResult coarse_embedding(const PropertyAFamily& f, PointId base,
                                 std::size_t slots) {
  const double p = f.p;
  if (std::isinf(p)) {
    throw Error(ErrorCode::kInvalidArgument, "embedding needs a finite p");
  }
  const auto& space = *f.space;
  if (base >= space.size() || slots == 0) {
    throw Error(ErrorCode::kInvalidArgument, "bad base point or slot count");
  }
  EmbeddingResult res;
  res.base_point = base;

  std::vector<std::size_t> chosen;
  std::size_t next = 0;
  for (std::size_t k = 1; k <= slots; ++k) {
    const double threshold = std::ldexp(1.0, -static_cast<int>(k));
    bool found = false;
    for (; next < f.levels.size(); ++next) {
      const double margin = f.support_radius[next];
      const auto& row = f.functions[next];
      double sup = 0;
      for (PointId z = 0; z < space.size() && sup < threshold; ++z) {
        if (space.boundary_margin(z) < margin) continue;
        space.visit_ball(z, static_cast<double>(k) - 0.5, [&](PointId w, double d) {
          if (d >= static_cast<double>(k) - kTolerance) return false;
          if (w <= z || space.boundary_margin(w) < margin) return true;
          sup = std::max(sup, lp_distance_pow(row[z], row[w], p));
          return sup < threshold;
        });
      }
      if (sup < threshold) {
        chosen.push_back(next);
        res.slot_variation.push_back(sup);
        ++next;
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorCode::kSubsequenceUnavailable,
                  "no level meets the slot threshold",
                  "slot=" + std::to_string(k) + " threshold=2^-" +
                      std::to_string(k));
    }
  }
  const std::size_t S = chosen.size();
  std::vector<double> radius(S);
  for (std::size_t k = 0; k < S; ++k) {
    res.selected_levels.push_back(f.levels[chosen[k]]);
    radius[k] = f.support_radius[chosen[k]];
    if (k) radius[k] = std::max(radius[k], radius[k - 1]);
  }
  res.safe_margin = radius.back();

  res.images.resize(space.size());
  for (PointId z = 0; z < space.size(); ++z) {
    std::vector<SparseVector::Entry> e;
    for (std::size_t k = 0; k < S; ++k) {
      const auto& row = f.functions[chosen[k]];
      const SparseVector diff = row[z].minus(row[base]);
      for (const auto& [x, v] : diff.entries()) {
        e.emplace_back(x * S + k, v);
      }
    }
    std::sort(e.begin(), e.end());
    res.images[z] = SparseVector(std::move(e));
  }

  auto count_below = [&](double t) {
    return static_cast<double>(
        std::count_if(radius.begin(), radius.end(), [&](double r) {
          return r < t - kTolerance;
        }));
  };
  std::map<double, EmbeddingBucket> buckets;
  res.pass = true;
  std::vector<PointId> safe;
  for (PointId z = 0; z < space.size(); ++z) {
    if (space.boundary_margin(z) >= res.safe_margin) safe.push_back(z);
  }
  for (std::size_t i = 0; i < safe.size(); ++i) {
    for (std::size_t j = i + 1; j < safe.size(); ++j) {
      const PointId z = safe[i], w = safe[j];
      const double d = space.distance(z, w);
      const double norm = lp_distance(res.images[z], res.images[w], p);
      const double rho1 =
          std::pow(std::max(0.0, 2 * count_below(d / 2) - 2), 1 / p);
      const double rho2 = std::pow(2 * d + 1, 1 / p);
      auto& b = buckets[d];
      b.distance = d;
      ++b.pairs;
      b.min_norm = std::min(b.min_norm, norm);
      b.max_norm = std::max(b.max_norm, norm);
      b.rho1 = rho1;
      b.rho2 = rho2;
      ++res.pairs_audited;
      if (norm < rho1 - 1e-9 || norm > rho2 + 1e-9) {
        throw Error(ErrorCode::kAuditFailed,
                    norm < rho1 ? "rho1(d) <= |f(z)-f(w)| fails"
                                : "|f(z)-f(w)| <= rho2(d) fails",
                    space.label(z) + "," + space.label(w) +
                        " d=" + std::to_string(d) +
                        " norm=" + std::to_string(norm) +
                        " rho1=" + std::to_string(rho1) +
                        " rho2=" + std::to_string(rho2));
      }
    }
  }
  for (auto& [d, b] : buckets) res.buckets.push_back(b);
  return res;
}

}  // namespace coarsekit
