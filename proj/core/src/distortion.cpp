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
#include "coarsekit/distortion.hpp"

#include <algorithm>
#include <cmath>

#include "coarsekit/error.hpp"

namespace coarsekit {

std::vector<DistortionPair> distortion_profile(
    GroupPtr ambient, const std::function<bool(const Element&)>& member,
    std::vector<Element> subgroup_generators, int r, std::size_t cap) {
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "negative radius");
  for (const auto& g : subgroup_generators) {
    if (!member(g)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "subgroup generator fails the membership test",
                  ambient->format(g));
    }
  }
  const NormTable table = word_norm_table(ambient, r, cap);
  WordNorm inner(std::make_shared<const GeneratedSubgroup>(
                     ambient, std::move(subgroup_generators)),
                 cap);
  std::vector<DistortionPair> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Element& e = table.element(i);
    if (!member(e)) continue;
    out.push_back({e, inner(e), table.norm_at(i)});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.ambient != b.ambient) return a.ambient < b.ambient;
    if (a.inner != b.inner) return a.inner < b.inner;
    return a.element < b.element;
  });
  return out;
}

double fit_loglog_slope(std::span<const std::pair<double, double>> xy) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (const auto& [x, y] : xy) {
    if (!(x > 0) || !(y > 0)) continue;
    const double lx = std::log(x);
    const double ly = std::log(y);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  const double denom = static_cast<double>(n) * sxx - sx * sx;
  if (n < 2 || std::abs(denom) < 1e-12) {
    throw Error(ErrorCode::kInvalidArgument,
                "slope fit needs two distinct positive abscissae");
  }
  return (static_cast<double>(n) * sxy - sx * sy) / denom;
}

}  // namespace coarsekit
