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
#ifndef COARSEKIT_DISTORTION_HPP_
#define COARSEKIT_DISTORTION_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "coarsekit/group.hpp"
#include "coarsekit/word_metric.hpp"

namespace coarsekit {

struct DistortionPair {
  Element element;
  int inner = 0;    // norm for the subgroup generators
  int ambient = 0;  // norm in the ambient group
};

// Every subgroup element of the ambient ball B_r(e) with its two norms,
// sorted by ambient norm, then inner norm, then element.
std::vector<DistortionPair> distortion_profile(
    GroupPtr ambient, const std::function<bool(const Element&)>& member,
    std::vector<Element> subgroup_generators, int r,
    std::size_t cap = default_ball_cap());

// Least-squares slope of log y against log x over the pairs with x, y > 0.
double fit_loglog_slope(std::span<const std::pair<double, double>> xy);

}  // namespace coarsekit

#endif  // COARSEKIT_DISTORTION_HPP_
