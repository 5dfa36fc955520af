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
#include "coarsekit/metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include "coarsekit/error.hpp"

namespace coarsekit {

void FiniteMetricSpace::visit_ball(PointId center, double radius,
                                   const BallVisitor& visit) const {
  std::vector<std::pair<double, PointId>> hits;
  const auto n = static_cast<PointId>(size());
  for (PointId y = 0; y < n; ++y) {
    const double d = distance(center, y);
    if (d <= radius + kTolerance) hits.emplace_back(d, y);
  }
  std::sort(hits.begin(), hits.end());
  for (const auto& [d, y] : hits) {
    if (!visit(y, d)) return;
  }
}

DenseMetricSpace::DenseMetricSpace(std::vector<std::string> labels,
                                   std::vector<double> matrix,
                                   std::vector<double> margins)
    : labels_(std::move(labels)),
      matrix_(std::move(matrix)),
      margins_(std::move(margins)) {
  const std::size_t n = labels_.size();
  if (matrix_.size() != n * n) {
    throw Error(ErrorCode::kInvalidArgument,
                "distance matrix must be " + std::to_string(n) + "x" +
                    std::to_string(n));
  }
  if (!margins_.empty() && margins_.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "margin list has wrong length");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = matrix_[i * n + j];
      if (!std::isfinite(d) || d < 0) {
        throw Error(ErrorCode::kInvalidArgument, "distance not finite/nonnegative",
                    labels_[i] + "," + labels_[j]);
      }
      if (d != std::floor(d)) integral_ = false;
      if (i == j && d != 0) {
        throw Error(ErrorCode::kInvalidArgument, "nonzero diagonal", labels_[i]);
      }
      if (i != j && d == 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "distinct points at distance zero",
                    labels_[i] + "," + labels_[j]);
      }
      if (std::abs(d - matrix_[j * n + i]) > kTolerance) {
        throw Error(ErrorCode::kInvalidArgument, "asymmetric distance",
                    labels_[i] + "," + labels_[j]);
      }
    }
  }
  if (auto witness = find_triangle_violation(*this); !witness.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "triangle inequality violated",
                witness);
  }
}

std::shared_ptr<const DenseMetricSpace> DenseMetricSpace::integer_segment(
    int lo, int hi) {
  if (hi < lo) {
    throw Error(ErrorCode::kInvalidArgument, "empty integer segment");
  }
  const auto n = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int v = lo; v <= hi; ++v) labels.push_back(std::to_string(v));
  std::vector<double> matrix(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      matrix[i * n + j] = std::abs(static_cast<double>(i) - static_cast<double>(j));
    }
  }
  return std::make_shared<const DenseMetricSpace>(std::move(labels),
                                                  std::move(matrix));
}

std::shared_ptr<const DenseMetricSpace> DenseMetricSpace::restrict(
    const FiniteMetricSpace& space, std::span<const PointId> points) {
  const std::size_t n = points.size();
  std::vector<std::string> labels;
  std::vector<double> margins;
  labels.reserve(n);
  margins.reserve(n);
  std::vector<double> matrix(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(space.label(points[i]));
    margins.push_back(space.boundary_margin(points[i]));
    for (std::size_t j = 0; j < n; ++j) {
      matrix[i * n + j] = space.distance(points[i], points[j]);
    }
  }
  return std::make_shared<const DenseMetricSpace>(
      std::move(labels), std::move(matrix), std::move(margins));
}

double DenseMetricSpace::boundary_margin(PointId p) const {
  return margins_.empty() ? kInfinity : margins_[p];
}

std::string find_triangle_violation(const FiniteMetricSpace& space,
                                    std::size_t random_triples_above) {
  const std::size_t n = space.size();
  auto violated = [&](PointId x, PointId y, PointId z) {
    return space.distance(x, z) >
           space.distance(x, y) + space.distance(y, z) + kTolerance;
  };
  auto witness = [&](PointId x, PointId y, PointId z) {
    return space.label(x) + "," + space.label(y) + "," + space.label(z);
  };
  if (n <= random_triples_above) {
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = 0; y < n; ++y) {
        for (PointId z = 0; z < n; ++z) {
          if (violated(x, y, z)) return witness(x, y, z);
        }
      }
    }
    return {};
  }
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_int_distribution<PointId> pick(0, static_cast<PointId>(n - 1));
  for (int t = 0; t < 100000; ++t) {
    const PointId x = pick(rng), y = pick(rng), z = pick(rng);
    if (violated(x, y, z)) return witness(x, y, z);
  }
  return {};
}

std::vector<char> make_mask(std::size_t n, std::span<const PointId> points) {
  std::vector<char> mask(n, 0);
  for (PointId p : points) mask[p] = 1;
  return mask;
}

double set_distance(const FiniteMetricSpace& space, std::span<const PointId> a,
                    std::span<const PointId> b) {
  if (a.empty() || b.empty()) return kInfinity;
  double best = kInfinity;
  for (PointId x : a) {
    for (PointId y : b) best = std::min(best, space.distance(x, y));
  }
  return best;
}

PointSet neighborhood(const FiniteMetricSpace& space,
                      std::span<const PointId> a, double r) {
  std::vector<char> hit(space.size(), 0);
  for (PointId x : a) {
    space.visit_ball(x, r, [&](PointId y, double) {
      hit[y] = 1;
      return true;
    });
  }
  PointSet out;
  for (PointId y = 0; y < hit.size(); ++y) {
    if (hit[y]) out.push_back(y);
  }
  return out;
}

PointSet inner_neighborhood(const FiniteMetricSpace& space,
                            std::span<const PointId> a, double r) {
  const auto member = make_mask(space.size(), a);
  PointSet out;
  for (PointId x : a) {
    bool interior = true;
    space.visit_ball(x, r, [&](PointId y, double) {
      if (member[y]) return true;
      interior = false;
      return false;
    });
    if (interior) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

double distance_to_complement(const FiniteMetricSpace& space, PointId x,
                              const std::vector<char>& member) {
  double found = kInfinity;
  space.visit_ball(x, kInfinity, [&](PointId y, double d) {
    if (member[y]) return true;
    found = d;
    return false;
  });
  return found;
}

double distance_to_complement(const FiniteMetricSpace& space, PointId x,
                              std::span<const PointId> sorted_set) {
  double found = kInfinity;
  space.visit_ball(x, kInfinity, [&](PointId y, double d) {
    if (std::binary_search(sorted_set.begin(), sorted_set.end(), y)) {
      return true;
    }
    found = d;
    return false;
  });
  return found;
}

bool complement_at_least(const FiniteMetricSpace& space, PointId x,
                         const std::vector<char>& member, double threshold) {
  bool ok = true;
  space.visit_ball(x, threshold, [&](PointId y, double d) {
    if (d >= threshold - kTolerance) return false;
    if (member[y]) return true;
    ok = false;
    return false;
  });
  return ok;
}

bool complement_at_least(const FiniteMetricSpace& space, PointId x,
                         std::span<const PointId> sorted_set,
                         double threshold) {
  bool ok = true;
  space.visit_ball(x, threshold, [&](PointId y, double d) {
    if (d >= threshold - kTolerance) return false;
    if (std::binary_search(sorted_set.begin(), sorted_set.end(), y)) {
      return true;
    }
    ok = false;
    return false;
  });
  return ok;
}

double set_diameter(const FiniteMetricSpace& space,
                    std::span<const PointId> a) {
  double best = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      best = std::max(best, space.distance(a[i], a[j]));
    }
  }
  return best;
}

}  // namespace coarsekit
