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
#ifndef COARSEKIT_METRIC_SPACE_HPP_
#define COARSEKIT_METRIC_SPACE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace coarsekit {

using PointId = std::uint32_t;

// Sorted, duplicate-free list of point ids.
using PointSet = std::vector<PointId>;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Absolute tolerance for comparisons of real-valued distances and norms.
inline constexpr double kTolerance = 1e-9;

// Receives (point, distance); returning false stops the enumeration.
using BallVisitor = std::function<bool(PointId, double)>;

// A finite metric space with points 0..size()-1.
//
// Balls are closed: B_r(x) = {y : d(x,y) <= r}. Implementations are
// immutable after construction and safe to share between threads.
class FiniteMetricSpace {
 public:
  virtual ~FiniteMetricSpace() = default;

  virtual std::size_t size() const = 0;
  virtual double distance(PointId a, PointId b) const = 0;
  virtual std::string label(PointId p) const = 0;

  // Distance from p to the edge of the window this space was cut from.
  // Spaces that are not windows of something larger report +inf.
  virtual double boundary_margin(PointId /*p*/) const { return kInfinity; }

  // True when every distance is a nonnegative integer.
  virtual bool integral() const { return true; }

  // Visits every y with d(center, y) <= radius in nondecreasing order of
  // distance. The default scans the distance row.
  virtual void visit_ball(PointId center, double radius,
                          const BallVisitor& visit) const;
};

// Dense distance matrix, the universal interchange form.
class DenseMetricSpace final : public FiniteMetricSpace {
 public:
  // Validates symmetry, zero diagonal, positivity off the diagonal and the
  // triangle inequality (all triples up to 500 points, 1e5 seeded random
  // triples above). Throws Error(kInvalidArgument) with a witness.
  DenseMetricSpace(std::vector<std::string> labels, std::vector<double> matrix,
                   std::vector<double> margins = {});

  // The segment {lo, ..., hi} of the integers.
  static std::shared_ptr<const DenseMetricSpace> integer_segment(int lo,
                                                                 int hi);

  // Restricted metric on a subset of another space.
  static std::shared_ptr<const DenseMetricSpace> restrict(
      const FiniteMetricSpace& space, std::span<const PointId> points);

  std::size_t size() const override { return labels_.size(); }
  double distance(PointId a, PointId b) const override {
    return matrix_[static_cast<std::size_t>(a) * labels_.size() + b];
  }
  std::string label(PointId p) const override { return labels_[p]; }
  double boundary_margin(PointId p) const override;
  bool integral() const override { return integral_; }

  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::vector<double> matrix_;
  std::vector<double> margins_;
  bool integral_ = true;
};

// Triangle-inequality audit. Returns the first violating triple, if any,
// formatted as "x,y,z"; an empty string means the audit passed.
std::string find_triangle_violation(const FiniteMetricSpace& space,
                                    std::size_t random_triples_above = 500);

// ---- set-level operations -------------------------------------------------

// Membership mask over the points of a space.
std::vector<char> make_mask(std::size_t n, std::span<const PointId> points);

// min d(a, b) over a in A, b in B; +inf if either set is empty.
double set_distance(const FiniteMetricSpace& space, std::span<const PointId> a,
                    std::span<const PointId> b);

// N_r(A) = {x : d(x, A) <= r}.
PointSet neighborhood(const FiniteMetricSpace& space,
                      std::span<const PointId> a, double r);

// A minus N_r(X \ A); may be empty.
PointSet inner_neighborhood(const FiniteMetricSpace& space,
                            std::span<const PointId> a, double r);

// d(x, X \ U) where U is given as a membership mask; +inf when U = X.
double distance_to_complement(const FiniteMetricSpace& space, PointId x,
                              const std::vector<char>& member);

// Same, with U given as a sorted point set.
double distance_to_complement(const FiniteMetricSpace& space, PointId x,
                              std::span<const PointId> sorted_set);

// True iff d(x, X \ U) >= threshold. Stops as soon as a nonmember closer
// than threshold is seen.
bool complement_at_least(const FiniteMetricSpace& space, PointId x,
                         const std::vector<char>& member, double threshold);

// Same, with U given as a sorted point set.
bool complement_at_least(const FiniteMetricSpace& space, PointId x,
                         std::span<const PointId> sorted_set,
                         double threshold);

double set_diameter(const FiniteMetricSpace& space, std::span<const PointId> a);

}  // namespace coarsekit

#endif  // COARSEKIT_METRIC_SPACE_HPP_
