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
#ifndef COARSEKIT_COVER_HPP_
#define COARSEKIT_COVER_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "coarsekit/metric_space.hpp"

namespace coarsekit {

using SpacePtr = std::shared_ptr<const FiniteMetricSpace>;

// Indexed family of nonempty point sets whose union is the whole space.
// Sets are stored back to back; each one is sorted.
class Cover {
 public:
  // Throws Error(kNotCovering) on an empty member or an uncovered point.
  Cover(SpacePtr space, std::vector<PointSet> sets);

  const FiniteMetricSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }

  std::size_t size() const { return offsets_.size() - 1; }
  std::span<const PointId> set(std::size_t i) const {
    return {flat_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::vector<PointSet> sets() const;
  std::size_t total_size() const { return flat_.size(); }

  // Indices of the sets containing x, ascending. Built on first use.
  std::span<const std::uint32_t> containing(PointId x) const;

  // Optional per-point guess of a set U with d(x, X \ U) large. Lebesgue
  // audits try it before scanning every set through x.
  void set_witness_hints(std::vector<std::uint32_t> hints);
  const std::vector<std::uint32_t>& witness_hints() const { return hints_; }

 private:
  void build_membership() const;

  SpacePtr space_;
  std::vector<PointId> flat_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> hints_;
  // Copies share the lazily built point -> sets index.
  struct Membership {
    std::once_flag once;
    std::vector<std::size_t> offsets;
    std::vector<std::uint32_t> sets;
  };
  std::shared_ptr<Membership> membership_ = std::make_shared<Membership>();
};

// Points whose boundary margin is at least safe_margin.
std::vector<PointId> safe_points(const FiniteMetricSpace& space,
                                 double safe_margin);

// max_x #{U : x in U}, over points with margin >= safe_margin.
std::size_t multiplicity(const Cover& cover, double safe_margin = 0);

// max over U containing x of d(x, X \ U).
double local_lebesgue(const Cover& cover, PointId x);

// min over safe points of max_U d(x, X \ U); +inf when a set is the
// whole space.
double pointwise_lebesgue(const Cover& cover, double safe_margin = 0);

// True iff every safe point x has some U with d(x, X \ U) >= lambda. On
// failure the offending point label goes to *witness.
bool lebesgue_at_least(const Cover& cover, double lambda,
                       double safe_margin = 0, std::string* witness = nullptr);

// Exact Lebesgue test: every subset of diameter <= lambda lies in one set.
// Exhaustive over subsets up to 20 points, over maximal cliques of the
// "d <= lambda" graph above that. Throws Error(kTooLarge) past the caps.
bool exact_lebesgue_at_least(const Cover& cover, double lambda,
                             std::vector<PointId>* witness = nullptr);

// Maximal subsets of diameter <= lambda, each sorted (Bron-Kerbosch with
// pivoting). visit returns false to stop. Throws Error(kTooLarge) past
// max_cliques.
void for_each_maximal_clique(
    const FiniteMetricSpace& space, double lambda,
    const std::function<bool(const PointSet&)>& visit,
    std::size_t max_cliques = 1'000'000);

// Largest member diameter.
double cover_diameter(const Cover& cover);

struct CoverStats {
  std::size_t multiplicity = 0;
  double lebesgue_pointwise = 0;
  double diameter = 0;
  double boundary_margin = kInfinity;
  std::size_t audited_points = 0;
  std::size_t sets = 0;
};

// All statistics over the safe points (margin >= safe_margin). The
// diameter is taken over every member.
CoverStats cover_stats(const Cover& cover, double safe_margin = 0);

}  // namespace coarsekit

#endif  // COARSEKIT_COVER_HPP_
