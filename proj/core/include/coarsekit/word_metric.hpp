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
#ifndef COARSEKIT_WORD_METRIC_HPP_
#define COARSEKIT_WORD_METRIC_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "coarsekit/group.hpp"
#include "coarsekit/metric_space.hpp"

namespace coarsekit {

inline constexpr std::size_t kDefaultBallCap = 5'000'000;

// kDefaultBallCap unless COARSEKIT_BALL_CAP is set to a positive integer.
std::size_t default_ball_cap();

// Breadth-first ball B_r(e) of the Cayley graph. Elements are stored in
// BFS order, so norms are nondecreasing along the table; every element
// other than the unit remembers the parent it was reached from and the
// generator used (element = parent * generator).
class NormTable {
 public:
  explicit NormTable(GroupPtr group);

  // Grows the table to the given radius. Throws Error(kBallTooLarge) when
  // the next layer would push the table over cap; the table then stays at
  // the last complete radius.
  void extend_to(int radius, std::size_t cap);

  const GroupSpec& group() const { return *group_; }
  int radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }
  const Element& element(std::size_t i) const { return elements_[i]; }
  int norm_at(std::size_t i) const { return norms_[i]; }
  std::uint32_t parent(std::size_t i) const { return parents_[i]; }
  std::uint8_t generator(std::size_t i) const { return via_[i]; }

  // Number of elements of norm <= r (r capped at radius()).
  std::size_t layer_end(int r) const;

  std::optional<std::size_t> index_of(const Element& e) const;
  std::optional<int> norm(const Element& e) const;

  // One "element,norm" row per element, in table order.
  void write_csv(std::ostream& out) const;

 private:
  GroupPtr group_;
  int radius_ = 0;
  std::vector<Element> elements_;
  std::vector<int> norms_;
  std::vector<std::uint32_t> parents_;
  std::vector<std::uint8_t> via_;
  std::vector<std::size_t> layer_ends_;
  std::unordered_map<Element, std::uint32_t, ElementHash> index_;
};

// Complete table of B_r(e).
NormTable word_norm_table(GroupPtr group, int r,
                          std::size_t cap = default_ball_cap());

// Word norm oracle: the closed form when the group has one, otherwise a
// norm table grown on demand. Safe to call from several threads.
class WordNorm {
 public:
  explicit WordNorm(GroupPtr group, std::size_t cap = default_ball_cap());

  const GroupSpec& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  std::size_t cap() const { return cap_; }

  int operator()(const Element& e) const;

  // Makes norms up to the given radius available without further growth.
  void reserve(int radius) const;

  // The shared BFS table, grown to at least the given radius.
  const NormTable& table(int radius) const;

  // Largest radius the table may reach while staying under max_size
  // elements; grows it that far.
  int grow_within(int radius, std::size_t max_size) const;

 private:
  GroupPtr group_;
  std::size_t cap_;
  mutable std::mutex mutex_;
  mutable NormTable table_;
  mutable std::size_t failed_limit_ = 0;
};

// A finite set of group elements with the ambient word metric
// d(x, y) = ||x^-1 y||, not the path metric of the induced subgraph.
// The boundary margin of x is enclosing_radius - ||x||.
class WordMetricWindow final : public FiniteMetricSpace {
 public:
  // The ball B_r(e), in BFS order.
  static std::shared_ptr<const WordMetricWindow> ball(
      std::shared_ptr<const WordNorm> norm, int r);

  // An arbitrary finite set of elements contained in B_enclosing(e).
  static std::shared_ptr<const WordMetricWindow> from_elements(
      std::shared_ptr<const WordNorm> norm, std::vector<Element> elements,
      int enclosing_radius);

  std::size_t size() const override { return elements_.size(); }
  double distance(PointId a, PointId b) const override;
  std::string label(PointId p) const override;
  double boundary_margin(PointId p) const override;
  void visit_ball(PointId center, double radius,
                  const BallVisitor& visit) const override;

  const GroupSpec& group() const { return norm_->group(); }
  const WordNorm& norm() const { return *norm_; }
  const std::shared_ptr<const WordNorm>& norm_ptr() const { return norm_; }
  const Element& element(PointId p) const { return elements_[p]; }
  const std::vector<Element>& elements() const { return elements_; }
  int element_norm(PointId p) const { return norms_[p]; }
  int enclosing_radius() const { return enclosing_radius_; }
  std::optional<PointId> find(const Element& e) const;

 private:
  WordMetricWindow(std::shared_ptr<const WordNorm> norm,
                   std::vector<Element> elements, int enclosing_radius);

  static constexpr std::int32_t kOutside = -1;

  // id of element(p) * generator(s), or kOutside.
  std::int32_t step(PointId p, std::size_t s) const;
  void build_adjacency() const;
  bool visit_convex(PointId center, int radius, const BallVisitor& visit) const;

  std::shared_ptr<const WordNorm> norm_;
  std::vector<Element> elements_;
  std::vector<int> norms_;
  int enclosing_radius_;
  bool convex_ = false;  // a whole ball of a group with convex balls
  std::unordered_map<Element, PointId, ElementHash> index_;
  mutable std::once_flag adjacency_once_;
  mutable std::vector<std::int32_t> adjacency_;
};

// Metric space on B_r(e) with exact restricted distances. Groups without
// a closed-form norm get their 2r table built up front.
std::shared_ptr<const WordMetricWindow> ball_space(
    GroupPtr group, int r, std::size_t cap = default_ball_cap());

}  // namespace coarsekit

#endif  // COARSEKIT_WORD_METRIC_HPP_
