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
#include "coarsekit/word_metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "coarsekit/error.hpp"

namespace coarsekit {

std::size_t default_ball_cap() {
  if (const char* env = std::getenv("COARSEKIT_BALL_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultBallCap;
}

NormTable::NormTable(GroupPtr group) : group_(std::move(group)) {
  elements_.push_back(group_->unit());
  norms_.push_back(0);
  parents_.push_back(0);
  via_.push_back(0);
  layer_ends_.push_back(1);
  index_.emplace(elements_.front(), 0);
}

void NormTable::extend_to(int radius, std::size_t cap) {
  const auto& gens = group_->generators();
  while (radius_ < radius) {
    const std::size_t begin = radius_ == 0 ? 0 : layer_ends_[radius_ - 1];
    const std::size_t end = layer_ends_[radius_];
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t s = 0; s < gens.size(); ++s) {
        Element y = group_->multiply(elements_[i], gens[s]);
        if (index_.contains(y)) continue;
        if (elements_.size() >= cap) {
          for (std::size_t j = end; j < elements_.size(); ++j) {
            index_.erase(elements_[j]);
          }
          elements_.resize(end);
          norms_.resize(end);
          parents_.resize(end);
          via_.resize(end);
          throw Error(ErrorCode::kBallTooLarge,
                      "ball of " + group_->token() + " exceeds " +
                          std::to_string(cap) + " elements",
                      "radius_reached=" + std::to_string(radius_));
        }
        index_.emplace(y, static_cast<std::uint32_t>(elements_.size()));
        elements_.push_back(std::move(y));
        norms_.push_back(radius_ + 1);
        parents_.push_back(static_cast<std::uint32_t>(i));
        via_.push_back(static_cast<std::uint8_t>(s));
      }
    }
    ++radius_;
    layer_ends_.push_back(elements_.size());
  }
}

std::size_t NormTable::layer_end(int r) const {
  if (r < 0) return 0;
  if (r >= radius_) return elements_.size();
  return layer_ends_[r];
}

std::optional<std::size_t> NormTable::index_of(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> NormTable::norm(const Element& e) const {
  auto i = index_of(e);
  if (!i) return std::nullopt;
  return norms_[*i];
}

void NormTable::write_csv(std::ostream& out) const {
  out << "element,norm\n";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    out << '"' << group_->format(elements_[i]) << "\"," << norms_[i] << '\n';
  }
}

NormTable word_norm_table(GroupPtr group, int r, std::size_t cap) {
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "negative radius");
  NormTable table(std::move(group));
  table.extend_to(r, cap);
  return table;
}

WordNorm::WordNorm(GroupPtr group, std::size_t cap)
    : group_(std::move(group)), cap_(cap), table_(group_) {}

int WordNorm::operator()(const Element& e) const {
  if (auto n = group_->closed_form_norm(e)) return *n;
  std::lock_guard lock(mutex_);
  while (true) {
    if (auto n = table_.norm(e)) return *n;
    table_.extend_to(table_.radius() + 1, cap_);
  }
}

void WordNorm::reserve(int radius) const {
  if (group_->closed_form_norm(group_->unit())) return;
  std::lock_guard lock(mutex_);
  table_.extend_to(radius, cap_);
}

const NormTable& WordNorm::table(int radius) const {
  std::lock_guard lock(mutex_);
  table_.extend_to(radius, cap_);
  return table_;
}

int WordNorm::grow_within(int radius, std::size_t max_size) const {
  std::lock_guard lock(mutex_);
  const std::size_t limit = std::min(max_size, cap_);
  while (table_.radius() < radius && limit > failed_limit_) {
    try {
      table_.extend_to(table_.radius() + 1, limit);
    } catch (const Error&) {
      failed_limit_ = limit;
    }
  }
  return table_.radius();
}

WordMetricWindow::WordMetricWindow(std::shared_ptr<const WordNorm> norm,
                                   std::vector<Element> elements,
                                   int enclosing_radius)
    : norm_(std::move(norm)),
      elements_(std::move(elements)),
      enclosing_radius_(enclosing_radius) {
  norms_.reserve(elements_.size());
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const int n = (*norm_)(elements_[i]);
    if (n > enclosing_radius_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "window element outside the enclosing ball",
                  group().format(elements_[i]));
    }
    norms_.push_back(n);
    if (!index_.emplace(elements_[i], static_cast<PointId>(i)).second) {
      throw Error(ErrorCode::kInvalidArgument, "repeated window element",
                  group().format(elements_[i]));
    }
  }
}

std::shared_ptr<const WordMetricWindow> WordMetricWindow::ball(
    std::shared_ptr<const WordNorm> norm, int r) {
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "negative radius");
  const NormTable& table = norm->table(r);
  std::vector<Element> elements(table.layer_end(r));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    elements[i] = table.element(i);
  }
  auto window = std::shared_ptr<WordMetricWindow>(
      new WordMetricWindow(std::move(norm), std::move(elements), r));
  window->convex_ = window->group().convex_balls();
  return window;
}

std::shared_ptr<const WordMetricWindow> WordMetricWindow::from_elements(
    std::shared_ptr<const WordNorm> norm, std::vector<Element> elements,
    int enclosing_radius) {
  return std::shared_ptr<const WordMetricWindow>(new WordMetricWindow(
      std::move(norm), std::move(elements), enclosing_radius));
}

double WordMetricWindow::distance(PointId a, PointId b) const {
  if (a == b) return 0;
  const auto& g = group();
  if (auto d = g.closed_form_distance(elements_[a], elements_[b])) return *d;
  return (*norm_)(g.multiply(g.inverse(elements_[a]), elements_[b]));
}

std::string WordMetricWindow::label(PointId p) const {
  return group().format(elements_[p]);
}

double WordMetricWindow::boundary_margin(PointId p) const {
  return enclosing_radius_ - norms_[p];
}

std::optional<PointId> WordMetricWindow::find(const Element& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void WordMetricWindow::build_adjacency() const {
  const auto& gens = group().generators();
  adjacency_.assign(elements_.size() * gens.size(), kOutside);
  for (std::size_t p = 0; p < elements_.size(); ++p) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      if (auto q = find(group().multiply(elements_[p], gens[s]))) {
        adjacency_[p * gens.size() + s] = static_cast<std::int32_t>(*q);
      }
    }
  }
}

std::int32_t WordMetricWindow::step(PointId p, std::size_t s) const {
  return adjacency_[p * group().generators().size() + s];
}

// Breadth-first search inside the window. Each nesting level of
// visit_ball calls on a thread gets its own stamp array.
bool WordMetricWindow::visit_convex(PointId center, int radius,
                                    const BallVisitor& visit) const {
  struct Stamps {
    std::vector<std::uint32_t> mark;
    std::uint32_t epoch = 0;
  };
  thread_local std::vector<std::unique_ptr<Stamps>> levels;
  thread_local std::size_t depth = 0;
  if (levels.size() <= depth) levels.push_back(std::make_unique<Stamps>());
  Stamps& st = *levels[depth];
  struct Guard {
    std::size_t& d;
    ~Guard() { --d; }
  } guard{++depth};
  if (st.mark.size() != elements_.size()) {
    st.mark.assign(elements_.size(), 0);
    st.epoch = 0;
  }
  if (++st.epoch == 0) {
    std::fill(st.mark.begin(), st.mark.end(), 0);
    st.epoch = 1;
  }
  const std::size_t degree = group().generators().size();
  std::vector<PointId> frontier{center};
  std::vector<PointId> next;
  st.mark[center] = st.epoch;
  if (!visit(center, 0)) return false;
  for (int k = 1; k <= radius && !frontier.empty(); ++k) {
    next.clear();
    for (PointId u : frontier) {
      for (std::size_t s = 0; s < degree; ++s) {
        const std::int32_t v = step(u, s);
        if (v == kOutside || st.mark[v] == st.epoch) continue;
        st.mark[v] = st.epoch;
        next.push_back(static_cast<PointId>(v));
        if (!visit(static_cast<PointId>(v), k)) return false;
      }
    }
    frontier.swap(next);
  }
  return true;
}

// Walks the BFS table of B_r(e) and maps g to center * g, reusing the
// image of g's parent through the adjacency list. Products whose parent
// left the window are formed explicitly. When the table would grow far
// beyond the window, the remaining layers come from a row scan.
void WordMetricWindow::visit_ball(PointId center, double radius,
                                  const BallVisitor& visit) const {
  if (radius < 0) return;
  const double diameter_bound = 2.0 * enclosing_radius_;
  const int r = static_cast<int>(
      std::floor(std::min(radius, diameter_bound) + kTolerance));
  std::call_once(adjacency_once_, [this] { build_adjacency(); });
  if (convex_) {
    visit_convex(center, r, visit);
    return;
  }
  const std::size_t limit =
      std::max<std::size_t>(4096, 4 * elements_.size());

  std::vector<std::int32_t> image;
  const NormTable* table = nullptr;
  int k = 0;
  for (; k <= r; ++k) {
    if (norm_->grow_within(k, limit) < k) break;
    if (!table) table = &norm_->table(0);
    const std::size_t begin = table->layer_end(k - 1);
    const std::size_t end = table->layer_end(k);
    if (k > 0 && end > 2 * elements_.size()) break;
    image.resize(end, kOutside);
    for (std::size_t i = begin; i < end; ++i) {
      std::int32_t id = kOutside;
      if (i == 0) {
        id = static_cast<std::int32_t>(center);
      } else if (const std::int32_t up = image[table->parent(i)];
                 up != kOutside) {
        id = step(static_cast<PointId>(up), table->generator(i));
      } else if (auto q = find(
                     group().multiply(elements_[center], table->element(i)))) {
        id = static_cast<std::int32_t>(*q);
      }
      image[i] = id;
      if (id != kOutside && !visit(static_cast<PointId>(id), k)) return;
    }
  }
  if (k > r) return;

  std::vector<std::pair<double, PointId>> rest;
  for (PointId y = 0; y < elements_.size(); ++y) {
    const double d = distance(center, y);
    if (d >= k && d <= radius + kTolerance) rest.emplace_back(d, y);
  }
  std::sort(rest.begin(), rest.end());
  for (const auto& [d, y] : rest) {
    if (!visit(y, d)) return;
  }
}

std::shared_ptr<const WordMetricWindow> ball_space(GroupPtr group, int r,
                                                   std::size_t cap) {
  if (r < 0) throw Error(ErrorCode::kInvalidArgument, "negative radius");
  auto norm = std::make_shared<const WordNorm>(std::move(group), cap);
  norm->reserve(2 * r);
  return WordMetricWindow::ball(std::move(norm), r);
}

}  // namespace coarsekit
