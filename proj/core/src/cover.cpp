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
#include "coarsekit/cover.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>

#include "coarsekit/error.hpp"

namespace coarsekit {

Cover::Cover(SpacePtr space, std::vector<PointSet> sets)
    : space_(std::move(space)) {
  const std::size_t n = space_->size();
  std::vector<char> covered(n, 0);
  offsets_.reserve(sets.size() + 1);
  offsets_.push_back(0);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    auto& s = sets[i];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) {
      throw Error(ErrorCode::kNotCovering, "cover has an empty member",
                  "set=" + std::to_string(i));
    }
    if (s.back() >= n) {
      throw Error(ErrorCode::kInvalidArgument, "cover member outside space",
                  "set=" + std::to_string(i));
    }
    for (PointId x : s) covered[x] = 1;
    flat_.insert(flat_.end(), s.begin(), s.end());
    offsets_.push_back(flat_.size());
    PointSet().swap(s);
  }
  for (PointId x = 0; x < n; ++x) {
    if (!covered[x]) {
      throw Error(ErrorCode::kNotCovering, "point not covered",
                  space_->label(x));
    }
  }
}

std::vector<PointSet> Cover::sets() const {
  std::vector<PointSet> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) {
    auto s = set(i);
    out.emplace_back(s.begin(), s.end());
  }
  return out;
}

void Cover::build_membership() const {
  const std::size_t n = space_->size();
  auto& offsets = membership_->offsets;
  offsets.assign(n + 1, 0);
  for (PointId x : flat_) ++offsets[x + 1];
  for (std::size_t x = 0; x < n; ++x) offsets[x + 1] += offsets[x];
  membership_->sets.resize(flat_.size());
  std::vector<std::size_t> fill(offsets.begin(), offsets.end() - 1);
  for (std::size_t i = 0; i < size(); ++i) {
    for (PointId x : set(i)) {
      membership_->sets[fill[x]++] = static_cast<std::uint32_t>(i);
    }
  }
}

std::span<const std::uint32_t> Cover::containing(PointId x) const {
  std::call_once(membership_->once, [this] { build_membership(); });
  const auto& m = *membership_;
  return {m.sets.data() + m.offsets[x], m.offsets[x + 1] - m.offsets[x]};
}

void Cover::set_witness_hints(std::vector<std::uint32_t> hints) {
  if (!hints.empty() && hints.size() != space_->size()) {
    throw Error(ErrorCode::kInvalidArgument, "one hint per point expected");
  }
  hints_ = std::move(hints);
}

std::vector<PointId> safe_points(const FiniteMetricSpace& space,
                                 double safe_margin) {
  std::vector<PointId> out;
  for (PointId x = 0; x < space.size(); ++x) {
    if (space.boundary_margin(x) >= safe_margin - kTolerance) out.push_back(x);
  }
  return out;
}

std::size_t multiplicity(const Cover& cover, double safe_margin) {
  const auto& space = cover.space();
  std::vector<std::uint32_t> count(space.size(), 0);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    for (PointId x : cover.set(i)) ++count[x];
  }
  std::size_t best = 0;
  for (PointId x = 0; x < space.size(); ++x) {
    if (space.boundary_margin(x) >= safe_margin - kTolerance) {
      best = std::max<std::size_t>(best, count[x]);
    }
  }
  return best;
}

double local_lebesgue(const Cover& cover, PointId x) {
  const auto& space = cover.space();
  const bool integral = space.integral();
  double best = 0;
  // In an integer metric a set beats best only if it holds the whole
  // closed ball B_best(x), so smaller sets are skipped by size alone and
  // the rest go through the cheap threshold test first.
  std::size_t needed = 0;
  auto raise = [&](double d) {
    if (d <= best) return;
    best = d;
    if (!integral || best == kInfinity) return;
    needed = 0;
    space.visit_ball(x, best, [&](PointId, double) {
      ++needed;
      return true;
    });
  };
  auto consider = [&](std::uint32_t i) {
    auto s = cover.set(i);
    if (integral && best > 0) {
      if (s.size() < needed) return;
      if (!complement_at_least(space, x, s, best + 1)) return;
    }
    raise(distance_to_complement(space, x, s));
  };
  const auto& hints = cover.witness_hints();
  if (!hints.empty()) consider(hints[x]);
  for (std::uint32_t i : cover.containing(x)) {
    if (best == kInfinity) break;
    consider(i);
  }
  return best;
}

double pointwise_lebesgue(const Cover& cover, double safe_margin) {
  double out = kInfinity;
  for (PointId x : safe_points(cover.space(), safe_margin)) {
    out = std::min(out, local_lebesgue(cover, x));
  }
  return out;
}

bool lebesgue_at_least(const Cover& cover, double lambda, double safe_margin,
                       std::string* witness) {
  const auto& space = cover.space();
  const auto& hints = cover.witness_hints();
  for (PointId x : safe_points(space, safe_margin)) {
    if (!hints.empty() &&
        complement_at_least(space, x, cover.set(hints[x]), lambda)) {
      continue;
    }
    bool found = false;
    for (std::uint32_t i : cover.containing(x)) {
      if (complement_at_least(space, x, cover.set(i), lambda)) {
        found = true;
        break;
      }
    }
    if (!found) {
      if (witness) *witness = space.label(x);
      return false;
    }
  }
  return true;
}

namespace {

constexpr std::size_t kSubsetLimit = 20;
constexpr std::size_t kCliqueSpaceLimit = 5000;
constexpr std::size_t kCliqueLimit = 1'000'000;

bool exact_by_subsets(const Cover& cover, double lambda,
                      std::vector<PointId>* witness) {
  const auto& space = cover.space();
  const std::size_t n = space.size();
  std::vector<std::uint32_t> near(n, 0);
  for (PointId x = 0; x < n; ++x) {
    for (PointId y = 0; y < n; ++y) {
      if (space.distance(x, y) <= lambda + kTolerance) near[x] |= 1u << y;
    }
  }
  std::vector<std::uint32_t> masks;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    std::uint32_t m = 0;
    for (PointId x : cover.set(i)) m |= 1u << x;
    masks.push_back(m);
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<char> small(std::size_t{1} << n, 0);
  small[0] = 1;
  for (std::uint32_t s = 1; s <= full && s != 0; ++s) {
    const int top = 31 - std::countl_zero(s);
    const std::uint32_t rest = s & ~(1u << top);
    small[s] = small[rest] && (near[top] & rest) == rest;
    if (!small[s]) continue;
    bool inside = false;
    for (std::uint32_t m : masks) {
      if ((m & s) == s) {
        inside = true;
        break;
      }
    }
    if (!inside) {
      if (witness) {
        witness->clear();
        for (PointId x = 0; x < n; ++x) {
          if (s & (1u << x)) witness->push_back(x);
        }
      }
      return false;
    }
  }
  return true;
}

bool exact_by_cliques(const Cover& cover, double lambda,
                      std::vector<PointId>* witness) {
  bool ok = true;
  for_each_maximal_clique(cover.space(), lambda, [&](const PointSet& members) {
    for (std::uint32_t i : cover.containing(members.front())) {
      auto s = cover.set(i);
      if (std::includes(s.begin(), s.end(), members.begin(), members.end())) {
        return true;
      }
    }
    ok = false;
    if (witness) *witness = members;
    return false;
  }, kCliqueLimit);
  return ok;
}

}  // namespace

void for_each_maximal_clique(
    const FiniteMetricSpace& space, double lambda,
    const std::function<bool(const PointSet&)>& visit,
    std::size_t max_cliques) {
  const std::size_t n = space.size();
  std::vector<PointSet> adj(n);
  for (PointId x = 0; x < n; ++x) {
    space.visit_ball(x, lambda + kTolerance, [&](PointId y, double) {
      if (y != x) adj[x].push_back(y);
      return true;
    });
    std::sort(adj[x].begin(), adj[x].end());
  }
  auto intersect = [](const PointSet& a, const PointSet& b) {
    PointSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out));
    return out;
  };
  std::size_t cliques = 0;
  bool go = true;
  PointSet clique;
  std::function<void(PointSet, PointSet)> expand = [&](PointSet p,
                                                       PointSet x) {
    if (!go) return;
    if (p.empty() && x.empty()) {
      if (++cliques > max_cliques) {
        throw Error(ErrorCode::kTooLarge, "too many maximal cliques");
      }
      PointSet sorted = clique;
      std::sort(sorted.begin(), sorted.end());
      go = visit(sorted);
      return;
    }
    PointId pivot = p.empty() ? x.front() : p.front();
    std::size_t pivot_degree = 0;
    for (const PointSet* side : {&p, &x}) {
      for (PointId u : *side) {
        const std::size_t d = intersect(p, adj[u]).size();
        if (d >= pivot_degree) {
          pivot_degree = d;
          pivot = u;
        }
      }
    }
    PointSet candidates;
    std::set_difference(p.begin(), p.end(), adj[pivot].begin(),
                        adj[pivot].end(), std::back_inserter(candidates));
    for (PointId v : candidates) {
      clique.push_back(v);
      expand(intersect(p, adj[v]), intersect(x, adj[v]));
      clique.pop_back();
      if (!go) return;
      p.erase(std::lower_bound(p.begin(), p.end(), v));
      x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
  };
  PointSet all(n);
  for (PointId i = 0; i < n; ++i) all[i] = i;
  if (n) expand(all, {});
}

bool exact_lebesgue_at_least(const Cover& cover, double lambda,
                             std::vector<PointId>* witness) {
  const std::size_t n = cover.space().size();
  if (n <= kSubsetLimit) return exact_by_subsets(cover, lambda, witness);
  if (n > kCliqueSpaceLimit) {
    throw Error(ErrorCode::kTooLarge,
                "exact Lebesgue test limited to " +
                    std::to_string(kCliqueSpaceLimit) + " points");
  }
  return exact_by_cliques(cover, lambda, witness);
}

double cover_diameter(const Cover& cover) {
  double out = 0;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    out = std::max(out, set_diameter(cover.space(), cover.set(i)));
  }
  return out;
}

CoverStats cover_stats(const Cover& cover, double safe_margin) {
  CoverStats st;
  const auto& space = cover.space();
  st.sets = cover.size();
  st.multiplicity = multiplicity(cover, safe_margin);
  st.lebesgue_pointwise = pointwise_lebesgue(cover, safe_margin);
  st.diameter = cover_diameter(cover);
  for (PointId x : safe_points(space, safe_margin)) {
    ++st.audited_points;
    st.boundary_margin = std::min(st.boundary_margin, space.boundary_margin(x));
  }
  return st;
}

}  // namespace coarsekit
