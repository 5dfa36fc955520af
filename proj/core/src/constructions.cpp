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
#include "coarsekit/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "coarsekit/error.hpp"

namespace coarsekit {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string pair_label(const FiniteMetricSpace& space, PointId a, PointId b) {
  return space.label(a) + "," + space.label(b);
}

}  // namespace

Cover ball_cover(SpacePtr space, double lambda) {
  if (lambda < 0) throw Error(ErrorCode::kInvalidArgument, "negative lambda");
  std::vector<PointSet> sets(space->size());
  std::vector<std::uint32_t> hints(space->size());
  for (PointId x = 0; x < space->size(); ++x) {
    auto& s = sets[x];
    space->visit_ball(x, lambda + kTolerance, [&](PointId y, double) {
      s.push_back(y);
      return true;
    });
    hints[x] = x;
  }
  Cover cover(std::move(space), std::move(sets));
  cover.set_witness_hints(std::move(hints));
  return cover;
}

Cover families_to_cover(SpacePtr space, const std::vector<SetFamily>& families,
                        double r, double lambda) {
  if (!(r > 2 * lambda)) {
    throw Error(ErrorCode::kPreconditionFailed, "families need r > 2 lambda",
                "r=" + std::to_string(r) + " lambda=" + std::to_string(lambda));
  }
  const std::size_t n = space->size();
  std::vector<std::int64_t> first_set(n, -1);
  std::vector<PointSet> sets;
  std::vector<std::int64_t> owner(n);
  for (const auto& family : families) {
    std::fill(owner.begin(), owner.end(), -1);
    for (std::size_t m = 0; m < family.size(); ++m) {
      for (PointId x : family[m]) {
        if (owner[x] >= 0) {
          throw Error(ErrorCode::kNotDisjoint, "members of a family overlap",
                      pair_label(*space, x, x));
        }
        owner[x] = static_cast<std::int64_t>(m);
      }
    }
    for (PointId x = 0; x < n; ++x) {
      if (owner[x] < 0) continue;
      space->visit_ball(x, r, [&](PointId y, double d) {
        if (d >= r - kTolerance) return false;
        if (owner[y] >= 0 && owner[y] != owner[x]) {
          throw Error(ErrorCode::kNotDisjoint,
                      "family members closer than r",
                      pair_label(*space, x, y));
        }
        return true;
      });
    }
    for (const auto& member : family) {
      if (member.empty()) continue;
      for (PointId x : member) {
        if (first_set[x] < 0) first_set[x] = static_cast<std::int64_t>(sets.size());
      }
      sets.push_back(neighborhood(*space, member, lambda));
    }
  }
  std::vector<std::uint32_t> hints(n);
  for (PointId x = 0; x < n; ++x) {
    if (first_set[x] < 0) {
      throw Error(ErrorCode::kNotCovering, "families miss a point",
                  space->label(x));
    }
    hints[x] = static_cast<std::uint32_t>(first_set[x]);
  }
  Cover cover(space, std::move(sets));
  cover.set_witness_hints(std::move(hints));
  const std::size_t m = multiplicity(cover);
  if (m > families.size()) {
    throw Error(ErrorCode::kAuditFailed,
                "multiplicity exceeds the number of families",
                "multiplicity=" + std::to_string(m));
  }
  std::string witness;
  if (!lebesgue_at_least(cover, lambda, 0, &witness)) {
    throw Error(ErrorCode::kAuditFailed, "Lebesgue number below lambda",
                witness);
  }
  return cover;
}

std::vector<SetFamily> brick_families(const WordMetricWindow& window, int r) {
  const std::string& token = window.group().token();
  if (r < 1) throw Error(ErrorCode::kInvalidArgument, "r must be positive");
  std::vector<std::map<std::pair<std::int64_t, std::int64_t>, PointSet>> parts;
  if (token == "zn:1") {
    const std::int64_t len = std::max(1, r - 1);
    parts.resize(2);
    for (PointId p = 0; p < window.size(); ++p) {
      const std::int64_t k = floor_div(window.element(p)[0], len);
      parts[static_cast<std::size_t>(floor_div(k, 2) * 2 == k ? 0 : 1)][{k, 0}]
          .push_back(p);
    }
  } else if (token == "zn:2") {
    // Running bond: rows of height H, bricks of width W, every row shifted
    // by W/2. Colour (i - j) mod 3 keeps equal colours r apart.
    const std::int64_t h = std::max(1, r - 1);
    const std::int64_t w = std::max(2, 2 * (r - 2));
    parts.resize(3);
    for (PointId p = 0; p < window.size(); ++p) {
      const auto& e = window.element(p);
      const std::int64_t j = floor_div(e[1], h);
      const std::int64_t i = floor_div(e[0] - j * (w / 2), w);
      const auto colour = static_cast<std::size_t>(((i - j) % 3 + 3) % 3);
      parts[colour][{j, i}].push_back(p);
    }
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "brick families need a window of Z or Z^2, got " + token);
  }
  std::vector<SetFamily> out;
  for (auto& part : parts) {
    SetFamily family;
    for (auto& [key, members] : part) family.push_back(std::move(members));
    out.push_back(std::move(family));
  }
  return out;
}

std::vector<PointSet> brick_sets(
    const std::vector<std::vector<std::int64_t>>& coords, int lambda,
    BrickSpacing spacing) {
  if (lambda < 0) throw Error(ErrorCode::kInvalidArgument, "negative lambda");
  std::vector<PointSet> sets;
  if (coords.empty()) return sets;
  if (lambda == 0) {
    std::map<std::vector<std::int64_t>, PointSet> cells;
    for (PointId p = 0; p < coords.size(); ++p) cells[coords[p]].push_back(p);
    for (auto& [key, s] : cells) sets.push_back(std::move(s));
    return sets;
  }
  const std::size_t l = coords.front().size();
  const std::int64_t shift = spacing == BrickSpacing::kStandard
                                 ? 2 * lambda
                                 : std::max(1, 2 * lambda - 2);
  const std::int64_t side = static_cast<std::int64_t>(l + 1) * shift;
  std::map<std::vector<std::int64_t>, PointSet> cells;
  for (std::size_t copy = 0; copy <= l; ++copy) {
    const std::int64_t offset = static_cast<std::int64_t>(copy) * shift;
    for (PointId p = 0; p < coords.size(); ++p) {
      std::vector<std::int64_t> key{static_cast<std::int64_t>(copy)};
      for (std::int64_t c : coords[p]) key.push_back(floor_div(c - offset, side));
      cells[key].push_back(p);
    }
  }
  for (auto& [key, s] : cells) sets.push_back(std::move(s));
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

Cover brick_cover_zl(std::shared_ptr<const WordMetricWindow> window, int l,
                     int lambda, BrickSpacing spacing) {
  if (window->group().token() != "zn:" + std::to_string(l)) {
    throw Error(ErrorCode::kInvalidArgument,
                "brick cover needs a window of Z^" + std::to_string(l));
  }
  std::vector<std::vector<std::int64_t>> coords;
  coords.reserve(window->size());
  for (const auto& e : window->elements()) {
    coords.emplace_back(e.begin(), e.end());
  }
  Cover cover(window, brick_sets(coords, lambda, spacing));
  const std::size_t m = multiplicity(cover);
  if (m > static_cast<std::size_t>(l + 1)) {
    throw Error(ErrorCode::kAuditFailed, "brick multiplicity above l+1",
                "multiplicity=" + std::to_string(m));
  }
  std::string witness;
  if (!lebesgue_at_least(cover, lambda, 0, &witness)) {
    throw Error(ErrorCode::kAuditFailed, "brick Lebesgue number below lambda",
                witness);
  }
  return cover;
}

SparseVector partition_of_unity_at(const Cover& cover, PointId x) {
  std::vector<SparseVector::Entry> entries;
  std::size_t unbounded = 0;
  double total = 0;
  for (std::uint32_t i : cover.containing(x)) {
    const double d = distance_to_complement(cover.space(), x, cover.set(i));
    if (d == kInfinity) {
      ++unbounded;
      entries.emplace_back(i, kInfinity);
    } else {
      total += d;
      entries.emplace_back(i, d);
    }
  }
  if (unbounded > 0) {
    for (auto& [i, v] : entries) {
      v = v == kInfinity ? 1.0 / static_cast<double>(unbounded) : 0.0;
    }
    return SparseVector(std::move(entries));
  }
  if (!(total > 0)) {
    throw Error(ErrorCode::kDegenerateDenominator,
                "sum of distances to complements vanishes",
                cover.space().label(x));
  }
  for (auto& [i, v] : entries) v /= total;
  return SparseVector(std::move(entries));
}

std::vector<SparseVector> partition_of_unity(const Cover& cover) {
  std::vector<SparseVector> out(cover.space().size());
  for (PointId x = 0; x < out.size(); ++x) {
    out[x] = partition_of_unity_at(cover, x);
  }
  return out;
}

namespace {

constexpr std::size_t kMaterializeLimit = 2'000'000;
constexpr std::size_t kStridedBasePoints = 20'000;

}  // namespace

LipschitzAudit lipschitz_audit(const Cover& cover, std::size_t max_pairs,
                               std::size_t known_multiplicity,
                               double known_lebesgue) {
  const auto& space = cover.space();
  const std::size_t n = space.size();
  LipschitzAudit audit;
  audit.multiplicity =
      known_multiplicity > 0 ? known_multiplicity : multiplicity(cover);
  audit.lebesgue =
      known_lebesgue >= 0 ? known_lebesgue : pointwise_lebesgue(cover);
  if (audit.lebesgue == kInfinity) {
    audit.bound = 0;
  } else {
    const double k = 2.0 * (static_cast<double>(audit.multiplicity) - 1) + 3;
    audit.bound = k * k / audit.lebesgue;
  }
  auto consider = [&](PointId x, PointId y, const SparseVector& px,
                      const SparseVector& py, double d) {
    ++audit.pairs_scanned;
    const double ratio = lp_distance(px, py, 2) / d;
    if (ratio > audit.measured) {
      audit.measured = ratio;
      audit.witness_a = x;
      audit.witness_b = y;
    }
  };

  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  if (n <= kMaterializeLimit && pairs <= static_cast<double>(max_pairs)) {
    const auto p = partition_of_unity(cover);
    for (PointId x = 0; x < n; ++x) {
      for (PointId y = x + 1; y < n; ++y) {
        consider(x, y, p[x], p[y], space.distance(x, y));
      }
    }
    audit.pass = audit.measured <= audit.bound + kTolerance;
    return audit;
  }

  audit.exhaustive = false;
  int radius = 1;
  if (n <= kMaterializeLimit) {
    // Grow the radius while n * |B_r(center)| stays within twice the
    // pair budget. Point 0 is the window centre for ball windows.
    for (int r = 2;; ++r) {
      std::size_t count = 0;
      space.visit_ball(0, r, [&](PointId, double) {
        ++count;
        return true;
      });
      if (static_cast<double>(count) * static_cast<double>(n) >
          2.0 * static_cast<double>(max_pairs)) {
        break;
      }
      radius = r;
      if (count == n) break;
    }
  } else {
    audit.stride = (n + kStridedBasePoints - 1) / kStridedBasePoints;
  }
  audit.scan_radius = radius;
  audit.unscanned_bound =
      std::sqrt(2.0) / (space.integral() ? radius + 1.0 : double(radius));

  if (audit.stride == 1) {
    const auto p = partition_of_unity(cover);
    for (PointId x = 0; x < n; ++x) {
      space.visit_ball(x, radius, [&](PointId y, double d) {
        if (y > x) consider(x, y, p[x], p[y], d);
        return true;
      });
    }
  } else {
    for (PointId x = 0; x < n; x += static_cast<PointId>(audit.stride)) {
      const SparseVector px = partition_of_unity_at(cover, x);
      space.visit_ball(x, radius, [&](PointId y, double d) {
        if (y != x) consider(x, y, px, partition_of_unity_at(cover, y), d);
        return true;
      });
    }
  }
  audit.pass = audit.measured <= audit.bound + kTolerance &&
               audit.unscanned_bound <= audit.bound + kTolerance;
  return audit;
}

IrreducibleSubcover shrink_to_irreducible(const Cover& cover, double n) {
  const auto& space = cover.space();
  std::vector<PointSet> shrunk;
  std::vector<std::size_t> source;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    PointSet s = inner_neighborhood(space, cover.set(i), n);
    if (s.empty()) continue;
    shrunk.push_back(std::move(s));
    source.push_back(i);
  }
  std::vector<std::uint32_t> count(space.size(), 0);
  for (const auto& s : shrunk) {
    for (PointId x : s) ++count[x];
  }
  for (PointId x = 0; x < space.size(); ++x) {
    if (count[x] == 0) {
      throw Error(ErrorCode::kNotCoveringAfterShrink,
                  "shrunken sets miss a point", space.label(x));
    }
  }
  std::vector<char> keep(shrunk.size(), 1);
  for (std::size_t i = 0; i < shrunk.size(); ++i) {
    const bool redundant = std::all_of(shrunk[i].begin(), shrunk[i].end(),
                                       [&](PointId x) { return count[x] >= 2; });
    if (!redundant) continue;
    keep[i] = 0;
    for (PointId x : shrunk[i]) --count[x];
  }
  std::vector<PointSet> kept;
  std::vector<PointId> privates;
  std::vector<std::size_t> sources;
  for (std::size_t i = 0; i < shrunk.size(); ++i) {
    if (!keep[i]) continue;
    auto it = std::find_if(shrunk[i].begin(), shrunk[i].end(),
                           [&](PointId x) { return count[x] == 1; });
    if (it == shrunk[i].end()) {
      throw Error(ErrorCode::kNotIrreducible, "kept set has no private point",
                  "set=" + std::to_string(source[i]));
    }
    privates.push_back(*it);
    sources.push_back(source[i]);
    auto s = cover.set(source[i]);
    kept.emplace_back(s.begin(), s.end());
  }
  return IrreducibleSubcover{Cover(cover.space_ptr(), std::move(kept)),
                             std::move(privates), std::move(sources)};
}

}  // namespace coarsekit
