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
#include "coarsekit/property_a.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "coarsekit/constructions.hpp"
#include "coarsekit/error.hpp"

namespace coarsekit {

namespace {

constexpr double kNormTolerance = 1e-9;

struct PairScan {
  std::size_t pairs = 0;
  std::size_t stride = 1;
};

// Calls visit(z, w, d) for z < w with d(z, w) <= K, z running over every
// stride-th point.
template <typename Visit>
PairScan scan_pairs(const FiniteMetricSpace& space, double K,
                    std::size_t max_pairs, Visit&& visit) {
  PairScan scan;
  const std::size_t n = space.size();
  if (n == 0) return scan;
  std::size_t ball0 = 0;
  space.visit_ball(0, K + kTolerance, [&](PointId, double) {
    ++ball0;
    return true;
  });
  const double estimate = 0.5 * static_cast<double>(n) * ball0;
  if (estimate > static_cast<double>(max_pairs)) {
    scan.stride = static_cast<std::size_t>(
        std::ceil(estimate / static_cast<double>(max_pairs)));
  }
  for (PointId z = 0; z < n; z += static_cast<PointId>(scan.stride)) {
    space.visit_ball(z, K + kTolerance, [&](PointId w, double d) {
      if (w > z) {
        visit(z, w, d);
        ++scan.pairs;
      }
      return true;
    });
  }
  return scan;
}

std::string at_level(double n, const FiniteMetricSpace& space, PointId z) {
  return "n=" + std::to_string(n) + " z=" + space.label(z);
}

}  // namespace

void validate_family(const PropertyAFamily& f) {
  check_exponent(f.p);
  if (f.levels.size() != f.functions.size() ||
      f.levels.size() != f.support_radius.size()) {
    throw Error(ErrorCode::kInvalidArgument, "family tables disagree in length");
  }
  const auto& space = *f.space;
  for (std::size_t l = 0; l < f.levels.size(); ++l) {
    if (l && !(f.levels[l] > f.levels[l - 1])) {
      throw Error(ErrorCode::kInvalidArgument, "levels must increase");
    }
    if (f.functions[l].size() != space.size()) {
      throw Error(ErrorCode::kInvalidArgument, "level has wrong point count");
    }
    for (PointId z = 0; z < space.size(); ++z) {
      const SparseVector& a = f.functions[l][z];
      if (!a.nonnegative()) {
        throw Error(ErrorCode::kAuditFailed, "negative coordinate",
                    at_level(f.levels[l], space, z));
      }
      if (std::abs(a.norm(f.p) - 1) > kNormTolerance) {
        throw Error(ErrorCode::kAuditFailed, "function is not a unit vector",
                    at_level(f.levels[l], space, z));
      }
      for (const auto& [x, v] : a.entries()) {
        if (x >= space.size() ||
            space.distance(z, static_cast<PointId>(x)) >
                f.support_radius[l] + kTolerance) {
          throw Error(ErrorCode::kAuditFailed, "support leaves B_R(z)",
                      at_level(f.levels[l], space, z) + " x=" + std::to_string(x));
        }
      }
    }
  }
}

PropertyAFamily family_from_covers(
    const std::vector<std::pair<double, Cover>>& covers, double p) {
  check_exponent(p);
  if (covers.empty()) throw Error(ErrorCode::kInvalidArgument, "no covers");
  PropertyAFamily f;
  f.space = covers.front().second.space_ptr();
  f.p = p;
  std::vector<double> bound_m;
  for (const auto& [n, cover] : covers) {
    if (cover.space_ptr() != f.space) {
      throw Error(ErrorCode::kInvalidArgument, "covers live on different spaces");
    }
    if (n <= 0) throw Error(ErrorCode::kInvalidArgument, "levels must be positive");
    std::string witness;
    if (!lebesgue_at_least(cover, n + 1, 0, &witness)) {
      throw Error(ErrorCode::kLebesgueTooSmall, "cover needs Lambda >= n + 1",
                  "n=" + std::to_string(n) + " x=" + witness);
    }
    IrreducibleSubcover sub = shrink_to_irreducible(cover, n);
    const Cover& v = sub.cover;
    const std::size_t m = multiplicity(v);
    std::vector<SparseVector> row(f.space->size());
    for (PointId z = 0; z < f.space->size(); ++z) {
      std::vector<SparseVector::Entry> e;
      for (std::uint32_t j : v.containing(z)) {
        double phi = distance_to_complement(*f.space, z, v.set(j));
        if (phi == kInfinity) phi = 1;  // V_j = X: only the ratio matters
        e.emplace_back(sub.private_points[j], phi);
      }
      std::sort(e.begin(), e.end());
      SparseVector phi_z(std::move(e));
      const double norm = phi_z.norm(p);
      if (!(norm > 0)) {
        throw Error(ErrorCode::kDegenerateDenominator, "phi_z vanishes",
                    at_level(n, *f.space, z));
      }
      row[z] = phi_z.scaled(1 / norm);
    }
    f.levels.push_back(n);
    f.support_radius.push_back(cover_diameter(v));
    f.functions.push_back(std::move(row));
    f.multiplicity.push_back(m);
    bound_m.push_back(static_cast<double>(m));
  }
  auto levels = f.levels;
  f.bound = [levels, bound_m, p](std::size_t l, double K) {
    const double root = std::isinf(p) ? 1 : std::pow(bound_m[l], 1 / p);
    return 8 * K * root / levels[l];
  };
  validate_family(f);
  return f;
}

PropertyAFamily tent_family(SpacePtr space, const std::vector<double>& levels,
                            double p) {
  check_exponent(p);
  PropertyAFamily f;
  f.space = space;
  f.p = p;
  for (double n : levels) {
    if (n < 1) throw Error(ErrorCode::kInvalidArgument, "tent levels need n >= 1");
    std::vector<SparseVector> row(space->size());
    for (PointId z = 0; z < space->size(); ++z) {
      std::vector<SparseVector::Entry> e;
      space->visit_ball(z, n, [&](PointId x, double d) {
        const double v = 1 - d / n;
        if (v > 0) e.emplace_back(x, v);
        return true;
      });
      std::sort(e.begin(), e.end());
      SparseVector a(std::move(e));
      row[z] = std::isinf(p) ? a : a.scaled(1 / a.norm(p));
    }
    f.levels.push_back(n);
    f.support_radius.push_back(n);
    f.functions.push_back(std::move(row));
    f.multiplicity.push_back(0);
  }
  if (std::isinf(p)) {
    f.bound = [levels](std::size_t l, double K) { return K / levels[l]; };
  }
  validate_family(f);
  return f;
}

double power_inequality_slack(const SparseVector& a, const SparseVector& b,
                              double p, double m) {
  const double rhs = lp_distance_pow(a, b, p);
  const double lhs = lp_distance_pow(a.powered(p / m), b.powered(p / m), m);
  return rhs - lhs;
}

double holder_inequality_slack(const SparseVector& a, const SparseVector& b,
                               double p) {
  const double q = p / (p - 1);
  const double rhs = std::pow(2.0, 1 / q) * p * lp_distance(a, b, p);
  const double lhs = lp_distance(a.powered(p), b.powered(p), 1);
  return rhs - lhs;
}

namespace {

template <typename Slack>
ConversionAudit audit_pairs(const PropertyAFamily& from, double max_K,
                            std::size_t max_pairs, Slack&& slack) {
  ConversionAudit audit;
  for (std::size_t l = 0; l < from.levels.size(); ++l) {
    const auto& row = from.functions[l];
    PairScan scan = scan_pairs(
        *from.space, max_K, max_pairs,
        [&](PointId z, PointId w, double) {
          const double s = slack(row[z], row[w]);
          audit.min_slack = std::min(audit.min_slack, s);
          if (s < -kNormTolerance) {
            throw Error(ErrorCode::kAuditFailed,
                        "conversion inequality fails",
                        at_level(from.levels[l], *from.space, z) +
                            " w=" + from.space->label(w));
          }
        });
    audit.pairs += scan.pairs;
    audit.stride = std::max(audit.stride, scan.stride);
  }
  return audit;
}

}  // namespace

ConvertedFamily convert_up(const PropertyAFamily& a, double m, double max_K,
                           std::size_t max_pairs) {
  const double p = a.p;
  if (std::isinf(p) || std::isinf(m) || m < p) {
    throw Error(ErrorCode::kInvalidArgument, "convert_up needs finite p <= m");
  }
  PropertyAFamily b = a;
  b.p = m;
  for (auto& row : b.functions)
    for (auto& v : row) v = v.powered(p / m);
  if (a.bound) {
    auto inner = a.bound;
    b.bound = [inner, p, m](std::size_t l, double K) {
      return std::pow(std::pow(inner(l, K), p), 1 / m);
    };
  }
  validate_family(b);
  ConversionAudit audit = audit_pairs(
      a, max_K, max_pairs, [&](const SparseVector& x, const SparseVector& y) {
        return power_inequality_slack(x, y, p, m);
      });
  return {std::move(b), audit};
}

ConvertedFamily convert_down_to_1(const PropertyAFamily& b, double max_K,
                                  std::size_t max_pairs) {
  const double p = b.p;
  if (std::isinf(p) || p < 2 || p != std::floor(p)) {
    throw Error(ErrorCode::kInvalidArgument,
                "convert_down_to_1 needs an integer p >= 2");
  }
  PropertyAFamily a = b;
  a.p = 1;
  for (auto& row : a.functions)
    for (auto& v : row) v = v.powered(p);
  if (b.bound) {
    auto inner = b.bound;
    const double factor = std::pow(2.0, (p - 1) / p) * p;
    a.bound = [inner, factor](std::size_t l, double K) {
      return factor * inner(l, K);
    };
  }
  validate_family(a);
  ConversionAudit audit = audit_pairs(
      b, max_K, max_pairs, [&](const SparseVector& x, const SparseVector& y) {
        return holder_inequality_slack(x, y, p);
      });
  return {std::move(a), audit};
}

VariationReport variation_report(const PropertyAFamily& f,
                                 const std::vector<double>& Ks,
                                 std::size_t max_pairs) {
  VariationReport r;
  r.levels = f.levels;
  r.Ks = Ks;
  std::sort(r.Ks.begin(), r.Ks.end());
  const double kmax = r.Ks.empty() ? 0 : r.Ks.back();
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t l = 0; l < f.levels.size(); ++l) {
    std::vector<double> sup(r.Ks.size(), 0);
    const auto& row = f.functions[l];
    PairScan scan =
        scan_pairs(*f.space, kmax, max_pairs, [&](PointId z, PointId w, double d) {
          const double v = lp_distance(row[z], row[w], f.p);
          for (std::size_t k = 0; k < r.Ks.size(); ++k) {
            if (d <= r.Ks[k] + kTolerance) sup[k] = std::max(sup[k], v);
          }
        });
    r.pairs += scan.pairs;
    r.stride = std::max(r.stride, scan.stride);
    std::vector<double> bnd(r.Ks.size(), nan);
    for (std::size_t k = 0; k < r.Ks.size(); ++k) {
      if (f.bound) {
        bnd[k] = f.bound(l, r.Ks[k]);
        if (sup[k] > bnd[k] + kNormTolerance) r.within_bounds = false;
      }
      if (l && sup[k] > r.measured[l - 1][k] + kNormTolerance) r.monotone = false;
    }
    r.measured.push_back(std::move(sup));
    r.bound.push_back(std::move(bnd));
  }
  return r;
}

}  // namespace coarsekit
