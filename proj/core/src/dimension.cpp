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
#include "coarsekit/dimension.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <memory>

#include "coarsekit/constructions.hpp"
#include "coarsekit/error.hpp"
#include "coarsekit/word_metric.hpp"
#include "coarsekit/wreath.hpp"

namespace coarsekit {

namespace {

constexpr std::size_t kOracleLimit = 9;
constexpr std::size_t kGreedyLimit = 5000;

std::vector<PointSet> requirements(const FiniteMetricSpace& space,
                                   double lambda) {
  std::vector<PointSet> out;
  for_each_maximal_clique(space, lambda, [&](const PointSet& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

void check_requirements(const FiniteMetricSpace& space,
                        const std::vector<PointSet>& reqs, double D) {
  for (const auto& r : reqs) {
    double d = set_diameter(space, r);
    if (d > D + kTolerance) {
      std::string w;
      for (PointId x : r) w += (w.empty() ? "" : ",") + space.label(x);
      throw Error(ErrorCode::kInfeasible,
                  "a set of diameter <= lambda does not fit the budget",
                  "{" + w + "} diam=" + format_number(d));
    }
  }
}

}  // namespace

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

MultiplicityWitness oracle_min_multiplicity(SpacePtr space, double lambda,
                                            double D) {
  const std::size_t n = space->size();
  if (n > kOracleLimit) {
    throw Error(ErrorCode::kTooLarge, "oracle limited to 9 points",
                "n=" + std::to_string(n));
  }
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty space");
  auto reqs = requirements(*space, lambda);
  check_requirements(*space, reqs, D);
  using Mask = std::uint32_t;
  auto mask_of = [](const PointSet& s) {
    Mask m = 0;
    for (PointId x : s) m |= Mask{1} << x;
    return m;
  };
  std::vector<Mask> req;
  for (const auto& r : reqs) req.push_back(mask_of(r));

  // diam of every subset, then the unions of requirements that fit.
  std::vector<double> diam(std::size_t{1} << n, 0);
  for (Mask s = 1; s < (Mask{1} << n); ++s) {
    const int top = 31 - std::countl_zero(s);
    const Mask rest = s & ~(Mask{1} << top);
    double d = diam[rest];
    for (PointId y = 0; y < n; ++y) {
      if (rest & (Mask{1} << y)) {
        d = std::max(d, space->distance(static_cast<PointId>(top), y));
      }
    }
    diam[s] = d;
  }
  std::vector<char> seen(std::size_t{1} << n, 0);
  std::vector<Mask> candidates;
  for (Mask r : req) {
    if (!seen[r]) {
      seen[r] = 1;
      candidates.push_back(r);
    }
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (Mask r : req) {
      Mask u = candidates[i] | r;
      if (!seen[u] && diam[u] <= D + kTolerance) {
        seen[u] = 1;
        candidates.push_back(u);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });

  std::vector<Mask> chosen;
  std::vector<int> count(n, 0);
  std::function<bool(std::size_t)> search = [&](std::size_t k) {
    std::size_t open = req.size();
    for (std::size_t i = 0; i < req.size(); ++i) {
      bool inside = std::any_of(chosen.begin(), chosen.end(),
                                [&](Mask c) { return (c & req[i]) == req[i]; });
      if (!inside) {
        open = i;
        break;
      }
    }
    if (open == req.size()) return true;
    for (Mask c : candidates) {
      if ((c & req[open]) != req[open]) continue;
      bool fits = true;
      for (PointId x = 0; x < n && fits; ++x) {
        if ((c >> x & 1) && count[x] + 1 > static_cast<int>(k)) fits = false;
      }
      if (!fits) continue;
      for (PointId x = 0; x < n; ++x) count[x] += c >> x & 1;
      chosen.push_back(c);
      if (search(k)) return true;
      chosen.pop_back();
      for (PointId x = 0; x < n; ++x) count[x] -= c >> x & 1;
    }
    return false;
  };
  for (std::size_t k = 1; k <= n; ++k) {
    chosen.clear();
    std::fill(count.begin(), count.end(), 0);
    if (search(k)) {
      std::vector<PointSet> sets;
      for (Mask c : chosen) {
        PointSet s;
        for (PointId x = 0; x < n; ++x)
          if (c >> x & 1) s.push_back(x);
        sets.push_back(std::move(s));
      }
      return {k, Cover(space, std::move(sets))};
    }
  }
  throw Error(ErrorCode::kInfeasible, "no cover found");
}

namespace {

struct GreedyState {
  const FiniteMetricSpace& space;
  const std::vector<PointSet>& reqs;
  double D;
};

double union_diameter(const FiniteMetricSpace& space, const PointSet& a,
                      double diam_a, const PointSet& b, double diam_b) {
  double d = std::max(diam_a, diam_b);
  for (PointId x : b) {
    if (std::binary_search(a.begin(), a.end(), x)) continue;
    for (PointId y : a) d = std::max(d, space.distance(x, y));
  }
  return d;
}

PointSet merged(const PointSet& a, const PointSet& b) {
  PointSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool includes(const PointSet& big, const PointSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

std::vector<PointSet> sweep(const GreedyState& st, PointId seed) {
  const auto& space = st.space;
  std::vector<double> from(space.size());
  for (PointId x = 0; x < space.size(); ++x) from[x] = space.distance(seed, x);
  std::vector<std::size_t> order(st.reqs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto key = [&](std::size_t i) {
    double lo = kInfinity, hi = 0;
    for (PointId x : st.reqs[i]) {
      lo = std::min(lo, from[x]);
      hi = std::max(hi, from[x]);
    }
    return std::make_pair(lo, hi);
  };
  std::vector<std::pair<double, double>> keys(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) keys[i] = key(i);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return keys[a] < keys[b];
  });
  std::vector<PointSet> sets;
  std::vector<double> diams;
  for (std::size_t i : order) {
    const PointSet& r = st.reqs[i];
    if (std::any_of(sets.begin(), sets.end(),
                    [&](const PointSet& s) { return includes(s, r); })) {
      continue;
    }
    const double dr = set_diameter(space, r);
    bool placed = false;
    for (std::size_t j = sets.size(); j-- > 0 && !placed;) {
      const double d = union_diameter(space, sets[j], diams[j], r, dr);
      if (d <= st.D + kTolerance) {
        sets[j] = merged(sets[j], r);
        diams[j] = d;
        placed = true;
      }
    }
    if (!placed) {
      sets.push_back(r);
      diams.push_back(dr);
    }
  }
  return sets;
}

void improve(const GreedyState& st, std::vector<PointSet>& sets) {
  const auto& space = st.space;
  std::vector<double> diams;
  for (const auto& s : sets) diams.push_back(set_diameter(space, s));
  if (sets.size() <= 2000) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < sets.size() && !changed; ++i) {
        for (std::size_t j = i + 1; j < sets.size() && !changed; ++j) {
          const double d =
              union_diameter(space, sets[i], diams[i], sets[j], diams[j]);
          if (d <= st.D + kTolerance) {
            sets[i] = merged(sets[i], sets[j]);
            diams[i] = d;
            sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(j));
            diams.erase(diams.begin() + static_cast<std::ptrdiff_t>(j));
            changed = true;
          }
        }
      }
    }
  }
  // Drop sets whose requirements all sit in another set, smallest first.
  std::vector<std::size_t> order(sets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sets[a].size() < sets[b].size();
  });
  std::vector<char> alive(sets.size(), 1);
  for (std::size_t i : order) {
    bool redundant = true;
    for (const auto& r : st.reqs) {
      if (!includes(sets[i], r)) continue;
      bool elsewhere = false;
      for (std::size_t j = 0; j < sets.size() && !elsewhere; ++j) {
        if (j != i && alive[j] && includes(sets[j], r)) elsewhere = true;
      }
      if (!elsewhere) {
        redundant = false;
        break;
      }
    }
    if (redundant) alive[i] = 0;
  }
  std::vector<PointSet> kept;
  for (std::size_t i = 0; i < sets.size(); ++i)
    if (alive[i]) kept.push_back(std::move(sets[i]));
  sets = std::move(kept);
}

}  // namespace

MultiplicityWitness greedy_min_multiplicity(SpacePtr space, double lambda,
                                            double D) {
  const std::size_t n = space->size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "empty space");
  if (n > kGreedyLimit) {
    throw Error(ErrorCode::kTooLarge, "greedy limited to 5000 points",
                "n=" + std::to_string(n));
  }
  auto reqs = requirements(*space, lambda);
  check_requirements(*space, reqs, D);
  GreedyState st{*space, reqs, D};

  std::vector<std::vector<PointSet>> attempts;
  std::vector<PointId> seeds;
  if (n <= 64) {
    for (PointId x = 0; x < n; ++x) seeds.push_back(x);
  } else {
    PointId best = 0;
    double ecc_best = -1;
    for (PointId x = 0; x < n; ++x) {
      double ecc = 0;
      for (PointId y = 0; y < n; ++y) ecc = std::max(ecc, space->distance(x, y));
      if (ecc > ecc_best) {
        ecc_best = ecc;
        best = x;
      }
    }
    seeds.push_back(best);
  }
  for (PointId s : seeds) attempts.push_back(sweep(st, s));
  if (auto w = std::dynamic_pointer_cast<const WordMetricWindow>(space)) {
    if (const auto* z = dynamic_cast<const IntegerLattice*>(&w->group())) {
      std::vector<std::vector<std::int64_t>> coords;
      for (const auto& e : w->elements()) coords.emplace_back(e.begin(), e.end());
      const int lam = static_cast<int>(std::ceil(lambda - kTolerance));
      for (auto spacing : {BrickSpacing::kTight, BrickSpacing::kStandard}) {
        auto sets = brick_sets(coords, lam, spacing);
        bool fits = std::all_of(sets.begin(), sets.end(), [&](const PointSet& s) {
          return set_diameter(*space, s) <= D + kTolerance;
        });
        if (fits && z->rank() >= 1) attempts.push_back(std::move(sets));
      }
    }
  }

  std::optional<MultiplicityWitness> best;
  std::string failure;
  for (auto& sets : attempts) {
    improve(st, sets);
    Cover cover(space, std::move(sets));
    const std::size_t m = multiplicity(cover);
    if (best && (m > best->multiplicity ||
                 (m == best->multiplicity && cover.size() >= best->cover.size()))) {
      continue;
    }
    std::vector<PointId> witness;
    if (!exact_lebesgue_at_least(cover, lambda, &witness)) {
      failure = "misses a lambda-set at " + space->label(witness.front());
      continue;
    }
    if (cover_diameter(cover) > D + kTolerance) {
      failure = "exceeds the budget";
      continue;
    }
    best = MultiplicityWitness{m, std::move(cover)};
  }
  if (!best) {
    throw Error(ErrorCode::kAuditFailed, "no greedy attempt passed its audit",
                failure);
  }
  return std::move(*best);
}

DPolicy DPolicy::parse(std::string_view text) {
  DPolicy p;
  p.text = std::string(text);
  if (text.starts_with("linear:")) {
    Polynomial c = Polynomial::parse(text.substr(7));
    if (c.coefficients.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument, "linear:<c> takes one number");
    }
    p.polynomial.coefficients = {0, c.coefficients[0]};
  } else if (text.starts_with("poly:")) {
    p.polynomial = Polynomial::parse(text.substr(5));
  } else {
    throw Error(ErrorCode::kInvalidArgument,
                "diameter policy must be linear:<c> or poly:<c0,c1,...>",
                std::string(text));
  }
  if (!p.polynomial.nonnegative()) {
    throw Error(ErrorCode::kInvalidArgument, "policy needs nonnegative coefficients");
  }
  return p;
}

namespace {

struct Witness {
  std::string method;
  double lambda;
  std::shared_ptr<const Cover> cover;
  double diameter;
  std::optional<double> envelope;
};

bool wreath_supported(const GroupSpec& g) {
  const auto* w = dynamic_cast<const WreathProduct*>(&g);
  if (!w || !dynamic_cast<const IntegerLattice*>(&w->base())) return false;
  return dynamic_cast<const IntegerLattice*>(&w->lamps()) ||
         dynamic_cast<const CyclicGroup*>(&w->lamps());
}

}  // namespace

DimensionProfile growth_curve(GroupPtr group, const std::vector<double>& lambdas,
                              const DPolicy& policy, int radius,
                              std::size_t cap) {
  if (lambdas.empty()) throw Error(ErrorCode::kInvalidArgument, "empty schedule");
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i] < 0 || (i && !(lambdas[i] > lambdas[i - 1]))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "lambda schedule must be nonnegative and increasing");
    }
  }
  DimensionProfile out;
  auto window = ball_space(group, radius, cap);
  const bool is_lattice = dynamic_cast<const IntegerLattice*>(group.get());
  const bool is_heisenberg = group->token() == "heisenberg";
  const bool is_wreath = wreath_supported(*group);

  std::vector<Witness> witnesses;
  std::vector<std::vector<std::size_t>> own(lambdas.size());
  auto keep = [&](std::size_t li, std::string method, Cover cover,
                  std::optional<double> envelope) {
    auto c = std::make_shared<const Cover>(std::move(cover));
    own[li].push_back(witnesses.size());
    witnesses.push_back({std::move(method), lambdas[li], c, cover_diameter(*c),
                         envelope});
  };
  auto note = [&](const std::string& method, double lambda, const Error& e) {
    out.notes.push_back(method + " lambda=" + format_number(lambda) + ": " +
                        std::string(to_string(e.code())) + " " + e.what() +
                        (e.witness().empty() ? "" : " [" + e.witness() + "]"));
  };

  for (std::size_t li = 0; li < lambdas.size(); ++li) {
    const double lam = lambdas[li];
    const int ilam = static_cast<int>(std::ceil(lam - kTolerance));
    if (lam <= radius) {
      Cover c = ball_cover(window, lam);
      std::size_t ball = 0;
      window->visit_ball(0, lam + kTolerance, [&](PointId, double) {
        ++ball;
        return true;
      });
      const std::size_t m = multiplicity(c, lam);
      if (m > ball) {
        throw Error(ErrorCode::kAuditFailed, "ball cover beats its envelope",
                    "m=" + std::to_string(m) + " |B|=" + std::to_string(ball));
      }
      keep(li, "ball", std::move(c), static_cast<double>(ball));
    } else {
      out.notes.push_back("ball lambda=" + format_number(lam) +
                          ": window radius below lambda");
    }
    if (is_lattice && lam == ilam) {
      const int rank = static_cast<const IntegerLattice&>(*group).rank();
      keep(li, "brick", brick_cover_zl(window, rank, ilam, BrickSpacing::kTight),
           rank + 1.0);
    }
    if (is_wreath && lam == ilam) {
      try {
        auto w = wreath_cover(group, radius, ilam, cap);
        keep(li, "wreath", std::move(w.extension.cover),
             static_cast<double>(w.parameters.theoretical_bound));
      } catch (const Error& e) {
        note("wreath", lam, e);
      }
    }
    if (is_heisenberg && lam == ilam) {
      try {
        auto h = heisenberg_cover(radius, ilam, cap);
        keep(li, "extension", std::move(h.extension.cover), 6.0);
      } catch (const Error& e) {
        note("extension", lam, e);
      }
    }
    if (window->size() <= 400) {
      try {
        // Every B_lam(x) has diameter <= 2 lam, so the exact test at 2 lam
        // gives d(x, X \ U) >= lam.
        auto g = greedy_min_multiplicity(window, 2 * lam, policy(lam));
        keep(li, "greedy", std::move(g.cover), std::nullopt);
      } catch (const Error& e) {
        note("greedy", lam, e);
      }
    }
  }

  for (std::size_t li = 0; li < lambdas.size(); ++li) {
    const double lam = lambdas[li];
    const double D = policy(lam);
    std::optional<std::size_t> best_m;
    const Witness* best_w = nullptr;
    CoverStats best_stats;
    for (std::size_t wi = 0; wi < witnesses.size(); ++wi) {
      const Witness& w = witnesses[wi];
      if (w.lambda < lam) continue;
      const bool mine =
          std::find(own[li].begin(), own[li].end(), wi) != own[li].end();
      if (w.diameter > D + kTolerance) {
        if (mine) {
          out.notes.push_back(w.method + " lambda=" + format_number(lam) +
                              ": diameter " + format_number(w.diameter) +
                              " exceeds budget " + format_number(D));
        }
        continue;
      }
      // Re-audit from scratch on the points of margin >= lambda.
      if (!lebesgue_at_least(*w.cover, lam, lam)) {
        if (mine) {
          throw Error(ErrorCode::kAuditFailed, "witness fails its own Lambda",
                      w.method + " lambda=" + format_number(lam));
        }
        continue;
      }
      CoverStats st = cover_stats(*w.cover, lam);
      if (st.audited_points == 0) continue;
      if (mine) {
        out.rows.push_back({group->token(), lam, D, st.multiplicity, w.method,
                            w.envelope, st.boundary_margin});
      }
      if (!best_m || st.multiplicity < *best_m) {
        best_m = st.multiplicity;
        best_w = &w;
        best_stats = st;
      }
    }
    if (best_w) {
      out.rows.push_back({group->token(), lam, D, *best_m, "best",
                          best_w->envelope, best_stats.boundary_margin});
    }
  }

  std::vector<const ProfileRow*> best;
  for (const auto& r : out.rows)
    if (r.method == "best") best.push_back(&r);
  for (std::size_t i = 0; i < best.size(); ++i) {
    for (std::size_t j = 0; j < best.size(); ++j) {
      const auto& a = *best[i];
      const auto& b = *best[j];
      const bool lam_order = a.lambda <= b.lambda && a.diam_budget == b.diam_budget &&
                             a.multiplicity > b.multiplicity;
      const bool d_order = a.lambda == b.lambda && a.diam_budget <= b.diam_budget &&
                           a.multiplicity < b.multiplicity;
      if (lam_order || d_order) {
        throw Error(ErrorCode::kAuditFailed, "profile is not monotone",
                    "lambda=" + format_number(a.lambda) + "," +
                        format_number(b.lambda));
      }
    }
  }
  return out;
}

std::vector<GromovRow> gromov_profile(GroupPtr group, std::size_t cap,
                                      const std::vector<double>& lambdas,
                                      std::size_t ball_cap) {
  std::vector<GromovRow> rows;
  if (const auto* z = dynamic_cast<const IntegerLattice*>(group.get())) {
    const int n = z->rank();
    if (cap < static_cast<std::size_t>(n) + 1) {
      throw Error(ErrorCode::kInfeasible, "bricks on Z^n need cap >= n + 1",
                  "cap=" + std::to_string(cap));
    }
    for (double lam : lambdas) {
      const int ilam = static_cast<int>(std::ceil(lam - kTolerance));
      if (lam < 0 || lam != ilam) {
        throw Error(ErrorCode::kInvalidArgument, "integer lambdas only for bricks");
      }
      const int shift = std::max(1, 2 * ilam - 2);
      const int side = (n + 1) * shift;
      auto window = ball_space(group, n * side + ilam + 2, ball_cap);
      Cover c = brick_cover_zl(window, n, ilam, BrickSpacing::kTight);
      const double diam = cover_diameter(c);
      const double bound = 2.0 * n * (n + 1) * std::max(1, ilam);
      const double limit = ilam == 0 ? 0 : (n == 1 ? 4.0 * ilam : bound);
      if (diam > limit + kTolerance) {
        throw Error(ErrorCode::kAuditFailed, "brick diameter is not linear",
                    "diam=" + format_number(diam) + " limit=" + format_number(limit));
      }
      CoverStats st = cover_stats(c, lam);
      rows.push_back({group->token(), lam, cap, diam, limit, st.multiplicity,
                      "brick", st.boundary_margin});
    }
    return rows;
  }
  if (group->token() == "heisenberg") {
    if (cap < 6) {
      throw Error(ErrorCode::kInfeasible, "extension over Z^2 needs cap >= 6",
                  "cap=" + std::to_string(cap));
    }
    for (double lam : lambdas) {
      const int ilam = static_cast<int>(std::ceil(lam - kTolerance));
      if (lam < 0 || lam != ilam) {
        throw Error(ErrorCode::kInvalidArgument, "integer lambdas only");
      }
      auto h = heisenberg_cover(1, ilam, ball_cap);
      const auto& st = h.extension.stats;
      if (st.multiplicity > cap) {
        throw Error(ErrorCode::kAuditFailed, "extension cover exceeds the cap",
                    "m=" + std::to_string(st.multiplicity));
      }
      rows.push_back({group->token(), lam, cap, st.diameter,
                      h.parameters.D + 2 * h.parameters.R, st.multiplicity,
                      "extension", st.boundary_margin});
    }
    return rows;
  }
  throw Error(ErrorCode::kInfeasible, "no construction family for this group",
              group->token());
}

void write_profile_csv(std::ostream& out, const DimensionProfile& profile) {
  out << "group,lambda,diam_budget,multiplicity,method,theoretical_envelope,"
         "boundary_margin\n";
  for (const auto& r : profile.rows) {
    out << r.group << ',' << format_number(r.lambda) << ','
        << format_number(r.diam_budget) << ',' << r.multiplicity << ','
        << r.method << ',' << (r.envelope ? format_number(*r.envelope) : "")
        << ',' << format_number(r.boundary_margin) << '\n';
  }
}

void write_gromov_csv(std::ostream& out, const std::vector<GromovRow>& rows) {
  out << "group,lambda,cap,diameter,bound,multiplicity,method,boundary_margin\n";
  for (const auto& r : rows) {
    out << r.group << ',' << format_number(r.lambda) << ',' << r.cap << ','
        << format_number(r.diameter) << ','
        << (r.bound ? format_number(*r.bound) : "") << ',' << r.multiplicity
        << ',' << r.method << ',' << format_number(r.boundary_margin) << '\n';
  }
}

}  // namespace coarsekit
