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
#include "coarsekit/extension.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_map>

#include "coarsekit/error.hpp"

namespace coarsekit {

namespace {

std::string num(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::shared_ptr<const WordMetricWindow> as_window(const Cover& cover,
                                                  const char* what) {
  auto w = std::dynamic_pointer_cast<const WordMetricWindow>(cover.space_ptr());
  if (!w) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " cover must live on a group window");
  }
  return w;
}

}  // namespace

double Polynomial::operator()(double t) const {
  double v = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    v = v * t + *it;
  }
  return v;
}

bool Polynomial::nonnegative() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](double c) { return c >= 0; });
}

Polynomial Polynomial::parse(std::string_view text) {
  Polynomial p;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto piece = text.substr(0, comma);
    double c = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), c);
    if (ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad polynomial coefficient '" + std::string(piece) + "'");
    }
    p.coefficients.push_back(c);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (p.coefficients.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty polynomial");
  }
  return p;
}

std::string Polynomial::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) s += ',';
    s += num(coefficients[i]);
  }
  return s;
}

double gromov_bound_compose(const Polynomial& p1, const Polynomial& p2,
                            const Polynomial& p3, double lambda) {
  if (!p1.nonnegative() || !p2.nonnegative() || !p3.nonnegative()) {
    throw Error(ErrorCode::kInvalidArgument,
                "polynomials need nonnegative coefficients");
  }
  if (lambda < 0) throw Error(ErrorCode::kInvalidArgument, "negative lambda");
  double a = p1(lambda);
  return p2(p3(6 * a)) + 2 * a;
}

ExtensionResult extension_cover(const ExtensionInput& in) {
  if (!in.universe || !in.base_cover || !in.kernel_cover || !in.projection) {
    throw Error(ErrorCode::kInvalidArgument, "incomplete extension input");
  }
  const WordMetricWindow& uni = *in.universe;
  const GroupSpec& g = uni.group();
  auto hwin = as_window(*in.base_cover, "base");
  auto kwin = as_window(*in.kernel_cover, "kernel");
  const GroupSpec& h = hwin->group();
  if (kwin->group().token() != g.token()) {
    throw Error(ErrorCode::kInvalidArgument,
                "kernel window is not in the group of the universe");
  }
  const int M = uni.enclosing_radius();
  const int lam_ceil = static_cast<int>(std::ceil(in.lambda - kTolerance));
  const int a2 = in.audit_radius + lam_ceil;
  if (in.audit_radius < 0 || in.lambda < 0 || in.R < 0 || in.D < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative extension parameter");
  }
  if (a2 > M) {
    throw Error(ErrorCode::kWindowTooSmall, "universe smaller than audit ball",
                "M=" + std::to_string(M) + " a+lambda=" + std::to_string(a2));
  }
  if (hwin->enclosing_radius() < M) {
    throw Error(ErrorCode::kWindowTooSmall,
                "quotient window smaller than the universe",
                "H radius=" + std::to_string(hwin->enclosing_radius()) +
                    " M=" + std::to_string(M));
  }

  // Hypotheses.
  for (const auto& s : g.generators()) {
    int ns = hwin->norm()(in.projection(s));
    if (ns > 1) {
      throw Error(ErrorCode::kPreconditionFailed, "projection not 1-Lipschitz",
                  "||pi(" + g.format(s) + ")||=" + std::to_string(ns) + " > 1");
    }
  }
  const std::size_t n = uni.size();
  std::vector<Element> proj(n);
  std::vector<std::uint32_t> proj_id(n);
  for (PointId p = 0; p < n; ++p) {
    proj[p] = in.projection(uni.element(p));
    auto id = hwin->find(proj[p]);
    if (!id) {
      throw Error(ErrorCode::kWindowTooSmall, "projection leaves quotient window",
                  uni.label(p));
    }
    proj_id[p] = *id;
  }
  {
    const std::size_t sample = std::min<std::size_t>(n, 2000);
    for (PointId p = 0; p < sample; ++p) {
      for (const auto& s : g.generators()) {
        Element lhs = in.projection(g.multiply(uni.element(p), s));
        Element rhs = h.multiply(proj[p], in.projection(s));
        if (lhs != rhs) {
          throw Error(ErrorCode::kPreconditionFailed,
                      "projection is not a homomorphism",
                      "pi(x s) != pi(x) pi(s) at x=" + uni.label(p) +
                          " s=" + g.format(s));
        }
      }
    }
  }
  std::string witness;
  if (!lebesgue_at_least(*in.base_cover, in.lambda, in.lambda, &witness)) {
    throw Error(ErrorCode::kPreconditionFailed, "L(U) >= lambda fails",
                "x=" + witness + " lambda=" + num(in.lambda));
  }
  ExtensionFacts f;
  f.base_diameter = cover_diameter(*in.base_cover);
  if (f.base_diameter > in.R + kTolerance) {
    throw Error(ErrorCode::kPreconditionFailed, "diam(U) <= R fails",
                "diam=" + num(f.base_diameter) + " R=" + num(in.R));
  }
  const double six_r = 6 * in.R;
  if (!lebesgue_at_least(*in.kernel_cover, six_r, six_r, &witness)) {
    throw Error(ErrorCode::kPreconditionFailed, "L(V) >= 6R fails",
                "x=" + witness + " 6R=" + num(six_r));
  }
  f.kernel_diameter = cover_diameter(*in.kernel_cover);
  if (f.kernel_diameter > in.D + kTolerance) {
    throw Error(ErrorCode::kPreconditionFailed, "diam(V) <= D fails",
                "diam=" + num(f.kernel_diameter) + " D=" + num(in.D));
  }
  f.base_multiplicity = multiplicity(*in.base_cover);
  f.kernel_multiplicity = multiplicity(*in.kernel_cover);
  f.base_lebesgue = pointwise_lebesgue(*in.base_cover, in.lambda);
  f.kernel_lebesgue = pointwise_lebesgue(*in.kernel_cover, six_r);

  // Kernel points as universe points.
  std::vector<std::int64_t> k_to_u(kwin->size(), -1);
  for (PointId q = 0; q < kwin->size(); ++q) {
    if (!h.is_unit(in.projection(kwin->element(q)))) {
      throw Error(ErrorCode::kPreconditionFailed, "kernel window leaves ker pi",
                  kwin->label(q));
    }
    if (auto u = uni.find(kwin->element(q))) k_to_u[q] = *u;
  }

  // Vbar_j = N_R(N_{-2R}(V_j)), bucketed by projection.
  const std::size_t nv = in.kernel_cover->size();
  std::vector<std::unordered_map<std::uint32_t, std::vector<PointId>>> vbar(nv);
  for (std::size_t j = 0; j < nv; ++j) {
    PointSet core = inner_neighborhood(*kwin, in.kernel_cover->set(j), 2 * in.R);
    PointSet core_u;
    for (PointId q : core) {
      if (k_to_u[q] >= 0) core_u.push_back(static_cast<PointId>(k_to_u[q]));
    }
    std::sort(core_u.begin(), core_u.end());
    for (PointId p : neighborhood(uni, core_u, in.R)) {
      vbar[j][proj_id[p]].push_back(p);
    }
  }

  auto shorter = [&](PointId x, PointId y) {
    if (uni.element_norm(x) != uni.element_norm(y)) {
      return uni.element_norm(x) < uni.element_norm(y);
    }
    return uni.element(x) < uni.element(y);
  };
  // Cheapest preimage of each quotient point.
  constexpr std::uint32_t kNone = ~0u;
  std::vector<std::uint32_t> best_pre(hwin->size(), kNone);
  for (PointId p = 0; p < n; ++p) {
    auto& b = best_pre[proj_id[p]];
    if (b == kNone || shorter(p, b)) b = p;
  }

  auto audit_win = WordMetricWindow::ball(uni.norm_ptr(), a2);
  const std::size_t na = audit_win->size();
  std::vector<char> needed(hwin->size(), 0);
  for (PointId p = 0; p < n; ++p) {
    if (uni.element_norm(p) <= a2) needed[proj_id[p]] = 1;
  }

  std::vector<PointSet> sets;
  double max_anchor = 0;
  for (std::size_t i = 0; i < in.base_cover->size(); ++i) {
    auto u_set = in.base_cover->set(i);
    if (std::none_of(u_set.begin(), u_set.end(),
                     [&](PointId y) { return needed[y]; })) {
      continue;
    }
    // z_U: far from H \ U, then short, then first in element order.
    std::int64_t z = -1;
    double z_depth = -1;
    for (PointId y : u_set) {
      if (best_pre[y] == kNone) continue;
      double depth = distance_to_complement(*hwin, y, u_set);
      PointId cand = best_pre[y];
      bool better = z < 0 || depth > z_depth + kTolerance;
      if (!better && std::abs(depth - z_depth) <= kTolerance) {
        better = shorter(cand, static_cast<PointId>(z));
      }
      if (better) {
        z = cand;
        z_depth = depth;
      }
    }
    if (z < 0) continue;
    const Element& ze = uni.element(static_cast<PointId>(z));
    const double zn = uni.element_norm(static_cast<PointId>(z));
    max_anchor = std::max(max_anchor, zn);
    if (zn + a2 + 3 * in.R > M + kTolerance) {
      throw Error(ErrorCode::kWindowTooSmall, "z_U Vbar escapes the universe",
                  "||z_U||=" + num(zn) + " a+lambda=" + std::to_string(a2) +
                      " 3R=" + num(3 * in.R) + " M=" + std::to_string(M));
    }
    const Element zh_inv = h.inverse(proj[static_cast<PointId>(z)]);
    for (std::size_t j = 0; j < nv; ++j) {
      PointSet w;
      for (PointId y : u_set) {
        auto t = hwin->find(h.multiply(zh_inv, hwin->element(y)));
        if (!t) continue;
        auto bucket = vbar[j].find(*t);
        if (bucket == vbar[j].end()) continue;
        for (PointId gp : bucket->second) {
          auto x = audit_win->find(g.multiply(ze, uni.element(gp)));
          if (x) w.push_back(*x);
        }
      }
      if (w.empty()) continue;
      std::sort(w.begin(), w.end());
      w.erase(std::unique(w.begin(), w.end()), w.end());
      sets.push_back(std::move(w));
    }
  }
  {
    std::vector<char> covered(na, 0);
    for (const auto& s : sets)
      for (PointId x : s) covered[x] = 1;
    for (PointId x = 0; x < na; ++x) {
      if (!covered[x]) {
        throw Error(ErrorCode::kWindowTooSmall, "audit point left uncovered",
                    audit_win->label(x));
      }
    }
  }
  ExtensionResult out{Cover(audit_win, std::move(sets)), audit_win, {}, f,
                      max_anchor};
  out.stats = cover_stats(out.cover, in.lambda);

  // The three conclusions, asserted.
  if (!lebesgue_at_least(out.cover, in.lambda, in.lambda, &witness)) {
    throw Error(ErrorCode::kAuditFailed, "Lambda(W) >= lambda fails",
                "x=" + witness);
  }
  if (out.stats.diameter > in.D + 2 * in.R + kTolerance) {
    throw Error(ErrorCode::kAuditFailed, "diam(W) <= D + 2R fails",
                "diam=" + num(out.stats.diameter) +
                    " D+2R=" + num(in.D + 2 * in.R));
  }
  const std::size_t mm =
      out.facts.base_multiplicity * out.facts.kernel_multiplicity;
  if (out.stats.multiplicity > mm) {
    throw Error(ErrorCode::kAuditFailed, "m(W) <= m(U) m(V) fails",
                "m=" + std::to_string(out.stats.multiplicity) +
                    " m(U)m(V)=" + std::to_string(mm));
  }
  return out;
}

Cover wreath_kernel_cover(std::shared_ptr<const WordMetricWindow> kwin, int r,
                          int lamp_lambda) {
  const auto* wr = dynamic_cast<const WreathProduct*>(&kwin->group());
  if (!wr) throw Error(ErrorCode::kInvalidArgument, "not a wreath product");
  if (r < 0 || lamp_lambda < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative radius");
  }
  const auto* lamp_lattice = dynamic_cast<const IntegerLattice*>(&wr->lamps());
  const bool finite = dynamic_cast<const CyclicGroup*>(&wr->lamps()) != nullptr;
  if (!finite && !lamp_lattice) {
    throw Error(ErrorCode::kInvalidArgument,
                "lamp group must be cyclic:<m> or zn:<k>", wr->lamps().token());
  }
  WordNorm base_norm(wr->base_ptr());
  NormTable inside_table = word_norm_table(wr->base_ptr(), r);
  const std::size_t nin = inside_table.size();
  const std::size_t k = lamp_lattice ? lamp_lattice->rank() : 0;

  const std::size_t n = kwin->size();
  std::map<std::vector<std::pair<Element, Element>>, std::uint32_t> classes;
  std::vector<std::uint32_t> cls(n);
  std::vector<std::vector<std::int64_t>> coords(n);
  for (PointId p = 0; p < n; ++p) {
    WreathElement w = wr->decode(kwin->element(p));
    if (!wr->base().is_unit(w.head)) {
      throw Error(ErrorCode::kNotInKernel, "kernel window element off the kernel",
                  kwin->label(p));
    }
    std::vector<std::pair<Element, Element>> outside;
    if (k) coords[p].assign(nin * k, 0);
    for (auto& [key, val] : w.config) {
      if (base_norm(key) > r) {
        outside.emplace_back(key, val);
      } else if (k) {
        std::size_t slot = *inside_table.index_of(key);
        for (std::size_t c = 0; c < k; ++c) coords[p][slot * k + c] = val[c];
      }
    }
    auto [it, fresh] =
        classes.emplace(std::move(outside), static_cast<std::uint32_t>(classes.size()));
    cls[p] = it->second;
  }

  std::vector<PointSet> lamp_sets;
  if (k) {
    lamp_sets = brick_sets(coords, lamp_lambda, BrickSpacing::kStandard);
  } else {
    PointSet all(n);
    for (PointId p = 0; p < n; ++p) all[p] = p;
    lamp_sets.push_back(std::move(all));
  }
  std::vector<PointSet> sets;
  std::map<std::uint32_t, PointSet> split;
  for (const auto& v : lamp_sets) {
    split.clear();
    for (PointId p : v) split[cls[p]].push_back(p);
    for (auto& [c, s] : split) sets.push_back(std::move(s));
  }
  std::size_t lamp_m = 1;
  if (k) {
    std::vector<std::uint32_t> count(n, 0);
    for (const auto& v : lamp_sets)
      for (PointId p : v) ++count[p];
    lamp_m = *std::max_element(count.begin(), count.end());
  }
  Cover cover(kwin, std::move(sets));
  std::string witness;
  if (!lebesgue_at_least(cover, r, r, &witness)) {
    throw Error(ErrorCode::kAuditFailed, "kernel cover Lambda >= r fails",
                "x=" + witness + " r=" + std::to_string(r));
  }
  std::size_t m = multiplicity(cover);
  if (m > lamp_m) {
    throw Error(ErrorCode::kAuditFailed, "kernel cover multiplicity exceeds m(V)",
                "m=" + std::to_string(m) + " m(V)=" + std::to_string(lamp_m));
  }
  return cover;
}

WreathCoverResult wreath_cover(GroupPtr group, int a, int lambda,
                               std::size_t cap) {
  const auto* wr = dynamic_cast<const WreathProduct*>(group.get());
  if (!wr) throw Error(ErrorCode::kInvalidArgument, "not a wreath product");
  const auto* base_lattice = dynamic_cast<const IntegerLattice*>(&wr->base());
  if (!base_lattice) {
    throw Error(ErrorCode::kInvalidArgument, "base group must be zn:<n>",
                wr->base().token());
  }
  if (a < 0 || lambda < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative radius or lambda");
  }
  WreathParameters res;
  res.base_asdim = base_lattice->rank();
  if (const auto* l = dynamic_cast<const IntegerLattice*>(&wr->lamps())) {
    res.lamp_asdim = l->rank();
  }

  const int a2 = a + lambda;
  // R is measured on a small window first, since M depends on it.
  auto probe = WordMetricWindow::ball(
      std::make_shared<const WordNorm>(wr->base_ptr(), cap), 4 * lambda + 4);
  res.R = cover_diameter(brick_cover_zl(probe, base_lattice->rank(), lambda,
                                        BrickSpacing::kTight));
  const int R = static_cast<int>(std::ceil(res.R - kTolerance));
  res.r = 6 * R;
  const int M = 2 * a2 + 4 * R;
  res.universe_radius = M;

  auto hwin = WordMetricWindow::ball(
      std::make_shared<const WordNorm>(wr->base_ptr(), cap), M);
  Cover base = brick_cover_zl(hwin, base_lattice->rank(), lambda,
                              BrickSpacing::kTight);
  double base_diam = cover_diameter(base);
  if (base_diam > res.R + kTolerance) {
    throw Error(ErrorCode::kAuditFailed, "brick diameter grew with the window",
                num(base_diam));
  }

  auto gnorm = std::make_shared<const WordNorm>(group, cap);
  auto uni = WordMetricWindow::ball(gnorm, M);
  std::vector<Element> kernel;
  for (const auto& e : uni->elements()) {
    if (wr->in_kernel(e)) kernel.push_back(e);
  }
  auto kwin = WordMetricWindow::from_elements(gnorm, std::move(kernel), M);
  Cover kcover = wreath_kernel_cover(kwin, res.r, res.r);
  res.D = cover_diameter(kcover);
  res.ball_r_size = word_norm_table(wr->base_ptr(), res.r).size();
  res.theoretical_bound =
      (res.base_asdim + 1) * (res.lamp_asdim + 1) * res.ball_r_size;

  ExtensionInput in;
  in.universe = uni;
  in.audit_radius = a;
  in.projection = [wr](const Element& e) { return wr->head(e); };
  in.base_cover = &base;
  in.kernel_cover = &kcover;
  in.lambda = lambda;
  in.R = res.R;
  in.D = res.D;
  return {extension_cover(in), res};
}

PlaneCoverResult plane_extension_cover(int a, int lambda, int kernel_lambda,
                                       int universe_radius, std::size_t cap) {
  if (a < 0 || lambda < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative radius or lambda");
  }
  GroupPtr z1 = parse_group("zn:1");
  GroupPtr z2 = parse_group("zn:2");
  auto hnorm = std::make_shared<const WordNorm>(z1, cap);
  PlaneParameters res;
  res.R = cover_diameter(brick_cover_zl(WordMetricWindow::ball(hnorm, 4 * lambda + 4),
                                        1, lambda));
  const int R = static_cast<int>(std::ceil(res.R - kTolerance));
  res.kernel_lambda = kernel_lambda >= 0 ? kernel_lambda : 6 * R;
  res.universe_radius =
      universe_radius >= 0 ? universe_radius : 2 * (a + lambda) + 4 * R;
  const int M = res.universe_radius;

  auto hwin = WordMetricWindow::ball(hnorm, M);
  Cover base = brick_cover_zl(hwin, 1, lambda);
  auto gnorm = std::make_shared<const WordNorm>(z2, cap);
  auto uni = WordMetricWindow::ball(gnorm, M);
  std::vector<Element> axis;
  for (int y = -M; y <= M; ++y) axis.push_back({0, y});
  auto kwin = WordMetricWindow::from_elements(gnorm, std::move(axis), M);
  std::vector<std::vector<std::int64_t>> coords;
  for (const auto& e : kwin->elements()) coords.push_back({e[1]});
  Cover kcover(kwin, brick_sets(coords, res.kernel_lambda));
  res.D = cover_diameter(kcover);

  ExtensionInput in;
  in.universe = uni;
  in.audit_radius = a;
  in.projection = [](const Element& e) { return Element{e[0]}; };
  in.base_cover = &base;
  in.kernel_cover = &kcover;
  in.lambda = lambda;
  in.R = res.R;
  in.D = res.D;
  return {extension_cover(in), res};
}

HeisenbergCoverResult heisenberg_cover(int a, int lambda, std::size_t cap) {
  if (a < 0 || lambda < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative radius or lambda");
  }
  GroupPtr g = parse_group("heisenberg");
  GroupPtr z2 = parse_group("zn:2");
  auto hnorm = std::make_shared<const WordNorm>(z2, cap);
  auto probe = WordMetricWindow::ball(hnorm, 6 * lambda + 6);
  HeisenbergParameters res;
  res.R = cover_diameter(brick_cover_zl(probe, 2, lambda, BrickSpacing::kTight));
  const int R = static_cast<int>(std::ceil(res.R - kTolerance));
  const int M = 2 * (a + lambda) + 4 * R;
  res.universe_radius = M;

  auto hwin = WordMetricWindow::ball(hnorm, M);
  Cover base = brick_cover_zl(hwin, 2, lambda, BrickSpacing::kTight);
  auto gnorm = std::make_shared<const WordNorm>(g, cap);
  auto uni = WordMetricWindow::ball(gnorm, M);
  std::vector<Element> center;
  int reach = 0;
  for (PointId p = 0; p < uni->size(); ++p) {
    const Element& e = uni->element(p);
    if (e[0] != 0 || e[1] != 0) continue;
    center.push_back(e);
    if (uni->element_norm(p) <= 6 * R) reach = std::max(reach, std::abs(e[2]));
  }
  res.center_lambda = reach + 1;
  auto kwin = WordMetricWindow::from_elements(gnorm, std::move(center), M);
  std::vector<std::vector<std::int64_t>> coords;
  for (const auto& e : kwin->elements()) coords.push_back({e[2]});
  Cover kcover(kwin, brick_sets(coords, res.center_lambda));
  res.D = cover_diameter(kcover);

  ExtensionInput in;
  in.universe = uni;
  in.audit_radius = a;
  in.projection = [](const Element& e) { return Element{e[0], e[1]}; };
  in.base_cover = &base;
  in.kernel_cover = &kcover;
  in.lambda = lambda;
  in.R = res.R;
  in.D = res.D;
  return {extension_cover(in), res};
}

}  // namespace coarsekit
