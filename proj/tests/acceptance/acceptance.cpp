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


// Acceptance checks, one line per criterion. Exit status is the number of
// failing criteria (capped at 125). argv[1], when given, is the path of the
// command-line tool used by the determinism check.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coarsekit/constructions.hpp"
#include "coarsekit/cover.hpp"
#include "coarsekit/dimension.hpp"
#include "coarsekit/distortion.hpp"
#include "coarsekit/embedding.hpp"
#include "coarsekit/error.hpp"
#include "coarsekit/extension.hpp"
#include "coarsekit/property_a.hpp"
#include "coarsekit/word_metric.hpp"
#include "coarsekit/wreath.hpp"

namespace ck = coarsekit;

namespace {

constexpr double kTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED[" << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const ck::Error& e) {
    o.pass = false;
    o.detail << " error " << ck::to_string(e.code()) << ": " << e.what()
             << " [" << e.witness() << "]";
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " exception: " << e.what();
  }
  const double t =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (t > limit_s) {
    o.pass = false;
    o.detail << " FAILED[time " << t << "s > " << limit_s << "s]";
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %2d (%.2fs):%s\n", o.pass ? "PASS" : "FAIL", id, t,
              o.detail.str().c_str());
  std::fflush(stdout);
}

// Covers of criteria 1 and 2, kept for the Lipschitz audit.
struct NamedCover {
  std::string name;
  ck::Cover cover;
};
std::vector<NamedCover> produced;

void criterion_1(Outcome& o) {
  for (const char* tok : {"zn:1", "zn:2", "free:2"}) {
    auto group = ck::parse_group(tok);
    for (int lam = 1; lam <= 3; ++lam) {
      auto win = ck::ball_space(group, 4 * lam);
      ck::Cover cover = ck::ball_cover(win, lam);
      const auto stats = ck::cover_stats(cover, lam);
      std::size_t envelope = 0;
      for (ck::PointId x : ck::safe_points(*win, lam)) {
        std::size_t count = 0;
        win->visit_ball(x, lam, [&](ck::PointId, double) {
          ++count;
          return true;
        });
        envelope = std::max(envelope, count);
      }
      const bool leb = ck::lebesgue_at_least(cover, lam, lam);
      o.detail << " " << tok << "/l" << lam << ":m=" << stats.multiplicity
               << "<=" << envelope;
      o.require(stats.multiplicity <= envelope,
                std::string(tok) + " multiplicity");
      o.require(leb, std::string(tok) + " lebesgue");
      produced.push_back({std::string(tok) + " ball l=" + std::to_string(lam),
                          std::move(cover)});
    }
  }
}

void criterion_2(Outcome& o) {
  auto group = ck::parse_group("zn:2");
  for (int lam : {1, 2, 4}) {
    const int r = 2 * lam + 1;
    auto win = ck::ball_space(group, 8 * lam);
    const auto fams = ck::brick_families(*win, r);
    ck::Cover cover = ck::families_to_cover(win, fams, r, lam);
    const std::size_t m = ck::multiplicity(cover);
    const bool leb = ck::lebesgue_at_least(cover, lam, lam);
    o.detail << " l" << lam << "(r=" << r << "):m=" << m;
    o.require(m <= 3, "multiplicity l=" + std::to_string(lam));
    o.require(leb, "lebesgue l=" + std::to_string(lam));
    produced.push_back({"zn:2 families l=" + std::to_string(lam), std::move(cover)});
  }
}

void criterion_3(Outcome& o) {
  o.require(produced.size() == 12, "covers from criteria 1-2");
  double worst = 0;
  for (const auto& nc : produced) {
    const auto a = ck::lipschitz_audit(nc.cover);
    // Pairs beyond the scan radius are bounded by sqrt(2)/d <= bound.
    const bool ok = a.pass && a.stride == 1 && a.measured <= a.bound + kTol &&
                    a.unscanned_bound <= a.bound + kTol;
    worst = std::max(worst, a.measured / a.bound);
    o.require(ok, nc.name + " measured=" + std::to_string(a.measured) +
                      " bound=" + std::to_string(a.bound) +
                      " stride=" + std::to_string(a.stride));
  }
  o.detail << " covers=" << produced.size() << " max measured/bound=" << worst;
}

void criterion_4(Outcome& o) {
  struct Setup {
    const char* group;
    int radius;
    bool bricks;
  };
  for (const Setup& s : {Setup{"zn:1", 40, true}, Setup{"zn:2", 12, false}}) {
    auto win = ck::ball_space(ck::parse_group(s.group), s.radius);
    std::vector<std::pair<double, ck::Cover>> covers;
    for (int n = 2; n <= 8; ++n) {
      covers.emplace_back(n, s.bricks ? ck::brick_cover_zl(win, 1, n + 1)
                                      : ck::ball_cover(win, n + 1));
    }
    for (double p : {1.0, 2.0}) {
      const auto fam = ck::family_from_covers(covers, p);
      ck::validate_family(fam);
      const auto rep = ck::variation_report(fam, {1, 2, 4});
      double slack = ck::kInfinity;
      for (std::size_t i = 0; i < rep.levels.size(); ++i) {
        for (std::size_t k = 0; k < rep.Ks.size(); ++k) {
          slack = std::min(slack, rep.bound[i][k] - rep.measured[i][k]);
        }
      }
      o.detail << " " << s.group << "/p" << p << ":slack=" << slack
               << (rep.monotone ? ",mono" : ",NONMONO");
      o.require(slack >= -kTol && rep.stride == 1,
                std::string(s.group) + " bound p=" + std::to_string(p));
      o.require(rep.monotone, std::string(s.group) + " monotone p=" + std::to_string(p));
    }
  }
}

void criterion_5(Outcome& o) {
  struct Window {
    const char* group;
    int radius;
  };
  for (const Window& w : {Window{"zn:1", 40}, Window{"zn:2", 12},
                          Window{"free:2", 6}, Window{"lamplighter", 6}}) {
    auto win = ck::ball_space(ck::parse_group(w.group), w.radius);
    const auto fam = ck::a_infinity_family(win, {1, 2, 3, 4, 5, 6, 7, 8});
    ck::validate_family(fam);
    const auto rep = ck::variation_report(fam, {1, 2, 4});
    double slack = ck::kInfinity;
    for (std::size_t i = 0; i < rep.levels.size(); ++i) {
      for (std::size_t k = 0; k < rep.Ks.size(); ++k) {
        slack = std::min(slack, rep.Ks[k] / rep.levels[i] - rep.measured[i][k]);
      }
    }
    o.detail << " " << w.group << ":slack=" << slack;
    o.require(slack >= -1e-12 && rep.stride == 1, w.group);
  }
}

ck::SparseVector random_unit(std::mt19937_64& rng, double p) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const int k = 1 + static_cast<int>(rng() % 8);
  std::vector<ck::SparseVector::Entry> e;
  std::vector<char> used(32, 0);
  while (static_cast<int>(e.size()) < k) {
    const auto i = rng() % 32;
    if (used[i]) continue;
    used[i] = 1;
    e.emplace_back(i, 1.0 - u(rng));  // in (0, 1]
  }
  std::sort(e.begin(), e.end());
  ck::SparseVector v(std::move(e));
  return v.scaled(1.0 / v.norm(p));
}

void criterion_6(Outcome& o) {
  std::mt19937_64 rng(20260101);
  for (auto [p, m] : {std::pair{1.0, 2.0}, std::pair{2.0, 4.0},
                      std::pair{2.0, 1.0}, std::pair{3.0, 1.0}}) {
    std::vector<ck::SparseVector> vs;
    for (int i = 0; i < 10000; ++i) vs.push_back(random_unit(rng, p));
    double slack = ck::kInfinity;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const auto& a = vs[i];
      const auto& b = vs[(i + 1) % vs.size()];
      slack = std::min(slack, m >= p ? ck::power_inequality_slack(a, b, p, m)
                                     : ck::holder_inequality_slack(a, b, p));
    }
    o.detail << " (" << p << "," << m << "):" << (m >= p ? "power" : "holder")
             << " slack=" << slack;
    o.require(slack >= -kTol, "p=" + std::to_string(p) + " m=" + std::to_string(m));
  }
}

void criterion_7(Outcome& o) {
  auto win = ck::ball_space(ck::parse_group("zn:1"), 60);
  std::vector<double> levels;
  for (int n = 1; n <= 60; ++n) levels.push_back(n);
  const auto fam = ck::tent_family(win, levels, 2);
  const auto base = *win->find({0});
  const auto res = ck::coarse_embedding(fam, base, 5);
  bool within = true;
  for (const auto& b : res.buckets) {
    within = within && b.rho1 <= b.min_norm + kTol && b.max_norm <= b.rho2 + kTol;
  }
  o.detail << " levels=";
  for (double n : res.selected_levels) o.detail << n << ",";
  o.detail << " safe_margin=" << res.safe_margin << " pairs=" << res.pairs_audited;
  o.require(res.pass && within && res.pairs_audited > 0, "rho audit");
  o.require(res.images[base].support_size() == 0, "base image");
}

void criterion_8(Outcome& o) {
  auto g = ck::parse_group("lamplighter");
  const auto& w = dynamic_cast<const ck::WreathProduct&>(*g);
  const auto ball = ck::word_norm_table(g, 6);
  const auto big = ck::word_norm_table(g, 13);
  std::vector<ck::Element> b2;
  for (int v = -2; v <= 2; ++v) b2.push_back({v});
  std::size_t kernel = 0, checks = 0, bad = 0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    const auto& e = ball.element(i);
    if (!w.in_kernel(e)) continue;
    ++kernel;
    for (unsigned mask = 0; mask < (1u << b2.size()); ++mask) {
      std::vector<ck::Element> A;
      for (std::size_t j = 0; j < b2.size(); ++j) {
        if (mask >> j & 1) A.push_back(b2[j]);
      }
      const auto proj = ck::project_pi_A(w, e, A);
      const auto n = big.norm(proj);
      ++checks;
      if (!n || *n > ball.norm_at(i)) ++bad;
    }
  }
  std::size_t delta_bad = 0;
  for (int a = -6; a <= 6; ++a) {
    const auto n = big.norm(w.delta({a}, {1}));
    if (!n || *n < std::abs(a)) ++delta_bad;
  }
  o.detail << " kernel elements=" << kernel << " projections=" << checks
           << " violations=" << bad << " delta violations=" << delta_bad;
  o.require(kernel > 0 && bad == 0, "projection");
  o.require(delta_bad == 0, "delta");
}

void criterion_9(Outcome& o) {
  const auto res = ck::plane_extension_cover(10, 2);
  const auto& e = res.extension;
  const auto& p = res.parameters;
  const auto stats = ck::cover_stats(e.cover, 2);
  const bool leb = ck::lebesgue_at_least(e.cover, 2, 2);
  const std::size_t mm = e.facts.base_multiplicity * e.facts.kernel_multiplicity;
  o.detail << " R=" << p.R << " D=" << p.D << " M=" << p.universe_radius
           << " Lambda=" << stats.lebesgue_pointwise << " diam=" << stats.diameter
           << "<=" << p.D + 2 * p.R << " m=" << stats.multiplicity << "<=" << mm
           << " audited=" << stats.audited_points;
  o.require(leb && stats.lebesgue_pointwise >= 2, "lebesgue");
  o.require(stats.diameter <= p.D + 2 * p.R + kTol && p.R <= 8, "diameter");
  o.require(stats.multiplicity <= mm, "multiplicity");
}

void criterion_10(Outcome& o) {
  const auto res = ck::wreath_cover(ck::parse_group("lamplighter"), 5, 1);
  const auto& e = res.extension;
  const auto& p = res.parameters;
  const auto stats = ck::cover_stats(e.cover, 1);
  const bool leb = ck::lebesgue_at_least(e.cover, 1, 1);
  o.detail << " R=" << p.R << " r=" << p.r << " |B_r|=" << p.ball_r_size
           << " m=" << stats.multiplicity << "<=" << p.theoretical_bound
           << " Lambda=" << stats.lebesgue_pointwise
           << " audited=" << stats.audited_points;
  o.require(p.theoretical_bound == 26, "envelope 2*1*|B_6(e)| = 26");
  o.require(stats.multiplicity <= 26, "multiplicity");
  o.require(leb, "lebesgue");
}

void criterion_11(Outcome& o) {
  auto h = ck::parse_group("heisenberg");
  const int r = 14;
  const auto states = ck::word_norm_table(h, r).size();
  const auto pairs = ck::distortion_profile(
      h, [](const ck::Element& e) { return e[0] == 0 && e[1] == 0; },
      {{0, 0, 1}}, r);
  std::vector<std::pair<double, double>> xy;
  for (const auto& p : pairs) xy.emplace_back(p.inner, p.ambient);
  const double slope = ck::fit_loglog_slope(xy);
  o.detail << " radius=" << r << " states=" << states << " center elements="
           << pairs.size() << " slope=" << slope;
  o.require(slope >= 0.40 && slope <= 0.60, "slope");
}

// Runs both procedures; nullopt on kInfeasible.
std::optional<std::size_t> min_mult(bool oracle, ck::SpacePtr s, double lam,
                                    double D) {
  try {
    return oracle ? ck::oracle_min_multiplicity(s, lam, D).multiplicity
                  : ck::greedy_min_multiplicity(s, lam, D).multiplicity;
  } catch (const ck::Error& e) {
    if (e.code() == ck::ErrorCode::kInfeasible) return std::nullopt;
    throw;
  }
}

void criterion_12(Outcome& o) {
  std::size_t cases = 0, mismatches = 0;
  for (int n = 1; n <= 9; ++n) {
    auto s = ck::DenseMetricSpace::integer_segment(0, n - 1);
    for (double lam : {0.0, 1.0, 2.0}) {
      for (int D = 0; D <= 6; ++D) {
        ++cases;
        if (min_mult(true, s, lam, D) != min_mult(false, s, lam, D)) ++mismatches;
      }
    }
  }
  // Subsets of a 3x3 box of Z^2: greedy may lose, never win.
  std::size_t box_cases = 0, beaten = 0, equal = 0;
  auto box = ck::ball_space(ck::parse_group("zn:2"), 2);
  std::vector<ck::PointId> square;
  for (ck::PointId x = 0; x < box->size(); ++x) {
    const auto& e = box->element(x);
    if (std::abs(e[0]) <= 1 && std::abs(e[1]) <= 1) square.push_back(x);
  }
  for (unsigned mask = 1; mask < (1u << square.size()); ++mask) {
    std::vector<ck::PointId> pts;
    for (std::size_t j = 0; j < square.size(); ++j) {
      if (mask >> j & 1) pts.push_back(square[j]);
    }
    auto sub = ck::DenseMetricSpace::restrict(*box, pts);
    for (double lam : {1.0, 2.0}) {
      for (int D = 2; D <= 4; ++D) {
        ++box_cases;
        const auto a = min_mult(true, sub, lam, D);
        const auto b = min_mult(false, sub, lam, D);
        if (a.has_value() != b.has_value() || (a && *b < *a)) ++beaten;
        if (a == b) ++equal;
      }
    }
  }
  o.detail << " segment cases=" << cases << " mismatches=" << mismatches
           << " box cases=" << box_cases << " equal=" << equal
           << " greedy below oracle=" << beaten;
  o.require(mismatches == 0, "segments");
  o.require(beaten == 0, "never beats");
}

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& cli, const std::string& args) {
  const std::string cmd = cli + " " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  char buf[1 << 14];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, got);
  const int st = pclose(f);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

void criterion_13(Outcome& o, const std::string& cli) {
  o.require(!cli.empty(), "no CLI path given");
  if (cli.empty()) return;
  std::vector<std::string> cmds;
  for (const char* tok : {"zn:1", "zn:2", "free:2"}) {
    for (int lam = 1; lam <= 3; ++lam) {
      cmds.push_back("cover --method ball --group " + std::string(tok) +
                     " --radius " + std::to_string(4 * lam) + " --lambda " +
                     std::to_string(lam));
    }
  }
  for (const char* p : {"1", "2"}) {
    cmds.push_back(std::string("certify-a --group zn:1 --radius 40 --n 2..8 --K 1,2,4 --p ") + p);
    cmds.push_back(std::string("certify-a --group zn:2 --radius 12 --n 2..8 --K 1,2,4 --p ") + p);
  }
  cmds.push_back("cover --method wreath --group lamplighter --radius 5 --lambda 1");
  cmds.push_back("gromov --group zn:1 --cap 2");
  std::size_t identical = 0;
  for (const auto& c : cmds) {
    const auto a = run(cli, c);
    const auto b = run(cli, c);
    const bool same = a.status == 0 && b.status == 0 && !a.out.empty() && a.out == b.out;
    identical += same;
    o.require(same, c);
  }
  o.detail << " commands=" << cmds.size() << " identical=" << identical;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  criterion(1, 10, criterion_1);
  criterion(2, 5, criterion_2);
  criterion(3, 30, criterion_3);
  criterion(4, 120, criterion_4);
  criterion(5, 10, criterion_5);
  criterion(6, 10, criterion_6);
  criterion(7, 60, criterion_7);
  criterion(8, 60, criterion_8);
  criterion(9, 30, criterion_9);
  criterion(10, 120, criterion_10);
  criterion(11, 120, criterion_11);
  criterion(12, 120, criterion_12);
  criterion(13, 600, [&](Outcome& o) { criterion_13(o, cli); });
  std::printf("%d of 13 criteria failed\n", failures);
  return failures > 125 ? 125 : failures;
}
