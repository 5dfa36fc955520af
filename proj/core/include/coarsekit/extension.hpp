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
#ifndef COARSEKIT_EXTENSION_HPP_
#define COARSEKIT_EXTENSION_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "coarsekit/constructions.hpp"
#include "coarsekit/cover.hpp"
#include "coarsekit/word_metric.hpp"
#include "coarsekit/wreath.hpp"

namespace coarsekit {

// c0 + c1 t + c2 t^2 + ...
struct Polynomial {
  std::vector<double> coefficients;

  double operator()(double t) const;
  bool nonnegative() const;

  // "c0,c1,..." as printed by to_string().
  static Polynomial parse(std::string_view text);
  std::string to_string() const;
};

// P(lambda) = p2(p3(6 p1(lambda))) + 2 p1(lambda), the diameter bound for
// covers built by extension. Coefficients must be nonnegative.
double gromov_bound_compose(const Polynomial& p1, const Polynomial& p2,
                            const Polynomial& p3, double lambda);

struct ExtensionInput {
  // Ball B_M(e) of G.
  std::shared_ptr<const WordMetricWindow> universe;
  // The conclusions are asserted on B_a(e).
  int audit_radius = 0;
  // Homomorphism G -> H; must be 1-Lipschitz (audited on generators).
  std::function<Element(const Element&)> projection;
  // Cover of a ball window of H with L >= lambda and diameter <= R.
  const Cover* base_cover = nullptr;
  // Cover of a window of the kernel K (elements of G, metric of G) with
  // L >= 6R and diameter <= D.
  const Cover* kernel_cover = nullptr;
  double lambda = 0;
  double R = 0;
  double D = 0;
};

// Measured on the input covers.
struct ExtensionFacts {
  std::size_t base_multiplicity = 0;
  std::size_t kernel_multiplicity = 0;
  double base_lebesgue = 0;
  double base_diameter = 0;
  double kernel_lebesgue = 0;
  double kernel_diameter = 0;
};

struct ExtensionResult {
  // The sets z_U Vbar ∩ pi^-1(U) cut down to B_{a + ceil(lambda)}(e).
  Cover cover;
  std::shared_ptr<const WordMetricWindow> audit_window;
  // Over the points of B_a(e) (margin >= lambda in the audit window).
  CoverStats stats;
  ExtensionFacts facts;
  double max_anchor_norm = 0;
};

// Audits the hypotheses (kPreconditionFailed naming the inequality),
// builds W = z_U Vbar ∩ pi^-1(U) with Vbar = N_R(N^K_{-2R}(V)) and asserts
// Lambda >= lambda, diam <= D + 2R and m <= m(U) m(V) on B_a(e)
// (kAuditFailed). z_U maximizes d(pi(z_U), H \ U); ties go to the smaller
// norm, then to the smaller element. kWindowTooSmall when the universe
// cannot hold z_U Vbar for the audited points.
ExtensionResult extension_cover(const ExtensionInput& input);

// Cover of a window of kernel elements of N wr G by the sets V x z: same
// lamps outside B_r(e), and lamps inside B_r(e) in a common member V of a
// cover of G^{B_r(e)}. That cover is one set for finite cyclic G and a
// brick cover with Lebesgue number lamp_lambda (l1 on the lamp
// coordinates) for G = Z^k. Audits Lambda >= r on points of margin >= r
// and multiplicity <= that of the lamp cover (kAuditFailed).
Cover wreath_kernel_cover(std::shared_ptr<const WordMetricWindow> kernel_window,
                          int r, int lamp_lambda);

struct WreathParameters {
  double R = 0;
  int r = 0;
  double D = 0;
  int universe_radius = 0;
  std::size_t base_asdim = 0;      // n, for N = Z^n
  std::size_t lamp_asdim = 0;      // m: 0 for finite lamps, k for Z^k
  std::size_t ball_r_size = 0;     // |B_r(e)| in N
  std::size_t theoretical_bound = 0;  // (n+1)(m+1)|B_r(e)|
};

struct WreathCoverResult {
  ExtensionResult extension;
  WreathParameters parameters;
};

// Brick cover of N = Z^n (tight spacing, diameter R), r = 6R, kernel cover
// by wreath_kernel_cover, then extension along the head projection.
WreathCoverResult wreath_cover(GroupPtr wreath, int audit_radius, int lambda,
                               std::size_t cap = default_ball_cap());

struct PlaneParameters {
  double R = 0;
  double D = 0;
  int universe_radius = 0;
  int kernel_lambda = 0;
};

struct PlaneCoverResult {
  ExtensionResult extension;
  PlaneParameters parameters;
};

// Z^2 -> Z, (x, y) -> x, with kernel the y axis. U: standard bricks of Z
// with lambda (diameter R). V: standard bricks along the axis with
// kernel_lambda, by default ceil(6R). The universe radius defaults to
// 2(a + lambda) + 4R.
PlaneCoverResult plane_extension_cover(int audit_radius, int lambda,
                                       int kernel_lambda = -1,
                                       int universe_radius = -1,
                                       std::size_t cap = default_ball_cap());

struct HeisenbergParameters {
  double R = 0;
  double D = 0;
  int universe_radius = 0;
  int center_lambda = 0;  // brick parameter on the c coordinate
};

struct HeisenbergCoverResult {
  ExtensionResult extension;
  HeisenbergParameters parameters;
};

// Heisenberg group over Z^2 = H / center: tight bricks of Z^2 (diameter R),
// and on the center bricks in c with parameter 1 + max{|c| : ||z^c|| <= 6R}
// over the universe, so L(V) >= 6R holds in the word metric of G.
HeisenbergCoverResult heisenberg_cover(int audit_radius, int lambda,
                                       std::size_t cap = default_ball_cap());

}  // namespace coarsekit

#endif  // COARSEKIT_EXTENSION_HPP_
