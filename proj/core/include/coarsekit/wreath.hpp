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
#ifndef COARSEKIT_WREATH_HPP_
#define COARSEKIT_WREATH_HPP_

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coarsekit/group.hpp"

namespace coarsekit {

// Element (f, a) of the restricted wreath product N wr G: a finitely
// supported lamp configuration f : N -> G and a head a in N. The config
// lists exactly the support, sorted by key, with no unit values.
struct WreathElement {
  std::vector<std::pair<Element, Element>> config;
  Element head;

  friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

// Restricted wreath product with base N (acting by shifts) and lamp group G.
//
// Product: (f, a)(g, b) = (f * a.g, ab) with (a.g)(x) = g(a^-1 x).
// Generators: (delta_e^s, e) for s in S_G and (1, t) for t in T_N.
class WreathProduct final : public GroupSpec {
 public:
  WreathProduct(GroupPtr base, GroupPtr lamps, std::string token = {});

  const GroupSpec& base() const { return *base_; }
  const GroupSpec& lamps() const { return *lamps_; }
  const GroupPtr& base_ptr() const { return base_; }
  const GroupPtr& lamps_ptr() const { return lamps_; }

  Element unit() const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  std::string format(const Element& e) const override;

  // Available when N = Z and G has a closed-form norm:
  //   ||(f, h)|| = sum_x ||f(x)||_G + shortest walk 0 -> h visiting supp f.
  std::optional<int> closed_form_norm(const Element& e) const override;
  // Same walk, from head(a) to head(b) over the keys where a and b differ.
  std::optional<int> closed_form_distance(const Element& a,
                                          const Element& b) const override;

  WreathElement decode(const Element& e) const;
  Element encode(const WreathElement& w) const;

  // delta_v^g as an element of the kernel (head = e).
  Element delta(const Element& v, const Element& g) const;

  // Lift of a base element: (1, a).
  Element lift(const Element& a) const;

  // Projection to the base group: (f, a) -> a. A homomorphism, and
  // 1-Lipschitz for the generating sets above.
  Element head(const Element& e) const;

  bool in_kernel(const Element& e) const;

 private:
  GroupPtr base_;
  GroupPtr lamps_;
  bool base_is_integers_ = false;
};

// pi_A: restricts the lamp configuration of a kernel element to keys in A
// (A given as base-group elements). Throws Error(kNotInKernel) when the
// head is not the unit.
Element project_pi_A(const WreathProduct& group, const Element& kernel_element,
                     std::span<const Element> window);

}  // namespace coarsekit

#endif  // COARSEKIT_WREATH_HPP_
