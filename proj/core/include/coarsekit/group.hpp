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
#ifndef COARSEKIT_GROUP_HPP_
#define COARSEKIT_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coarsekit {

// Canonical form of a group element. Two elements are equal iff their
// canonical forms are equal, and lexicographic order on the forms is the
// canonical element order used for every tie-break.
using Element = std::vector<std::int32_t>;

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept;
};

// A finitely generated group given by canonical forms, multiplication,
// inversion and a finite symmetric generating set (unit excluded).
class GroupSpec {
 public:
  virtual ~GroupSpec() = default;

  const std::string& token() const { return token_; }
  const std::vector<Element>& generators() const { return generators_; }

  virtual Element unit() const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element inverse(const Element& a) const = 0;

  // Word norm by formula, when the group has one. Word-metric code uses it
  // in place of a breadth-first table.
  virtual std::optional<int> closed_form_norm(const Element& /*e*/) const {
    return std::nullopt;
  }

  // ||a^-1 b|| by formula, for groups that can skip forming a^-1 b.
  virtual std::optional<int> closed_form_distance(const Element& /*a*/,
                                                  const Element& /*b*/) const {
    return std::nullopt;
  }
  virtual std::string format(const Element& e) const;

  // True when every ball B_r(e) contains a geodesic between any two of its
  // points, so distances inside a ball window can be found by searching
  // the window alone.
  virtual bool convex_balls() const { return false; }

  bool is_unit(const Element& e) const { return e == unit(); }

 protected:
  explicit GroupSpec(std::string token) : token_(std::move(token)) {}

  // Deduplicates, rejects the unit and checks closure under inversion.
  void set_generators(std::vector<Element> generators);

 private:
  std::string token_;
  std::vector<Element> generators_;
};

using GroupPtr = std::shared_ptr<const GroupSpec>;

// Z^n with the standard basis and its negatives; norm is l1.
class IntegerLattice final : public GroupSpec {
 public:
  explicit IntegerLattice(int rank);
  int rank() const { return rank_; }
  Element unit() const override { return Element(rank_, 0); }
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  std::optional<int> closed_form_norm(const Element& e) const override;
  std::optional<int> closed_form_distance(const Element& a,
                                          const Element& b) const override;
  // l1 balls: step first along the coordinates that shrink.
  bool convex_balls() const override { return true; }

 private:
  int rank_;
};

// Z/m with generators {1, -1}.
class CyclicGroup final : public GroupSpec {
 public:
  explicit CyclicGroup(int order);
  int order() const { return order_; }
  Element unit() const override { return {0}; }
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  std::optional<int> closed_form_norm(const Element& e) const override;
  std::optional<int> closed_form_distance(const Element& a,
                                          const Element& b) const override;

 private:
  int order_;
};

// Free group on k letters. Elements are freely reduced words over
// {1..k} (letters) and {-1..-k} (their inverses).
class FreeGroup final : public GroupSpec {
 public:
  explicit FreeGroup(int rank);
  int rank() const { return rank_; }
  Element unit() const override { return {}; }
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;
  std::optional<int> closed_form_norm(const Element& e) const override {
    return static_cast<int>(e.size());
  }
  std::optional<int> closed_form_distance(const Element& a,
                                          const Element& b) const override;
  std::string format(const Element& e) const override;
  // Geodesics in a tree pass through the meeting point of the two words.
  bool convex_balls() const override { return true; }

 private:
  int rank_;
};

// Integer Heisenberg group in Hall coordinates (a, b, c) = x^a y^b z^c with
// (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab'), generated by x = (1,0,0) and
// y = (0,1,0). The center is {(0,0,c)} and z = [x, y] = (0,0,1).
class HeisenbergGroup final : public GroupSpec {
 public:
  HeisenbergGroup();
  Element unit() const override { return {0, 0, 0}; }
  Element multiply(const Element& a, const Element& b) const override;
  Element inverse(const Element& a) const override;

  static Element commutator(const GroupSpec& g, const Element& a,
                            const Element& b);
};

// (a,b,c) -> (0,0,c): the Hall-coordinate projection onto the center.
// Idempotent, and retraction(z g) = z retraction(g) for central z.
Element central_retraction(const Element& heisenberg_element);

// Subgroup of an ambient group generated by the given elements, with its
// own word metric. Multiplication is the ambient one.
class GeneratedSubgroup final : public GroupSpec {
 public:
  GeneratedSubgroup(GroupPtr ambient, std::vector<Element> generators);
  Element unit() const override { return ambient_->unit(); }
  Element multiply(const Element& a, const Element& b) const override {
    return ambient_->multiply(a, b);
  }
  Element inverse(const Element& a) const override {
    return ambient_->inverse(a);
  }
  std::string format(const Element& e) const override {
    return ambient_->format(e);
  }

 private:
  GroupPtr ambient_;
};

// Parses zn:<n>, cyclic:<m>, free:<k>, heisenberg, lamplighter and
// wreath:<N>:<G> (nested tokens allowed). Throws Error(kInvalidArgument).
GroupPtr parse_group(std::string_view token);

}  // namespace coarsekit

#endif  // COARSEKIT_GROUP_HPP_
