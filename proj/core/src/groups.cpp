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
#include <cstdlib>

#include "coarsekit/error.hpp"
#include "coarsekit/group.hpp"

namespace coarsekit {

IntegerLattice::IntegerLattice(int rank)
    : GroupSpec("zn:" + std::to_string(rank)), rank_(rank) {
  if (rank < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative lattice rank");
  }
  std::vector<Element> gens;
  for (int i = 0; i < rank; ++i) {
    Element g(rank, 0);
    g[i] = 1;
    gens.push_back(g);
    g[i] = -1;
    gens.push_back(g);
  }
  set_generators(std::move(gens));
}

Element IntegerLattice::multiply(const Element& a, const Element& b) const {
  Element out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = a[i] + b[i];
  return out;
}

Element IntegerLattice::inverse(const Element& a) const {
  Element out(rank_);
  for (int i = 0; i < rank_; ++i) out[i] = -a[i];
  return out;
}

std::optional<int> IntegerLattice::closed_form_norm(const Element& e) const {
  int sum = 0;
  for (auto v : e) sum += std::abs(v);
  return sum;
}

std::optional<int> IntegerLattice::closed_form_distance(
    const Element& a, const Element& b) const {
  int sum = 0;
  for (int i = 0; i < rank_; ++i) sum += std::abs(a[i] - b[i]);
  return sum;
}

CyclicGroup::CyclicGroup(int order)
    : GroupSpec("cyclic:" + std::to_string(order)), order_(order) {
  if (order < 2) {
    throw Error(ErrorCode::kInvalidArgument, "cyclic group order must be >= 2");
  }
  set_generators({{1}, {order - 1}});
}

Element CyclicGroup::multiply(const Element& a, const Element& b) const {
  return {(a[0] + b[0]) % order_};
}

Element CyclicGroup::inverse(const Element& a) const {
  return {(order_ - a[0]) % order_};
}

std::optional<int> CyclicGroup::closed_form_norm(const Element& e) const {
  return std::min(e[0], order_ - e[0]);
}

std::optional<int> CyclicGroup::closed_form_distance(const Element& a,
                                                     const Element& b) const {
  int d = b[0] - a[0];
  if (d < 0) d += order_;
  return std::min(d, order_ - d);
}

FreeGroup::FreeGroup(int rank)
    : GroupSpec("free:" + std::to_string(rank)), rank_(rank) {
  if (rank < 1) {
    throw Error(ErrorCode::kInvalidArgument, "free group rank must be >= 1");
  }
  std::vector<Element> gens;
  for (int i = 1; i <= rank; ++i) {
    gens.push_back({i});
    gens.push_back({-i});
  }
  set_generators(std::move(gens));
}

std::optional<int> FreeGroup::closed_form_distance(const Element& a,
                                                   const Element& b) const {
  std::size_t common = 0;
  while (common < a.size() && common < b.size() && a[common] == b[common]) {
    ++common;
  }
  return static_cast<int>(a.size() + b.size() - 2 * common);
}

Element FreeGroup::multiply(const Element& a, const Element& b) const {
  std::size_t cancel = 0;
  while (cancel < a.size() && cancel < b.size() &&
         a[a.size() - 1 - cancel] == -b[cancel]) {
    ++cancel;
  }
  Element out;
  out.reserve(a.size() + b.size() - 2 * cancel);
  out.insert(out.end(), a.begin(), a.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(cancel), b.end());
  return out;
}

Element FreeGroup::inverse(const Element& a) const {
  Element out(a.rbegin(), a.rend());
  for (auto& v : out) v = -v;
  return out;
}

std::string FreeGroup::format(const Element& e) const {
  if (e.empty()) return "e";
  std::string out;
  for (auto v : e) {
    const char letter = static_cast<char>('a' + std::abs(v) - 1);
    out += v > 0 ? letter : static_cast<char>(letter - 'a' + 'A');
  }
  return out;
}

HeisenbergGroup::HeisenbergGroup() : GroupSpec("heisenberg") {
  set_generators({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}});
}

Element HeisenbergGroup::multiply(const Element& a, const Element& b) const {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2] + a[0] * b[1]};
}

Element HeisenbergGroup::inverse(const Element& a) const {
  return {-a[0], -a[1], a[0] * a[1] - a[2]};
}

Element HeisenbergGroup::commutator(const GroupSpec& g, const Element& a,
                                    const Element& b) {
  return g.multiply(g.multiply(a, b),
                    g.multiply(g.inverse(a), g.inverse(b)));
}

Element central_retraction(const Element& heisenberg_element) {
  return {0, 0, heisenberg_element[2]};
}

GeneratedSubgroup::GeneratedSubgroup(GroupPtr ambient,
                                     std::vector<Element> generators)
    : GroupSpec(ambient->token() + "|sub"), ambient_(std::move(ambient)) {
  std::vector<Element> symmetric = generators;
  for (const auto& g : generators) symmetric.push_back(ambient_->inverse(g));
  set_generators(std::move(symmetric));
}

}  // namespace coarsekit
