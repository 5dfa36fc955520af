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
#include "coarsekit/wreath.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "coarsekit/error.hpp"

namespace coarsekit {

namespace {

using Config = std::map<Element, Element>;

Config to_map(const WreathElement& w) {
  return Config(w.config.begin(), w.config.end());
}

}  // namespace

WreathProduct::WreathProduct(GroupPtr base, GroupPtr lamps, std::string token)
    : GroupSpec(token.empty()
                    ? "wreath:" + base->token() + ":" + lamps->token()
                    : std::move(token)),
      base_(std::move(base)),
      lamps_(std::move(lamps)) {
  // The closed form needs N = Z and a closed-form norm on the lamps.
  base_is_integers_ = base_->token() == "zn:1" &&
                      lamps_->closed_form_norm(lamps_->unit()).has_value();
  std::vector<Element> gens;
  for (const auto& t : base_->generators()) gens.push_back(lift(t));
  for (const auto& s : lamps_->generators()) {
    gens.push_back(delta(base_->unit(), s));
  }
  set_generators(std::move(gens));
}

WreathElement WreathProduct::decode(const Element& e) const {
  WreathElement w;
  std::size_t pos = 0;
  auto take = [&](Element& out) {
    const auto len = static_cast<std::size_t>(e.at(pos++));
    out.assign(e.begin() + static_cast<std::ptrdiff_t>(pos),
               e.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  };
  take(w.head);
  const auto pairs = static_cast<std::size_t>(e.at(pos++));
  w.config.resize(pairs);
  for (auto& [key, value] : w.config) {
    take(key);
    take(value);
  }
  return w;
}

Element WreathProduct::encode(const WreathElement& w) const {
  Element out;
  auto put = [&](const Element& part) {
    out.push_back(static_cast<std::int32_t>(part.size()));
    out.insert(out.end(), part.begin(), part.end());
  };
  put(w.head);
  out.push_back(static_cast<std::int32_t>(w.config.size()));
  for (const auto& [key, value] : w.config) {
    put(key);
    put(value);
  }
  return out;
}

Element WreathProduct::unit() const {
  return encode(WreathElement{{}, base_->unit()});
}

// (f, a)(g, b) = (f * a.g, ab) with the left shift (a.g)(x) = g(a^-1 x):
// the lamp g stores at key x moves to key a x.
Element WreathProduct::multiply(const Element& lhs, const Element& rhs) const {
  const WreathElement f = decode(lhs);
  const WreathElement g = decode(rhs);
  Config config = to_map(f);
  for (const auto& [key, value] : g.config) {
    Element moved = base_->multiply(f.head, key);
    auto it = config.find(moved);
    if (it == config.end()) {
      config.emplace(std::move(moved), value);
      continue;
    }
    it->second = lamps_->multiply(it->second, value);
    if (lamps_->is_unit(it->second)) config.erase(it);
  }
  WreathElement out;
  out.config.assign(config.begin(), config.end());
  out.head = base_->multiply(f.head, g.head);
  return encode(out);
}

Element WreathProduct::inverse(const Element& e) const {
  const WreathElement f = decode(e);
  const Element back = base_->inverse(f.head);
  Config config;
  for (const auto& [key, value] : f.config) {
    config.emplace(base_->multiply(back, key), lamps_->inverse(value));
  }
  WreathElement out;
  out.config.assign(config.begin(), config.end());
  out.head = back;
  return encode(out);
}

std::string WreathProduct::format(const Element& e) const {
  const WreathElement w = decode(e);
  std::string out = "{";
  bool first = true;
  for (const auto& [key, value] : w.config) {
    if (!first) out += ",";
    first = false;
    out += base_->format(key) + "->" + lamps_->format(value);
  }
  return out + "}@" + base_->format(w.head);
}

std::optional<int> WreathProduct::closed_form_norm(const Element& e) const {
  if (!base_is_integers_) return std::nullopt;
  const WreathElement w = decode(e);
  int lamp_cost = 0;
  const int h = w.head[0];
  int lo = std::min(0, h);
  int hi = std::max(0, h);
  for (const auto& [key, value] : w.config) {
    const auto norm = lamps_->closed_form_norm(value);
    if (!norm) return std::nullopt;
    lamp_cost += *norm;
    lo = std::min(lo, key[0]);
    hi = std::max(hi, key[0]);
  }
  // Walk from 0 over [lo, hi] and stop at h, turning at one end first.
  const int left_first = -lo + (hi - lo) + (hi - h);
  const int right_first = hi + (hi - lo) + (h - lo);
  return lamp_cost + std::min(left_first, right_first);
}

std::optional<int> WreathProduct::closed_form_distance(const Element& a,
                                                       const Element& b) const {
  if (!base_is_integers_) return std::nullopt;
  // Both encodings are [1, head, pairs, (1, key, len, value...)...] with
  // keys increasing.
  const std::size_t na = static_cast<std::size_t>(a[2]);
  const std::size_t nb = static_cast<std::size_t>(b[2]);
  std::size_t pa = 3, pb = 3, ia = 0, ib = 0;
  const Element none = lamps_->unit();
  Element va, vb;
  int lamp_cost = 0;
  const int ha = a[1], hb = b[1];
  int lo = std::min(ha, hb), hi = std::max(ha, hb);
  auto value_at = [](const Element& e, std::size_t pos, Element& out) {
    const auto len = static_cast<std::size_t>(e[pos + 2]);
    out.assign(e.begin() + static_cast<std::ptrdiff_t>(pos + 3),
               e.begin() + static_cast<std::ptrdiff_t>(pos + 3 + len));
    return pos + 3 + len;
  };
  while (ia < na || ib < nb) {
    const bool take_a = ia < na && (ib >= nb || a[pa + 1] <= b[pb + 1]);
    const bool take_b = ib < nb && (ia >= na || b[pb + 1] <= a[pa + 1]);
    const int key = take_a ? a[pa + 1] : b[pb + 1];
    if (take_a) {
      pa = value_at(a, pa, va);
      ++ia;
    } else {
      va = none;
    }
    if (take_b) {
      pb = value_at(b, pb, vb);
      ++ib;
    } else {
      vb = none;
    }
    if (va == vb) continue;
    auto d = lamps_->closed_form_distance(va, vb);
    if (!d) d = lamps_->closed_form_norm(lamps_->multiply(lamps_->inverse(va), vb));
    if (!d) return std::nullopt;
    lamp_cost += *d;
    lo = std::min(lo, key);
    hi = std::max(hi, key);
  }
  const int left_first = (ha - lo) + (hi - lo) + (hi - hb);
  const int right_first = (hi - ha) + (hi - lo) + (hb - lo);
  return lamp_cost + std::min(left_first, right_first);
}

Element WreathProduct::delta(const Element& v, const Element& g) const {
  WreathElement w{{}, base_->unit()};
  if (!lamps_->is_unit(g)) w.config.emplace_back(v, g);
  return encode(w);
}

Element WreathProduct::lift(const Element& a) const {
  return encode(WreathElement{{}, a});
}

Element WreathProduct::head(const Element& e) const {
  const auto len = static_cast<std::size_t>(e.at(0));
  return Element(e.begin() + 1, e.begin() + 1 + static_cast<std::ptrdiff_t>(len));
}

bool WreathProduct::in_kernel(const Element& e) const {
  return base_->is_unit(head(e));
}

Element project_pi_A(const WreathProduct& group, const Element& kernel_element,
                     std::span<const Element> window) {
  if (!group.in_kernel(kernel_element)) {
    throw Error(ErrorCode::kNotInKernel, "projection needs a kernel element",
                group.format(kernel_element));
  }
  WreathElement w = group.decode(kernel_element);
  std::erase_if(w.config, [&](const auto& entry) {
    return std::find(window.begin(), window.end(), entry.first) ==
           window.end();
  });
  return group.encode(w);
}

}  // namespace coarsekit
