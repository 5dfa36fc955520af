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
#include "coarsekit/sparse_vector.hpp"

#include <algorithm>
#include <cmath>

#include "coarsekit/error.hpp"

namespace coarsekit {

void check_exponent(double p) {
  if (std::isnan(p) || p < 1) {
    throw Error(ErrorCode::kInvalidArgument, "exponent must lie in [1, inf]");
  }
}

SparseVector::SparseVector(std::initializer_list<Entry> entries)
    : SparseVector(std::vector<Entry>(entries)) {}

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (const auto& [index, value] : entries) {
    if (!entries_.empty() && entries_.back().first == index) {
      entries_.back().second += value;
    } else {
      entries_.emplace_back(index, value);
    }
  }
  std::erase_if(entries_, [](const Entry& e) { return e.second == 0.0; });
}

double SparseVector::at(Index i) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), i,
      [](const Entry& e, Index key) { return e.first < key; });
  return (it != entries_.end() && it->first == i) ? it->second : 0.0;
}

double SparseVector::norm(double p) const {
  check_exponent(p);
  if (std::isinf(p)) {
    double best = 0;
    for (const auto& e : entries_) best = std::max(best, std::abs(e.second));
    return best;
  }
  double sum = 0;
  for (const auto& e : entries_) sum += std::pow(std::abs(e.second), p);
  return std::pow(sum, 1.0 / p);
}

bool SparseVector::nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const Entry& e) { return e.second >= 0; });
}

SparseVector SparseVector::scaled(double factor) const {
  std::vector<Entry> out = entries_;
  for (auto& e : out) e.second *= factor;
  return SparseVector(std::move(out));
}

SparseVector SparseVector::powered(double exponent) const {
  std::vector<Entry> out = entries_;
  for (auto& e : out) e.second = std::pow(std::abs(e.second), exponent);
  return SparseVector(std::move(out));
}

SparseVector SparseVector::minus(const SparseVector& other) const {
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, -b->second);
      ++b;
    } else {
      out.emplace_back(a->first, a->second - b->second);
      ++a;
      ++b;
    }
  }
  return SparseVector(std::move(out));
}

namespace {

// Calls f(|u_i - v_i|) for every index in the union of supports.
template <typename F>
void for_each_difference(const SparseVector& u, const SparseVector& v, F&& f) {
  const auto& x = u.entries();
  const auto& y = v.entries();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      f(std::abs(x[i++].second));
    } else if (i == x.size() || y[j].first < x[i].first) {
      f(std::abs(y[j++].second));
    } else {
      f(std::abs(x[i++].second - y[j++].second));
    }
  }
}

}  // namespace

double lp_distance(const SparseVector& u, const SparseVector& v, double p) {
  check_exponent(p);
  if (std::isinf(p)) {
    double best = 0;
    for_each_difference(u, v, [&](double d) { best = std::max(best, d); });
    return best;
  }
  return std::pow(lp_distance_pow(u, v, p), 1.0 / p);
}

double lp_distance_pow(const SparseVector& u, const SparseVector& v, double p) {
  check_exponent(p);
  if (std::isinf(p)) {
    throw Error(ErrorCode::kInvalidArgument, "p-th power needs finite p");
  }
  double sum = 0;
  if (p == 1) {
    for_each_difference(u, v, [&](double d) { sum += d; });
  } else if (p == 2) {
    for_each_difference(u, v, [&](double d) { sum += d * d; });
  } else {
    for_each_difference(u, v, [&](double d) { sum += std::pow(d, p); });
  }
  return sum;
}

}  // namespace coarsekit
