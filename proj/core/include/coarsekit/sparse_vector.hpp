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
#ifndef COARSEKIT_SPARSE_VECTOR_HPP_
#define COARSEKIT_SPARSE_VECTOR_HPP_

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace coarsekit {

// Exponents live in [1, +inf]; +inf selects the sup-norm.
void check_exponent(double p);

// Finitely supported real function on a countable index set. Entries are
// kept sorted by index and zero values are never stored.
class SparseVector {
 public:
  using Index = std::uint64_t;
  using Entry = std::pair<Index, double>;

  SparseVector() = default;
  SparseVector(std::initializer_list<Entry> entries);
  explicit SparseVector(std::vector<Entry> entries);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  double at(Index i) const;

  double norm(double p) const;

  // Every value >= 0.
  bool nonnegative() const;

  SparseVector scaled(double factor) const;

  // Entrywise |v_i|^exponent.
  SparseVector powered(double exponent) const;

  // this - other.
  SparseVector minus(const SparseVector& other) const;

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

// ||u - v||_p over the union of supports.
double lp_distance(const SparseVector& u, const SparseVector& v, double p);

// ||u - v||_p^p without the final root; p finite.
double lp_distance_pow(const SparseVector& u, const SparseVector& v, double p);

}  // namespace coarsekit

#endif  // COARSEKIT_SPARSE_VECTOR_HPP_
