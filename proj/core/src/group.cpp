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
#include "coarsekit/group.hpp"

#include <algorithm>
#include <charconv>

#include "coarsekit/error.hpp"
#include "coarsekit/wreath.hpp"

namespace coarsekit {

std::size_t ElementHash::operator()(const Element& e) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ e.size();
  for (std::int32_t v : e) {
    h ^= static_cast<std::uint32_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

std::string GroupSpec::format(const Element& e) const {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(e[i]);
  }
  return out + ")";
}

void GroupSpec::set_generators(std::vector<Element> generators) {
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  const Element e = unit();
  for (const auto& g : generators) {
    if (g == e) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unit element in generating set of " + token_);
    }
  }
  for (const auto& g : generators) {
    if (!std::binary_search(generators.begin(), generators.end(), inverse(g))) {
      throw Error(ErrorCode::kInvalidArgument,
                  "generating set of " + token_ + " is not symmetric",
                  format(g));
    }
  }
  generators_ = std::move(generators);
}

namespace {

int parse_int(std::string_view& rest, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || ptr == rest.data()) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected integer " + std::string(what) + " in group token");
  }
  rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
  return value;
}

bool consume(std::string_view& rest, std::string_view prefix) {
  if (rest.substr(0, prefix.size()) != prefix) return false;
  rest.remove_prefix(prefix.size());
  return true;
}

GroupPtr parse_prefix(std::string_view& rest) {
  if (consume(rest, "zn:")) {
    return std::make_shared<const IntegerLattice>(parse_int(rest, "rank"));
  }
  if (consume(rest, "cyclic:")) {
    return std::make_shared<const CyclicGroup>(parse_int(rest, "order"));
  }
  if (consume(rest, "free:")) {
    return std::make_shared<const FreeGroup>(parse_int(rest, "rank"));
  }
  if (consume(rest, "heisenberg")) {
    return std::make_shared<const HeisenbergGroup>();
  }
  if (consume(rest, "lamplighter")) {
    return std::make_shared<const WreathProduct>(
        std::make_shared<const IntegerLattice>(1),
        std::make_shared<const CyclicGroup>(2), "lamplighter");
  }
  if (consume(rest, "wreath:")) {
    GroupPtr base = parse_prefix(rest);
    if (!consume(rest, ":")) {
      throw Error(ErrorCode::kInvalidArgument,
                  "wreath token must be wreath:<N>:<G>");
    }
    GroupPtr lamps = parse_prefix(rest);
    return std::make_shared<const WreathProduct>(std::move(base),
                                                 std::move(lamps));
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown group token '" + std::string(rest) + "'");
}

}  // namespace

GroupPtr parse_group(std::string_view token) {
  std::string_view rest = token;
  GroupPtr group = parse_prefix(rest);
  if (!rest.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "trailing characters in group token '" + std::string(token) +
                    "'");
  }
  return group;
}

}  // namespace coarsekit
