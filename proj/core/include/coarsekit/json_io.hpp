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
#ifndef COARSEKIT_JSON_IO_HPP_
#define COARSEKIT_JSON_IO_HPP_

#include <cstddef>
#include <memory>
#include <string>

#include <nlohmann/json.hpp>

#include "coarsekit/constructions.hpp"
#include "coarsekit/cover.hpp"
#include "coarsekit/embedding.hpp"
#include "coarsekit/metric_space.hpp"
#include "coarsekit/property_a.hpp"

namespace coarsekit {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "coarsekit/1";

// Integers stay integers; other values are rounded to 9 significant
// digits; infinities become the strings "inf" / "-inf", NaN becomes null.
Json json_number(double v);

Json to_json(const CoverStats& stats);
// {"sets": [[ids]]}.
Json to_json(const Cover& cover);
// Labels, margins and, up to matrix_limit points, the distance matrix.
Json space_to_json(const FiniteMetricSpace& space,
                   std::size_t matrix_limit = 2000);
// Reads {"points": [...], "distances": [[...]]} (margins optional).
std::shared_ptr<const DenseMetricSpace> space_from_json(const Json& j);
Json to_json(const LipschitzAudit& audit);
Json to_json(const VariationReport& report);
Json to_json(const ConversionAudit& audit);
Json to_json(const EmbeddingResult& result);

// Adds "schema" and serializes with sorted keys, two-space indent and a
// trailing newline.
std::string dump_document(Json doc);

}  // namespace coarsekit

#endif  // COARSEKIT_JSON_IO_HPP_
