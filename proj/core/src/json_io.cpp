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
#include "coarsekit/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "coarsekit/error.hpp"

namespace coarsekit {

Json json_number(double v) {
  if (std::isnan(v)) return nullptr;
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == std::floor(v) && std::abs(v) < 9.0e15) {
    return static_cast<std::int64_t>(v);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::strtod(buf, nullptr);
}

Json to_json(const CoverStats& s) {
  return {{"multiplicity", s.multiplicity},
          {"lebesgue_pointwise", json_number(s.lebesgue_pointwise)},
          {"diameter", json_number(s.diameter)},
          {"boundary_margin", json_number(s.boundary_margin)},
          {"audited_points", s.audited_points},
          {"sets", s.sets}};
}

Json to_json(const Cover& cover) {
  Json sets = Json::array();
  for (std::size_t i = 0; i < cover.size(); ++i) {
    auto s = cover.set(i);
    sets.push_back(Json(std::vector<PointId>(s.begin(), s.end())));
  }
  return {{"sets", std::move(sets)}};
}

Json space_to_json(const FiniteMetricSpace& space, std::size_t matrix_limit) {
  const std::size_t n = space.size();
  Json points = Json::array();
  Json margins = Json::array();
  for (PointId p = 0; p < n; ++p) {
    points.push_back(space.label(p));
    margins.push_back(json_number(space.boundary_margin(p)));
  }
  Json out = {{"size", n}, {"points", std::move(points)},
              {"margins", std::move(margins)}};
  if (n <= matrix_limit) {
    Json rows = Json::array();
    for (PointId a = 0; a < n; ++a) {
      Json row = Json::array();
      for (PointId b = 0; b < n; ++b) row.push_back(json_number(space.distance(a, b)));
      rows.push_back(std::move(row));
    }
    out["distances"] = std::move(rows);
  } else {
    out["distances"] = nullptr;
  }
  return out;
}

std::shared_ptr<const DenseMetricSpace> space_from_json(const Json& j) {
  try {
    auto labels = j.at("points").get<std::vector<std::string>>();
    const std::size_t n = labels.size();
    const Json& rows = j.at("distances");
    if (!rows.is_array() || rows.size() != n) {
      throw Error(ErrorCode::kInvalidArgument, "distance matrix has wrong shape");
    }
    std::vector<double> matrix;
    matrix.reserve(n * n);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != n) {
        throw Error(ErrorCode::kInvalidArgument, "distance matrix has wrong shape");
      }
      for (const auto& v : row) matrix.push_back(v.get<double>());
    }
    std::vector<double> margins;
    if (j.contains("margins")) {
      for (const auto& m : j.at("margins")) {
        margins.push_back(m.is_string() ? kInfinity : m.get<double>());
      }
    }
    return std::make_shared<const DenseMetricSpace>(std::move(labels),
                                                    std::move(matrix),
                                                    std::move(margins));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("bad space json: ") + e.what());
  }
}

Json to_json(const LipschitzAudit& a) {
  return {{"measured", json_number(a.measured)},
          {"bound", json_number(a.bound)},
          {"multiplicity", a.multiplicity},
          {"lebesgue", json_number(a.lebesgue)},
          {"pairs_scanned", a.pairs_scanned},
          {"exhaustive", a.exhaustive},
          {"scan_radius", json_number(a.scan_radius)},
          {"unscanned_bound", json_number(a.unscanned_bound)},
          {"stride", a.stride},
          {"witness", {a.witness_a, a.witness_b}},
          {"pass", a.pass}};
}

Json to_json(const VariationReport& r) {
  Json variation = Json::object();
  Json bounds = Json::object();
  for (std::size_t k = 0; k < r.Ks.size(); ++k) {
    Json per_n = Json::object();
    Json per_n_bound = Json::object();
    for (std::size_t l = 0; l < r.levels.size(); ++l) {
      const std::string n = Json(json_number(r.levels[l])).dump();
      per_n[n] = json_number(r.measured[l][k]);
      per_n_bound[n] = json_number(r.bound[l][k]);
    }
    const std::string K = Json(json_number(r.Ks[k])).dump();
    variation[K] = std::move(per_n);
    bounds[K] = std::move(per_n_bound);
  }
  return {{"variation", std::move(variation)},
          {"bounds", std::move(bounds)},
          {"pairs", r.pairs},
          {"stride", r.stride},
          {"within_bounds", r.within_bounds},
          {"monotone", r.monotone}};
}

Json to_json(const ConversionAudit& a) {
  return {{"pairs", a.pairs},
          {"min_slack", json_number(a.min_slack)},
          {"stride", a.stride}};
}

Json to_json(const EmbeddingResult& r) {
  Json buckets = Json::array();
  for (const auto& b : r.buckets) {
    buckets.push_back({{"distance", json_number(b.distance)},
                       {"pairs", b.pairs},
                       {"min_norm", json_number(b.min_norm)},
                       {"max_norm", json_number(b.max_norm)},
                       {"rho1", json_number(b.rho1)},
                       {"rho2", json_number(b.rho2)}});
  }
  Json levels = Json::array();
  for (double n : r.selected_levels) levels.push_back(json_number(n));
  Json slot_var = Json::array();
  for (double v : r.slot_variation) slot_var.push_back(json_number(v));
  return {{"selected_levels", std::move(levels)},
          {"slot_variation", std::move(slot_var)},
          {"base_point", r.base_point},
          {"base_image_support", r.images.at(r.base_point).support_size()},
          {"safe_margin", json_number(r.safe_margin)},
          {"pairs_audited", r.pairs_audited},
          {"buckets", std::move(buckets)},
          {"pass", r.pass}};
}

std::string dump_document(Json doc) {
  doc["schema"] = kSchema;
  return doc.dump(2) + "\n";
}

}  // namespace coarsekit
