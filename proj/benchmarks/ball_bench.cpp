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


#include <benchmark/benchmark.h>

#include "coarsekit/word_metric.hpp"

namespace ck = coarsekit;

namespace {

void BM_NormTable(benchmark::State& state, const char* token) {
  auto g = ck::parse_group(token);
  const int r = static_cast<int>(state.range(0));
  std::size_t size = 0;
  for (auto _ : state) {
    auto t = ck::word_norm_table(g, r);
    size = t.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["elements"] = static_cast<double>(size);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(size));
}
BENCHMARK_CAPTURE(BM_NormTable, free2, "free:2")->Arg(6)->Arg(9);
BENCHMARK_CAPTURE(BM_NormTable, heisenberg, "heisenberg")->Arg(10)->Arg(14);
BENCHMARK_CAPTURE(BM_NormTable, lamplighter, "lamplighter")->Arg(8)->Arg(12);

void BM_VisitBall(benchmark::State& state, const char* token) {
  auto win = ck::ball_space(ck::parse_group(token), 8);
  const double rad = static_cast<double>(state.range(0));
  ck::PointId x = 0;
  for (auto _ : state) {
    std::size_t n = 0;
    win->visit_ball(x, rad, [&](ck::PointId, double) {
      ++n;
      return true;
    });
    benchmark::DoNotOptimize(n);
    x = (x + 97) % static_cast<ck::PointId>(win->size());
  }
}
BENCHMARK_CAPTURE(BM_VisitBall, zn2, "zn:2")->Arg(2)->Arg(4);
BENCHMARK_CAPTURE(BM_VisitBall, free2, "free:2")->Arg(2)->Arg(4);
BENCHMARK_CAPTURE(BM_VisitBall, heisenberg, "heisenberg")->Arg(2)->Arg(4);

}  // namespace
