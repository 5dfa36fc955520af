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

#include "coarsekit/constructions.hpp"
#include "coarsekit/cover.hpp"
#include "coarsekit/word_metric.hpp"

namespace ck = coarsekit;

namespace {

void BM_CoverStats(benchmark::State& state, const char* token, int radius) {
  auto win = ck::ball_space(ck::parse_group(token), radius);
  const int lam = static_cast<int>(state.range(0));
  const auto cover = ck::ball_cover(win, lam);
  for (auto _ : state) {
    auto st = ck::cover_stats(cover, lam);
    benchmark::DoNotOptimize(st);
  }
  state.counters["points"] = static_cast<double>(win->size());
}
BENCHMARK_CAPTURE(BM_CoverStats, zn2, "zn:2", 16)->Arg(1)->Arg(3);
BENCHMARK_CAPTURE(BM_CoverStats, free2, "free:2", 7)->Arg(1)->Arg(2);

void BM_ExactLebesgue(benchmark::State& state) {
  auto win = ck::ball_space(ck::parse_group("zn:2"), static_cast<int>(state.range(0)));
  const auto cover = ck::brick_cover_zl(win, 2, 2, ck::BrickSpacing::kTight);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ck::exact_lebesgue_at_least(cover, 2));
  }
}
BENCHMARK(BM_ExactLebesgue)->Arg(6)->Arg(10);

void BM_PartitionOfUnity(benchmark::State& state) {
  auto win = ck::ball_space(ck::parse_group("zn:2"), 12);
  const auto cover = ck::ball_cover(win, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto p = ck::partition_of_unity(cover);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PartitionOfUnity)->Arg(1)->Arg(3);

}  // namespace
