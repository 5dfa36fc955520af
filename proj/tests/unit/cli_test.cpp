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


#include <sys/wait.h>

#include <cstdio>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

#ifdef COARSEKIT_CLI_PATH

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd =
      std::string(COARSEKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, f)) > 0) r.out.append(buf, got);
  const int st = pclose(f);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

TEST(Cli, BallOnZ) {
  const auto r = run("ball --group zn:1 --radius 4");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["size"], 9);
  EXPECT_EQ(j["schema"], "coarsekit/1");
}

TEST(Cli, CapGivesErrorJson) {
  const auto r = run("ball --group free:3 --radius 12 --ball-cap 1000");
  EXPECT_EQ(r.status, 3);
  EXPECT_EQ(nlohmann::json::parse(r.out)["error"], "BallTooLarge");
}

TEST(Cli, UnknownFlagIsFatal) {
  EXPECT_EQ(run("cover --no-such-flag").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("certify-a --n 3,2").status, 1);
}

TEST(Cli, BallCoverMultiplicity) {
  const auto r = run("cover --method ball --group zn:1 --radius 8 --lambda 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["stats"]["multiplicity"], 5);
}

TEST(Cli, ExtensionWithSmallKernelLebesgue) {
  const auto r = run("cover --method extension --radius 6 --lambda 2 --kernel-lambda 10");
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(nlohmann::json::parse(r.out)["error"], "PreconditionFailed");
}

TEST(Cli, EmbedTruncated) {
  const auto r = run("embed --group zn:1 --radius 30 --n 1..2 --slots 5");
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(nlohmann::json::parse(r.out)["error"], "SubsequenceUnavailable");
}

TEST(Cli, CertifyInfinity) {
  const auto r = run("certify-a --group zn:2 --radius 8 --p inf --n 2..8 --K 1,2,4");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["family"], "tent");
}

TEST(Cli, ProfileCsv) {
  const auto r = run("profile --group free:2 --lambda 1..3 --policy linear:4 --radius 4");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')),
            "group,lambda,diam_budget,multiplicity,method,theoretical_envelope,"
            "boundary_margin");
}

TEST(Cli, RepeatedRunsAreIdentical) {
  const std::string args = "certify-a --group zn:1 --radius 40 --p 1 --n 2..8";
  EXPECT_EQ(run(args).out, run(args).out);
}

#endif

}  // namespace
