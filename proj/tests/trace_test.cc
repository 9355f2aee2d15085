// Copyright 2026 The ppcake Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ppcc/trace.h"

#include "doctest.h"

namespace ppcc {
namespace {

ProtocolTrace sample() {
  ProtocolTrace t;
  t.W = {0, 20, 100};
  t.interval_len = {20, 80};
  t.desired = {{1, 0}, {0, 1}};
  IterationSnapshot s;
  s.best_subset = {1, 0};
  s.min_len = 20;
  s.size_best = 1;
  s.c_star = 40;
  s.flow = {{20, 0}, {0, 0}};
  t.iterations.push_back(s);
  t.allocation = {{20, 0}, {0, 80}};
  t.portions.push_back({1, 1, 2, true, 0, 20});
  return t;
}

TEST_CASE("identical traces do not diverge") {
  CHECK(compare_traces(sample(), sample()).empty());
}

TEST_CASE("first difference is located") {
  ProtocolTrace b = sample();
  b.iterations[0].min_len = 21;
  b.allocation[1][1] = 79;  // later difference is not reported
  const TraceDivergence d = compare_traces(sample(), b);
  REQUIRE_FALSE(d.empty());
  CHECK(d.iteration == 1);
  CHECK(d.expected == "20");
  CHECK(d.actual == "21");
  CHECK(d.describe().find("21") != std::string::npos);
}

TEST_CASE("c_star is compared only when both sides carry it") {
  ProtocolTrace b = sample();
  b.iterations[0].c_star = -1;
  CHECK(compare_traces(sample(), b).empty());
  b.iterations[0].c_star = 41;
  CHECK_FALSE(compare_traces(sample(), b).empty());
}

TEST_CASE("iteration count and portions") {
  ProtocolTrace b = sample();
  b.iterations.push_back(b.iterations[0]);
  CHECK_FALSE(compare_traces(sample(), b).empty());
  ProtocolTrace c = sample();
  c.portions[0].end = 19;
  const TraceDivergence d = compare_traces(sample(), c);
  CHECK_FALSE(d.empty());
  CHECK(d.iteration == 0);
}

}  // namespace
}  // namespace ppcc
