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

#include "ppcc/allocation_phase.h"

#include <random>

#include "doctest.h"
#include "test_support.h"

namespace ppcc {
namespace {

using testing::Instance;
using Vec = std::vector<std::int64_t>;

TEST_CASE("subset bit order") {
  CHECK(subset_members(1, 3) == std::vector<int>{1});
  CHECK(subset_members(5, 3) == std::vector<int>{1, 3});
  CHECK(subset_members(7, 3) == std::vector<int>{1, 2, 3});
  CHECK(subset_members(8, 4) == std::vector<int>{4});
}

TEST_CASE("Len* for every subset of the worked example") {
  Instance t(make_instance(testing::worked_example()));
  const auto all = compute_len_star_all(t.engine, t.state);
  REQUIRE(all.size() == 15);
  // {1}: 20, {1,2}: 25, {3,4}: 50, {1,3}: 70
  CHECK(t.value(all[0].len) == 20);
  CHECK(t.value(all[2].len) == 25);
  CHECK(t.value(all[11].len) == 50);
  CHECK(t.value(all[4].len) == 70);
  for (const auto& ls : all) CHECK(t.value(ls.legal) == 1);
  const LenStar one = compute_len_star(t.engine, t.state, {1, 2});
  CHECK(t.value(one.len_star) == t.value(all[2].len_star));
}

TEST_CASE("exhaustive selection picks the minimum average subset") {
  Instance t(make_instance(testing::worked_example()));
  const IterationState it = select_subset_exhaustive(t.engine, t.state);
  CHECK(t.values(it.best) == Vec{1, 1, 0, 0});
  CHECK(t.value(it.min_len) == 25);
  CHECK(t.value(it.size_best) == 2);
}

TEST_CASE("ties keep the earlier subset") {
  // Both agents alone average 50; {1} comes first.
  const std::vector<PiecewiseUniformValuation> vs{
      testing::V({{"0", "0.5"}}), testing::V({{"0.5", "1"}})};
  Instance t(make_instance(vs));
  const IterationState it = select_subset_exhaustive(t.engine, t.state);
  CHECK(t.values(it.best) == Vec{1, 0});
}

TEST_CASE("feasibility and capacity search") {
  Instance t(make_instance(testing::worked_example()));
  // n! * 12.5 = 300 per agent is the largest feasible capacity.
  CHECK(t.value(is_feasible(t.engine, t.state, t.engine.constant(300))) == 1);
  CHECK(t.value(is_feasible(t.engine, t.state, t.engine.constant(301))) == 0);
  CHECK(t.value(is_feasible(t.engine, t.state, t.engine.constant(0))) == 1);
  // Scratch registers only.
  CHECK(t.values(t.state.available) == Vec(9, 1));

  for (bool candidates : {false, true}) {
    for (bool defer : {false, true}) {
      ProtocolConfig cfg;
      cfg.mode = SearchMode::kPolynomial;
      cfg.search_candidates = candidates;
      cfg.defer_search_check = defer;
      CAPTURE(candidates);
      CAPTURE(defer);
      CHECK(t.value(capacity_binary_search(t.engine, t.state, cfg)) == 300);
    }
  }
  const auto smin = extract_min_subset(t.engine, t.state, t.engine.constant(300), false);
  CHECK(t.values(smin) == Vec{1, 1, 0, 0});
}

TEST_CASE("polynomial selection agrees with exhaustive selection") {
  Instance t(make_instance(testing::worked_example()));
  ProtocolConfig cfg;
  cfg.mode = SearchMode::kPolynomial;
  const IterationState it = select_subset_polynomial(t.engine, t.state, cfg);
  CHECK(it.has_c_star);
  CHECK(t.value(it.c_star) == 300);
  CHECK(t.values(it.best) == Vec{1, 1, 0, 0});
  CHECK(t.value(it.min_len) == 25);
  CHECK(t.value(it.size_best) == 2);
}

TEST_CASE("iteration snapshots match the mirror") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    const auto vs = random_valuations(rng, n, 2, 1);
    for (SearchMode mode : {SearchMode::kExhaustive, SearchMode::kPolynomial}) {
      for (bool pad : {false, true}) {
        const PlainInstance inst = make_instance(vs);
        Instance t(inst);
        ProtocolConfig cfg;
        cfg.mode = mode;
        cfg.pad_iterations = pad;
        const AllocationRun run = run_iterative_allocation(t.engine, t.state, cfg);
        const OracleResult o = cc_puv_allocate(inst, {mode, pad});
        CAPTURE(trial);
        CAPTURE(pad);
        CHECK(run.iterations == o.iterations);
        if (pad) CHECK(run.iterations == n);
        ProtocolTrace got = o.trace;
        got.iterations = run.snapshots;
        const TraceDivergence d = compare_traces(o.trace, got);
        CHECK_MESSAGE(d.empty(), d.describe());
        for (int i = 0; i < n; ++i) {
          CHECK(t.values(t.state.allocation[i]) == o.trace.allocation[i]);
        }
        CHECK(t.value(t.state.num_served) == n);
      }
    }
  }
}

TEST_CASE("worked example iterations") {
  Instance t(make_instance(testing::worked_example()));
  const AllocationRun run = run_iterative_allocation(t.engine, t.state, ProtocolConfig{});
  REQUIRE(run.iterations == 2);
  // Flows are in units of 1/|S|: agents 1 and 2 get 25/2 each.
  CHECK(run.snapshots[0].total_flow == 50);
  CHECK(run.snapshots[0].flow[2] == Vec{25, 15, 0, 0});
  CHECK(run.snapshots[0].flow[3] == Vec{0, 10, 0, 0});
  CHECK(run.snapshots[0].available == Vec{1, 1, 0, 0, 1, 1, 1, 1, 1});
  CHECK(run.snapshots[1].best_subset == Vec{0, 0, 1, 1});
  CHECK(run.snapshots[1].total_flow == 100);
  CHECK(run.snapshots[1].flow[6] == Vec{0, 0, 50, 50});
  CHECK(t.values(t.state.denominator) == Vec{2, 2, 2, 2});
}

TEST_CASE("the availability fault changes the trace") {
  const PlainInstance inst = make_instance(testing::worked_example());
  Instance t(inst);
  ProtocolConfig cfg;
  cfg.fault = Fault::kAvailabilityOffByOne;
  const AllocationRun run = run_iterative_allocation(t.engine, t.state, cfg);
  const OracleResult o = cc_puv_allocate(inst);
  ProtocolTrace got = o.trace;
  got.iterations = run.snapshots;
  const TraceDivergence d = compare_traces(o.trace, got);
  CHECK_FALSE(d.empty());
  CHECK(d.reg == "IntervalAvailable");
}

}  // namespace
}  // namespace ppcc
