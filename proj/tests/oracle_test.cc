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

#include "ppcc/oracle.h"

#include <random>

#include "doctest.h"
#include "test_support.h"

namespace ppcc {
namespace {

using testing::R;
using testing::V;

TEST_CASE("instance parameters") {
  const PlainInstance inst = make_instance(testing::worked_example());
  CHECK(inst.n == 4);
  CHECK(inst.Q == 100);
  CHECK(inst.slots == 1);
  const std::vector<PiecewiseUniformValuation> vs{
      V({{"0", "0.1"}, {"0.2", "0.3"}, {"0.4", "0.5"}}), V({{"0.5", "1"}})};
  CHECK(make_instance(vs).slots == 3);
  const PlainInstance strict = make_instance(vs, true);
  CHECK(strict.slots == 4);
  CHECK(strict.valuations[1].endpoints ==
        std::vector<std::int64_t>{5, 10, 10, 10, 10, 10, 10, 10});
}

TEST_CASE("mirror on the worked example") {
  const OracleResult o = cc_puv_allocate(make_instance(testing::worked_example()));
  CHECK(o.iterations == 2);
  CHECK(o.min_average == std::vector<std::int64_t>{300, 600});
  CHECK(o.unique_minimizer == std::vector<bool>{true, true});
  CHECK(o.allocation[0] == std::vector<Interval>{{R("0"), R("1/8")}});
  const OracleResult p =
      cc_puv_allocate(make_instance(testing::worked_example()), {SearchMode::kPolynomial, false});
  CHECK(p.allocation == o.allocation);
  CHECK(p.trace.iterations[0].c_star == 300);
}

TEST_CASE("tied minimizers are flagged") {
  const std::vector<PiecewiseUniformValuation> vs{V({{"0", "0.5"}}), V({{"0.5", "1"}})};
  const OracleResult o = cc_puv_allocate(make_instance(vs));
  REQUIRE_FALSE(o.unique_minimizer.empty());
  CHECK_FALSE(o.unique_minimizer[0]);
}

TEST_CASE("naive reference on the worked example") {
  const NaiveResult r = naive_cc_puv(testing::worked_example());
  CHECK(r.amount == std::vector<Rational>{R("1/8"), R("1/8"), R("1/4"), R("1/4")});
  CHECK(r.round == std::vector<int>{1, 1, 2, 2});
}

TEST_CASE("mirror amounts agree with the naive reference") {
  std::mt19937_64 rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const auto vs = random_valuations(rng, n, 3, 1 + trial % 2);
    for (const auto& v : vs) REQUIRE(validate(v).ok());
    const OracleResult o = cc_puv_allocate(make_instance(vs));
    const NaiveResult naive = naive_cc_puv(vs);
    CAPTURE(trial);
    for (int i = 0; i < n; ++i) {
      CHECK(total_length(o.allocation[i]) == naive.amount[i]);
      // Pieces lie inside the agent's support.
      CHECK(overlap_length(o.allocation[i], vs[i].intervals()) == naive.amount[i]);
    }
    const FairnessReport f = check_fairness(vs, o.allocation);
    CHECK_MESSAGE(f.envy_free, f.detail);
    CHECK_MESSAGE(f.proportional, f.detail);
  }
}

TEST_CASE("fairness checker catches envy and disproportion") {
  const auto vs = testing::worked_example();
  Allocation bad{
      {},
      {{R("0"), R("1/4")}},
      {{R("1/2"), R("3/4")}},
      {{R("3/4"), R("1")}},
  };
  const FairnessReport f = check_fairness(vs, bad);
  CHECK_FALSE(f.envy_free);
  CHECK_FALSE(f.proportional);
  CHECK_FALSE(f.detail.empty());
  CHECK(total_length(bad[1]) == R("1/4"));
}

TEST_CASE("grid valuations") {
  // 10 single intervals on {0..4}, 5 pairs with a gap.
  const auto g = grid_valuations(4, 2);
  CHECK(g.size() == 15);
  for (const auto& v : g) {
    CHECK(v.well_formed());
    CHECK(v.Q == 4);
  }
  CHECK(grid_valuations(4, 1).size() == 10);
}

TEST_CASE("strategyproofness on a small grid") {
  const StrategyproofReport r = check_strategyproof_grid(4, 2);
  CHECK(r.profiles == 15 * 15);
  CHECK(r.deviations == 15 * 15 * 14 * 2);
  CHECK(r.violations == 0);
  CHECK(r.first_violation.empty());

  const auto grid = grid_valuations(4, 2);
  const std::vector<IntegerValuation> truth{grid[0], grid[3], grid[7]};
  for (int agent = 1; agent <= 3; ++agent) {
    const StrategyproofReport one = check_strategyproof(truth, agent, grid);
    CHECK(one.deviations == grid.size());
    CHECK(one.violations == 0);
  }
  CHECK_THROWS_AS(check_strategyproof(truth, 0, grid), std::invalid_argument);
}

}  // namespace
}  // namespace ppcc
