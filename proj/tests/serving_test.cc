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

#include "ppcc/serving_phase.h"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "ppcc/allocation_phase.h"
#include "test_support.h"

namespace ppcc {
namespace {

using testing::Instance;
using testing::R;

struct Allocated : Instance {
  explicit Allocated(const std::vector<PiecewiseUniformValuation>& vs)
      : Instance(make_instance(vs), 5, true) {
    run_iterative_allocation(engine, state, ProtocolConfig{}, false);
  }
};

TEST_CASE("classification of the worked example") {
  Allocated t(testing::worked_example());
  const Classification cls = classify_exclusive(t.engine, t.state);
  // [0,0.2) is split between agents 1 and 2; [0.2,0.25) belongs to agent 2.
  CHECK(t.values(cls.exclusive) == std::vector<std::int64_t>{0, 0, 0, 2, 0, 0, 0, 0, 0});
  CHECK(t.values(cls.relevant[0]) == std::vector<std::int64_t>{0, 0, 1, 0, 0, 0, 0, 0, 0});
  CHECK(t.values(cls.relevant[1]) == std::vector<std::int64_t>{0, 0, 1, 1, 0, 0, 0, 0, 0});
  CHECK(t.values(cls.relevant[3]) == std::vector<std::int64_t>{0, 0, 0, 0, 0, 0, 1, 0, 0});
}

TEST_CASE("worked example pieces") {
  Allocated t(testing::worked_example());
  const ServingResult r = run_final_serving(t.engine, t.state, Visibility::kRestricted);
  const Allocation want{
      {{R("0"), R("1/8")}},
      {{R("1/8"), R("1/5")}, {R("1/5"), R("1/4")}},
      {{R("1/2"), R("3/4")}},
      {{R("3/4"), R("1")}},
  };
  CHECK(r.allocation == want);
  // One exclusive run, announced to all four agents.
  const auto exclusive = std::count_if(r.portions.begin(), r.portions.end(),
                                       [](const PortionMessage& m) { return m.exclusive; });
  CHECK(exclusive == 4);
}

TEST_CASE("a run of exclusive intervals is sent as one piece") {
  // Agent 1 is served first and takes [0.1,0.3) and [0.3,0.4) whole.
  const std::vector<PiecewiseUniformValuation> vs{
      testing::V({{"0.1", "0.4"}}), testing::V({{"0.3", "1"}})};
  Allocated t(vs);
  const ServingResult r = run_final_serving(t.engine, t.state, Visibility::kRestricted);
  CHECK(r.allocation[0] == std::vector<Interval>{{R("1/10"), R("2/5")}});
  CHECK(r.allocation[1] == std::vector<Interval>{{R("2/5"), R("1")}});
  const auto run = std::find_if(r.portions.begin(), r.portions.end(),
                                [](const PortionMessage& m) { return m.agent == 1 && m.exclusive; });
  REQUIRE(run != r.portions.end());
  CHECK(run->j - run->k == 2);
}

TEST_CASE("zero-length boundary intervals end an exclusive run") {
  const std::vector<PiecewiseUniformValuation> vs{
      testing::V({{"0", "0.3"}, {"0.3", "0.5"}}), testing::V({{"0.5", "1"}})};
  Allocated t(vs);
  const ServingResult r = run_final_serving(t.engine, t.state, Visibility::kRestricted);
  CHECK(r.allocation[0] ==
        std::vector<Interval>{{R("0"), R("3/10")}, {R("3/10"), R("1/2")}});
}

TEST_CASE("restricted visibility sends each piece only to its owner") {
  Allocated t(testing::worked_example());
  const auto before = t.transcript->reveals().size();
  run_final_serving(t.engine, t.state, Visibility::kRestricted);
  const auto& reveals = t.transcript->reveals();
  int outputs = 0;
  for (std::size_t k = before; k < reveals.size(); ++k) {
    if (reveals[k].kind != RevealKind::kOutput) continue;
    ++outputs;
    CHECK(reveals[k].target == reveals[k].subject);
  }
  CHECK(outputs > 0);
  for (const auto& m : t.transcript->messages()) {
    if (m.tag == MessageTag::kReveal && m.subject > 0) CHECK(m.to == m.subject);
  }
}

TEST_CASE("full visibility broadcasts the same pieces") {
  Allocated a(testing::worked_example());
  Allocated b(testing::worked_example());
  const auto ra = run_final_serving(a.engine, a.state, Visibility::kRestricted);
  const auto before = b.transcript->reveals().size();
  const auto rb = run_final_serving(b.engine, b.state, Visibility::kFull);
  CHECK(ra.allocation == rb.allocation);
  const auto& reveals = b.transcript->reveals();
  for (std::size_t k = before; k < reveals.size(); ++k) {
    if (reveals[k].kind == RevealKind::kOutput) CHECK(reveals[k].target == 0);
  }
}

TEST_CASE("pieces and portions match the mirror on random instances") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 2 + trial % 3;
    const auto vs = random_valuations(rng, n, 2, 2);
    const PlainInstance inst = make_instance(vs);
    Instance t(inst);
    run_iterative_allocation(t.engine, t.state, ProtocolConfig{}, false);
    Classification cls;
    const ServingResult r = run_final_serving(t.engine, t.state, Visibility::kRestricted, &cls);
    const OracleResult o = cc_puv_allocate(inst);
    CAPTURE(trial);
    CHECK(r.allocation == o.allocation);
    CHECK(t.values(cls.exclusive) == o.trace.exclusive);
    ProtocolTrace got = o.trace;
    got.portions = r.portions;
    CHECK(compare_traces(o.trace, got).empty());
  }
}

}  // namespace
}  // namespace ppcc
