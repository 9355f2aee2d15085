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

#include "ppcc/protocol.h"

#include <sstream>

#include "doctest.h"
#include "test_support.h"

namespace ppcc {
namespace {

using testing::R;
using testing::V;

const Allocation kWorked{
    {{R("0"), R("1/8")}},
    {{R("1/8"), R("1/5")}, {R("1/5"), R("1/4")}},
    {{R("1/2"), R("3/4")}},
    {{R("3/4"), R("1")}},
};

std::string transcript_text(const RunResult& r) {
  std::ostringstream os;
  r.transcript->write(os);
  return os.str();
}

TEST_CASE("worked example end to end") {
  for (SearchMode mode : {SearchMode::kExhaustive, SearchMode::kPolynomial}) {
    ProtocolConfig cfg;
    cfg.mode = mode;
    const RunResult r = run_protocol(testing::worked_example(), cfg);
    CHECK_FALSE(r.aborted);
    CHECK(r.L == 1);
    CHECK(r.d == 2);
    CHECK(r.Q == 100);
    CHECK(r.ell == 1);
    CHECK(r.iterations == 2);
    CHECK(r.allocation == kWorked);
    CHECK(r.prime > static_cast<std::uint64_t>(2 * magnitude_bound(4, 100)));
  }
}

TEST_CASE("honest input scales by the agent's own digits") {
  const AgentInput in = honest_input(V({{"0.5", "0.625"}}));
  CHECK(in.digits == 3);
  CHECK(in.declared_ell == 1);
  CHECK(in.endpoints == std::vector<std::int64_t>{500, 625});
  CHECK_THROWS_AS(honest_input(V({{"0", "1/3"}})), ValuationError);
}

TEST_CASE("mixed precision is rescaled to the agreed grid") {
  const std::vector<PiecewiseUniformValuation> vs{V({{"0", "0.5"}}),
                                                  V({{"0.5", "0.625"}})};
  const RunResult r = run_protocol(vs, ProtocolConfig{});
  CHECK(r.d == 3);
  CHECK(r.Q == 1000);
  CHECK(r.allocation[0] == std::vector<Interval>{{R("0"), R("1/2")}});
  CHECK(r.allocation[1] == std::vector<Interval>{{R("1/2"), R("5/8")}});
}

TEST_CASE("L is the next power of two of the declared counts") {
  const std::vector<PiecewiseUniformValuation> vs{
      V({{"0", "0.1"}, {"0.2", "0.3"}, {"0.4", "0.5"}}), V({{"0.5", "1"}})};
  const RunResult r = run_protocol(vs, ProtocolConfig{});
  CHECK(r.L == 4);
  CHECK(r.ell == 3);
  ProtocolConfig strict;
  strict.strict_no_ell = true;
  const RunResult s = run_protocol(vs, strict);
  CHECK(s.ell == 4);
  CHECK(s.allocation == r.allocation);
}

TEST_CASE("cheaters abort the run") {
  std::vector<AgentInput> in;
  for (const auto& v : testing::worked_example()) in.push_back(honest_input(v));
  in[1].endpoints = {70, 30};  // reversed
  RunResult r = run_protocol(in, ProtocolConfig{});
  CHECK(r.aborted);
  CHECK(r.cheaters == std::vector<int>{2});
  CHECK(r.allocation.empty());
  CHECK(r.iterations == 0);

  // Declaring fewer intervals than submitted.
  in[1] = honest_input(V({{"0", "0.1"}, {"0.2", "0.3"}}));
  in[1].declared_ell = 1;
  in[3].endpoints = {50, 100, 20, 40};
  in[3].declared_ell = 2;  // out of order
  r = run_protocol(in, ProtocolConfig{});
  CHECK(r.aborted);
  CHECK(r.cheaters == std::vector<int>{2, 4});
}

TEST_CASE("pad mode always runs n iterations with the same result") {
  ProtocolConfig cfg;
  cfg.pad_iterations = true;
  const RunResult r = run_protocol(testing::worked_example(), cfg);
  CHECK(r.iterations == 4);
  CHECK(r.allocation == kWorked);
}

TEST_CASE("a single agent gets its whole support") {
  const std::vector<PiecewiseUniformValuation> vs{V({{"0.2", "0.3"}, {"0.6", "0.9"}})};
  const RunResult r = run_protocol(vs, ProtocolConfig{});
  CHECK_FALSE(r.aborted);
  CHECK(overlap_length(r.allocation[0], vs[0].intervals()) == R("0.4"));
}

TEST_CASE("identical agents split every interval evenly") {
  const std::vector<PiecewiseUniformValuation> vs(3, V({{"0.1", "0.4"}, {"0.6", "0.9"}}));
  const RunResult r = run_protocol(vs, ProtocolConfig{});
  for (int i = 0; i < 3; ++i) CHECK(total_length(r.allocation[i]) == R("1/5"));
}

TEST_CASE("runs are deterministic in the seed") {
  ProtocolConfig cfg;
  cfg.seed = 77;
  const RunResult a = run_protocol(testing::worked_example(), cfg);
  const RunResult b = run_protocol(testing::worked_example(), cfg);
  CHECK(transcript_text(a) == transcript_text(b));
  cfg.seed = 78;
  const RunResult c = run_protocol(testing::worked_example(), cfg);
  CHECK(c.allocation == a.allocation);
  CHECK(c.transcript->total_messages() == a.transcript->total_messages());
}

TEST_CASE("prime override must exceed the magnitude bound") {
  ProtocolConfig cfg;
  cfg.prime = 7;
  CHECK_THROWS_AS(run_protocol(testing::worked_example(), cfg), FieldError);
  cfg.prime = (std::uint64_t{1} << 61) - 1;
  const RunResult r = run_protocol(testing::worked_example(), cfg);
  CHECK(r.prime == cfg.prime);
  CHECK(r.allocation == kWorked);
}

}  // namespace
}  // namespace ppcc
