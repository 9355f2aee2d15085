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

#include "ppcc/flow.h"

#include <memory>
#include <random>
#include <vector>

#include "doctest.h"
#include "ppcc/oracle.h"
#include "test_support.h"

namespace ppcc {
namespace {

using Caps = std::vector<std::int64_t>;
using CapMatrix = std::vector<Caps>;

struct Net {
  Net(int n, const Caps& A, const CapMatrix& B, const Caps& C)
      : transcript(std::make_shared<Transcript>()),
        engine(ShareParams::for_parties(n), choose_prime(n, 100, std::nullopt), 17,
               transcript),
        fs(make_flow_state(engine, share(A), share_matrix(B), share(C))) {}

  std::vector<Sharing> share(const Caps& xs) {
    std::vector<Sharing> out;
    for (auto x : xs) out.push_back(engine.input(1, static_cast<std::uint64_t>(x)));
    return out;
  }
  std::vector<std::vector<Sharing>> share_matrix(const CapMatrix& m) {
    std::vector<std::vector<Sharing>> out;
    for (const auto& row : m) out.push_back(share(row));
    return out;
  }
  std::int64_t v(const Sharing& x) const { return testing::signed_value(engine, x); }
  CapMatrix flows() const {
    CapMatrix out;
    for (const auto& row : fs.b) out.push_back(testing::signed_values(engine, row));
    return out;
  }

  std::shared_ptr<Transcript> transcript;
  Engine engine;
  FlowState fs;
};

TEST_CASE("greedy pass can stop short; the augmenting step repairs it") {
  const Caps A{1, 1}, C{1, 1};
  const CapMatrix B{{1, 1}, {1, 0}};
  Net net(2, A, B, C);
  greedy_pass(net.engine, net.fs);
  CHECK(net.v(net.fs.flow) == 1);
  CHECK(net.flows() == CapMatrix{{1, 0}, {0, 0}});

  const Reachability r = residual_reachability(net.engine, net.fs);
  CHECK(net.v(r.found) == 1);
  CHECK(testing::signed_values(net.engine, r.endpoint) == Caps{0, 1});

  CHECK(net.v(augment_step(net.engine, net.fs, 10)) == 1);
  CHECK(net.v(net.fs.flow) == 2);
  // The path went through the reverse edge of (1, 1).
  CHECK(net.flows() == CapMatrix{{0, 1}, {1, 0}});
  CHECK(net.v(augment_step(net.engine, net.fs, 10)) == 0);
  CHECK(net.v(net.fs.flow) == 2);
  CHECK(net.v(net.fs.A[0]) == 0);
  CHECK(net.v(net.fs.C[1]) == 0);
}

TEST_CASE("run_max_flow matches Edmonds-Karp and the plaintext mirror") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const int K = 1 + static_cast<int>(rng() % 5);
    Caps A(K), C(n);
    CapMatrix B(K, Caps(n));
    std::int64_t total = 1;
    for (auto& x : A) total += x = static_cast<std::int64_t>(rng() % 30);
    for (auto& x : C) x = static_cast<std::int64_t>(rng() % 40);
    for (int k = 0; k < K; ++k) {
      for (int i = 0; i < n; ++i) B[k][i] = rng() % 3 == 0 ? 0 : A[k];
    }
    CAPTURE(trial);
    Net net(n, A, B, C);
    MaxFlowOptions opts;
    opts.stop_on_stall = true;
    opts.big = total + 100;
    const Sharing target = net.engine.constant(total);
    const int loops = run_max_flow(net.engine, net.fs, target, opts);

    const Rational ek = layered_max_flow(A, B, C);
    CHECK(Rational(net.v(net.fs.flow)) == ek);

    PlainFlow pf = make_plain_flow(A, B, C);
    const int plain_loops = plain_run_max_flow(pf, total, true, false, total + 100);
    CHECK(loops == plain_loops);
    CHECK(net.flows() == pf.b);
    CHECK(net.v(net.fs.flow) == pf.flow);
  }
}

TEST_CASE("target reached stops the loop without stall detection") {
  const Caps A{5, 5}, C{4, 4};
  const CapMatrix B{{5, 5}, {5, 5}};
  Net net(2, A, B, C);
  MaxFlowOptions opts;
  opts.big = 100;
  const int loops = run_max_flow(net.engine, net.fs, net.engine.constant(8), opts);
  CHECK(loops == 1);
  CHECK(net.v(net.fs.flow) == 8);
}

TEST_CASE("at_least_once runs a loop even when the target is met") {
  const Caps A{1}, C{1};
  const CapMatrix B{{1}};
  Net net(1, A, B, C);
  MaxFlowOptions opts;
  opts.big = 10;
  opts.at_least_once = true;
  CHECK(run_max_flow(net.engine, net.fs, net.engine.constant(0), opts) == 1);
  CHECK(net.v(net.fs.flow) == 1);
}

TEST_CASE("Edmonds-Karp on an explicit graph") {
  // s -> 1 (3), s -> 2 (2), 1 -> 2 (1), 1 -> t (2), 2 -> t (3)
  std::vector<std::vector<Rational>> cap(4, std::vector<Rational>(4, 0));
  cap[0][1] = 3;
  cap[0][2] = 2;
  cap[1][2] = 1;
  cap[1][3] = 2;
  cap[2][3] = 3;
  CHECK(edmonds_karp(cap) == 5);
  cap[0][2] = Rational(1, 2);
  CHECK(edmonds_karp(cap) == Rational(7, 2));
}

}  // namespace
}  // namespace ppcc
