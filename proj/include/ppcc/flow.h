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

// Oblivious max-flow on the fixed graph source -> interval k -> agent i ->
// target with secret capacities A_k, B_{k,i}, C_i.
//
// Each loop iteration runs one greedy pass over (k, i) in ascending order
// and then one augmenting-path step in the residual graph, reverse edges
// included. The greedy pass alone can stop short of the maximum, since
// it never undoes an earlier choice; the augmenting step guarantees
// progress whenever the current flow is not maximal.

#ifndef PPCC_FLOW_H_
#define PPCC_FLOW_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "ppcc/engine.h"

namespace ppcc {

struct FlowState {
  int K = 0;
  int n = 0;
  // Residual capacities.
  std::vector<Sharing> A;               // [k]
  std::vector<std::vector<Sharing>> B;  // [k][i]
  std::vector<Sharing> C;               // [i]
  // Flow registers.
  std::vector<Sharing> a;
  std::vector<std::vector<Sharing>> b;
  std::vector<Sharing> c;
  Sharing flow;
};

FlowState make_flow_state(Engine& engine, std::vector<Sharing> A,
                          std::vector<std::vector<Sharing>> B,
                          std::vector<Sharing> C);

// One pass of min(A_k, B_{k,i}, C_i) pushes in (k outer, i inner) order.
// Cells on one anti-diagonal k + i touch disjoint registers, so each
// diagonal is evaluated as one batch with the same result as the
// sequential scan.
void greedy_pass(Engine& engine, FlowState& fs);

struct Reachability {
  std::vector<Sharing> from_source;  // [k] residual A_k > 0
  std::vector<Sharing> interval;     // [k] reachable from the source
  std::vector<Sharing> agent;        // [i]
  std::vector<std::vector<Sharing>> agent_pred;     // [i][k], one-hot
  std::vector<std::vector<Sharing>> interval_pred;  // [k][i], one-hot
  std::vector<Sharing> endpoint;  // [i] lowest reached agent with C_i > 0
  Sharing found;
};

// Breadth-first reachability over n layers. Predecessors are the lowest
// indexed node that reaches a node in the layer where it is first seen.
Reachability residual_reachability(Engine& engine, const FlowState& fs);

// Pushes the bottleneck along the path to `endpoint`; a no-op when no path
// exists. `big` must exceed every residual capacity. Returns `found`.
Sharing augment_step(Engine& engine, FlowState& fs, std::int64_t big);

struct MaxFlowOptions {
  // Also stop, after a loop that made no progress, when the target may be
  // out of reach.
  bool stop_on_stall = false;
  // Evaluate the first guard only after one loop.
  bool at_least_once = false;
  std::int64_t big = 0;
  std::string_view source = "flow<target";
};

// Loops while the revealed guard 1{flow < target} (times the progress bit
// with stop_on_stall) is 1. Returns the number of loops.
int run_max_flow(Engine& engine, FlowState& fs, const Sharing& target,
                 const MaxFlowOptions& opts);

}  // namespace ppcc

#endif  // PPCC_FLOW_H_
