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

// Final serving: turns the secret allocation registers into concrete
// pieces and delivers each piece to its owner.

#ifndef PPCC_SERVING_PHASE_H_
#define PPCC_SERVING_PHASE_H_

#include <vector>

#include "ppcc/config.h"
#include "ppcc/engine.h"
#include "ppcc/intervals_phase.h"
#include "ppcc/trace.h"
#include "ppcc/valuation.h"

namespace ppcc {

// Per agent (0-based), ascending, non-empty half-open pieces of [0, 1).
using Allocation = std::vector<std::vector<Interval>>;

struct Classification {
  std::vector<std::vector<Sharing>> relevant;  // [i][k] 1{0 < allocation}
  std::vector<Sharing> exclusive;              // [k] 0 or the sole owner
};

Classification classify_exclusive(Engine& engine, const ProtocolState& st);

struct ServingResult {
  Allocation allocation;
  std::vector<PortionMessage> portions;  // every delivered message, in order
};

// Delivers one (start, end) pair to agent i; broadcast in full visibility.
struct Delivery {
  Engine& engine;
  Visibility visibility;

  std::int64_t send(int agent, const Sharing& x, const char* what);
};

// Interval k (0-based) shared by several agents or by none.
void serve_nonexclusive(Engine& engine, const ProtocolState& st,
                        const Classification& cls, int k, Delivery& out,
                        ServingResult& result);

// Run of intervals k.. owned by one agent; returns one past its end.
int serve_exclusive_run(Engine& engine, const ProtocolState& st,
                        const Classification& cls, int k, Delivery& out,
                        ServingResult& result);

ServingResult run_final_serving(Engine& engine, const ProtocolState& st,
                                Visibility visibility,
                                Classification* cls_out = nullptr);

}  // namespace ppcc

#endif  // PPCC_SERVING_PHASE_H_
