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

// End-to-end simulation: parameter agreement, sharing with integrity
// checks, interval construction, iterative allocation and final serving.

#ifndef PPCC_PROTOCOL_H_
#define PPCC_PROTOCOL_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ppcc/config.h"
#include "ppcc/serving_phase.h"
#include "ppcc/sharing_phase.h"
#include "ppcc/trace.h"
#include "ppcc/transcript.h"
#include "ppcc/valuation.h"

namespace ppcc {

// One agent's private input as it enters the protocol. `endpoints` are
// on the 1/10^digits grid and unpadded; nothing is validated up front.
struct AgentInput {
  std::vector<std::int64_t> endpoints;  // a_1, b_1, ..., scaled by 10^digits
  int digits = 0;
  int declared_ell = 0;
};

// Honest input from a valuation. Throws ValuationError for endpoints
// without a terminating decimal expansion.
AgentInput honest_input(const PiecewiseUniformValuation& v);

struct RunResult {
  bool aborted = false;
  std::vector<int> cheaters;
  Allocation allocation;
  int L = 0;
  int d = 0;
  std::int64_t Q = 0;
  int ell = 0;
  std::uint64_t prime = 0;
  int iterations = 0;
  ProtocolTrace trace;
  std::shared_ptr<Transcript> transcript;
};

RunResult run_protocol(std::span<const AgentInput> inputs,
                       const ProtocolConfig& cfg);
RunResult run_protocol(std::span<const PiecewiseUniformValuation> vs,
                       const ProtocolConfig& cfg);

}  // namespace ppcc

#endif  // PPCC_PROTOCOL_H_
