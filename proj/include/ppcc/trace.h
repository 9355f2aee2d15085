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

// Plaintext snapshots of protocol registers. The secure protocol fills
// these through the auditor view; the register-level oracle fills them
// directly, so the two can be compared field by field.

#ifndef PPCC_TRACE_H_
#define PPCC_TRACE_H_

#include <cstdint>
#include <string>
#include <vector>

namespace ppcc {

using Matrix = std::vector<std::vector<std::int64_t>>;

struct IterationSnapshot {
  std::vector<std::int64_t> best_subset;
  std::int64_t min_len = 0;
  std::int64_t size_best = 0;
  std::int64_t c_star = -1;  // polynomial mode only
  std::vector<std::int64_t> served;
  std::vector<std::int64_t> selected;
  std::vector<std::int64_t> available;
  Matrix flow;  // b[k][i]
  std::int64_t total_flow = 0;
  int flow_loops = 0;
};

struct PortionMessage {
  int agent = 0;
  int k = 0;  // first interval, 1-based
  int j = 0;  // one past the last interval
  bool exclusive = false;
  std::int64_t start = 0;
  std::int64_t end = 0;
};

struct ProtocolTrace {
  std::vector<std::int64_t> W;
  std::vector<std::int64_t> interval_len;
  Matrix desired;  // [i][k]
  std::vector<IterationSnapshot> iterations;
  Matrix allocation;  // [i][k]
  std::vector<std::int64_t> denominator;
  std::vector<std::int64_t> exclusive;
  std::vector<PortionMessage> portions;
};

// First difference between two traces, or an empty `phase` when equal.
struct TraceDivergence {
  std::string phase;
  int iteration = 0;  // 1-based, 0 outside the iterative phase
  std::string reg;
  int index = 0;
  std::string expected;
  std::string actual;

  bool empty() const { return phase.empty(); }
  std::string describe() const;
};

// Compares `actual` against `expected`. c_star is compared only when both
// sides carry it.
TraceDivergence compare_traces(const ProtocolTrace& expected,
                               const ProtocolTrace& actual);

}  // namespace ppcc

#endif  // PPCC_TRACE_H_
