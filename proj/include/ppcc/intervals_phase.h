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

// Splits the cake at every shared endpoint and sets up the registers that
// the iterative allocation works on.

#ifndef PPCC_INTERVALS_PHASE_H_
#define PPCC_INTERVALS_PHASE_H_

#include <cstdint>
#include <vector>

#include "ppcc/engine.h"
#include "ppcc/sharing_phase.h"

namespace ppcc {

struct ProtocolState {
  int n = 0;
  int m = 0;  // number of boundaries; intervals are 1..m-1
  std::int64_t Q = 0;
  std::vector<Sharing> W;                // m
  std::vector<Sharing> len;              // m-1
  std::vector<Sharing> available;        // m-1
  std::vector<std::vector<Sharing>> desired;     // [i][k]
  std::vector<std::vector<Sharing>> allocation;  // [i][k]
  std::vector<Sharing> denominator;      // n
  std::vector<Sharing> served;           // n
  Sharing num_served;

  int intervals() const { return m - 1; }
};

// Bits needed so that 2^h > Q.
int rank_bits(std::int64_t Q);

ProtocolState run_intervals_phase(Engine& engine,
                                  const SharedValuationSet& sv);

// Desirability bits [i][k] for all agents and intervals in one batch.
std::vector<std::vector<Sharing>> compute_interval_desired(
    Engine& engine, const SharedValuationSet& sv,
    const std::vector<Sharing>& W, const std::vector<Sharing>& len);

}  // namespace ppcc

#endif  // PPCC_INTERVALS_PHASE_H_
