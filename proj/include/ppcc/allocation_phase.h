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

// The iterative core: pick the subset of unserved agents with minimum
// average demand, mark its intervals as taken, and split them by max-flow.

#ifndef PPCC_ALLOCATION_PHASE_H_
#define PPCC_ALLOCATION_PHASE_H_

#include <cstdint>
#include <vector>

#include "ppcc/config.h"
#include "ppcc/engine.h"
#include "ppcc/flow.h"
#include "ppcc/intervals_phase.h"
#include "ppcc/trace.h"

namespace ppcc {

struct IterationState {
  std::vector<Sharing> best;  // BestSubset(i)
  Sharing min_len;
  Sharing size_best;
  Sharing c_star;  // polynomial mode only
  bool has_c_star = false;
  std::vector<Sharing> selected;  // SelectedInterval(k)
};

// Subset u in 1..2^n-1 holds agent i when bit i-1 of u is set.
std::vector<int> subset_members(unsigned u, int n);

struct LenStar {
  Sharing len;
  Sharing legal;  // h
  Sharing len_star;
};

// Len, h and Len* for every subset u = 1..2^n-1 in one batch; entry u-1.
std::vector<LenStar> compute_len_star_all(Engine& engine,
                                          const ProtocolState& st);
LenStar compute_len_star(Engine& engine, const ProtocolState& st,
                         const std::vector<int>& members);

// Folds one candidate into the running best with a strict comparison.
void oblivious_best_update(Engine& engine, IterationState& it,
                           const std::vector<int>& members,
                           const Sharing& len_star);

IterationState select_subset_exhaustive(Engine& engine,
                                        const ProtocolState& st);

// 1{c is feasible}: a flow of c per unserved agent exists. Works on
// scratch flow registers; `st` is not modified.
Sharing is_feasible(Engine& engine, const ProtocolState& st, const Sharing& c,
                    bool at_least_once = false, int* loops = nullptr);

// Largest feasible c, i.e. n! times the minimum average demand.
Sharing capacity_binary_search(Engine& engine, const ProtocolState& st,
                               const ProtocolConfig& cfg);

// Unserved agents on the sink side of the minimum cut of G(c + 1).
std::vector<Sharing> extract_min_subset(Engine& engine,
                                        const ProtocolState& st,
                                        const Sharing& c_star,
                                        bool at_least_once);

IterationState select_subset_polynomial(Engine& engine,
                                        const ProtocolState& st,
                                        const ProtocolConfig& cfg);

// AgentsServed, NumAgentsServed, SelectedInterval and IntervalAvailable.
void update_served_and_available(Engine& engine, IterationState& it,
                                 ProtocolState& st, Fault fault);

struct AssignOutcome {
  FlowState flow;
  int loops = 0;
};

AssignOutcome assign_cake_to_selected(Engine& engine, const IterationState& it,
                                      ProtocolState& st, bool at_least_once);

struct AllocationRun {
  int iterations = 0;
  std::vector<IterationSnapshot> snapshots;
};

// `snapshots` reads registers through the auditor view after each
// iteration; it does not change the transcript.
AllocationRun run_iterative_allocation(Engine& engine, ProtocolState& st,
                                       const ProtocolConfig& cfg,
                                       bool snapshots = true);

}  // namespace ppcc

#endif  // PPCC_ALLOCATION_PHASE_H_
