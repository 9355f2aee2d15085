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

// Plaintext references for CC_puv.
//
// cc_puv_allocate mirrors the secure protocol register by register, with
// the same enumeration order, tie-breaking and flow scan, so its trace and
// allocation must match exactly. naive_cc_puv is an order-free second
// implementation on rationals that only agrees on per-agent amounts; it
// guards against bugs shared by the mirror and the protocol.

#ifndef PPCC_ORACLE_H_
#define PPCC_ORACLE_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ppcc/config.h"
#include "ppcc/serving_phase.h"
#include "ppcc/trace.h"
#include "ppcc/valuation.h"

namespace ppcc {

struct PlainInstance {
  int n = 0;
  std::int64_t Q = 0;
  int slots = 0;  // ell used by the interval phase
  std::vector<IntegerValuation> valuations;  // padded to `slots`
};

// Same public parameters the protocol would agree on.
PlainInstance make_instance(std::span<const PiecewiseUniformValuation> vs,
                            bool strict_no_ell = false);
PlainInstance make_instance(std::span<const IntegerValuation> vs,
                            bool strict_no_ell = false);

// --- max-flow on the source -> interval -> agent -> target graph ----------

struct PlainFlow {
  std::vector<std::int64_t> A, C;          // residuals
  std::vector<std::vector<std::int64_t>> B;  // [k][i]
  std::vector<std::int64_t> a, c;
  std::vector<std::vector<std::int64_t>> b;  // [k][i]
  std::int64_t flow = 0;
};

PlainFlow make_plain_flow(std::vector<std::int64_t> A,
                          std::vector<std::vector<std::int64_t>> B,
                          std::vector<std::int64_t> C);
void plain_greedy_pass(PlainFlow& f);
// Returns 1 when an augmenting path was found (and pushed).
int plain_augment_step(PlainFlow& f, std::int64_t big);
// Agents reachable from the source in the residual graph.
std::vector<int> plain_reachable_agents(const PlainFlow& f);
// Same loop and guard semantics as run_max_flow.
int plain_run_max_flow(PlainFlow& f, std::int64_t target, bool stop_on_stall,
                       bool at_least_once, std::int64_t big);

// Greedy-plus-augment flow run to the maximum.
PlainFlow max_flow_plain(std::vector<std::int64_t> A,
                         std::vector<std::vector<std::int64_t>> B,
                         std::vector<std::int64_t> C);

// Textbook Edmonds-Karp on an explicit capacity matrix; node 0 is the
// source and node size-1 the target.
Rational edmonds_karp(std::vector<std::vector<Rational>> cap);

// Edmonds-Karp value of the same layered graph.
Rational layered_max_flow(std::span<const std::int64_t> A,
                          const std::vector<std::vector<std::int64_t>>& B,
                          std::span<const std::int64_t> C);

// --- the register-level mirror -------------------------------------------

struct OracleOptions {
  SearchMode mode = SearchMode::kExhaustive;
  bool pad_iterations = false;
};

struct OracleResult {
  Allocation allocation;
  ProtocolTrace trace;
  int iterations = 0;
  // n! times the minimum average demand over legal subsets, by enumeration,
  // at the start of each iteration.
  std::vector<std::int64_t> min_average;
  // Whether that minimum is attained by exactly one legal subset.
  std::vector<bool> unique_minimizer;
};

OracleResult cc_puv_allocate(const PlainInstance& inst,
                             const OracleOptions& opts = {});

// --- the order-free reference --------------------------------------------

struct NaiveResult {
  std::vector<Rational> amount;  // length each agent receives
  std::vector<int> round;        // recursion level that served the agent
};

NaiveResult naive_cc_puv(std::span<const PiecewiseUniformValuation> vs);

// --- fairness -------------------------------------------------------------

struct FairnessReport {
  bool envy_free = true;
  bool proportional = true;
  std::string detail;  // first failure, empty when both hold
};

FairnessReport check_fairness(std::span<const PiecewiseUniformValuation> vs,
                              const Allocation& alloc);

Rational total_length(std::span<const Interval> pieces);

// --- corpus ---------------------------------------------------------------

// n agents, each with 1..max_intervals disjoint intervals whose endpoints
// are drawn without repetition from the 1/10^digits grid.
std::vector<PiecewiseUniformValuation> random_valuations(std::mt19937_64& rng,
                                                         int n,
                                                         int max_intervals,
                                                         int digits);

// --- strategyproofness ----------------------------------------------------

// All valuations on the 1/Q grid with 1..max_intervals support intervals
// separated by gaps.
std::vector<IntegerValuation> grid_valuations(std::int64_t Q,
                                              int max_intervals);

struct StrategyproofReport {
  std::uint64_t profiles = 0;
  std::uint64_t deviations = 0;
  std::uint64_t violations = 0;
  std::string first_violation;
};

// n = 2: every truthful profile and every unilateral grid misreport.
StrategyproofReport check_strategyproof_grid(std::int64_t Q,
                                             int max_intervals);

// Unilateral misreports of agent `agent` (1-based) in a fixed profile.
StrategyproofReport check_strategyproof(
    std::span<const IntegerValuation> truth, int agent,
    std::span<const IntegerValuation> misreports);

}  // namespace ppcc

#endif  // PPCC_ORACLE_H_
