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

// Distribution of valuation shares with integrity checks, and agreement
// on the public parameters L, d and Q.

#ifndef PPCC_SHARING_PHASE_H_
#define PPCC_SHARING_PHASE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "ppcc/engine.h"

namespace ppcc {

// What agent i actually submits. Honest agents send their padded
// endpoints and true interval count; a cheater may send anything.
struct SubmittedValuation {
  std::vector<std::int64_t> endpoints;  // 2L entries a_1, b_1, ...
  std::int64_t ell = 0;
};

// Smallest power of two >= every declared count (at least 1). Agreed in
// the clear before any sharing.
int agree_interval_bound(std::span<const int> declared_ells);

// Secure maximum of the agents' digit counts, revealed as a public bound.
int agree_digits(Engine& engine, std::span<const int> digits);

struct SharedValuationSet {
  int n = 0;
  int L = 0;
  int ell = 0;  // slots kept after the optional ell computation
  std::int64_t Q = 0;
  std::vector<std::vector<Sharing>> a;  // [i][j], j < ell
  std::vector<std::vector<Sharing>> b;
  std::vector<Sharing> ell_i;
};

struct SharingOutcome {
  bool aborted = false;
  std::vector<int> cheaters;  // 1-based, ascending
  SharedValuationSet shared;
};

// Each submission must carry exactly 2L endpoints. With `strict_no_ell`
// the ell computation is skipped and all L slots are kept.
SharingOutcome run_sharing_phase(Engine& engine,
                                 std::span<const SubmittedValuation> inputs,
                                 int L, std::int64_t Q, bool strict_no_ell);

}  // namespace ppcc

#endif  // PPCC_SHARING_PHASE_H_
