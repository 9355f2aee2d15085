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

// Transcript audits: message accounting, share uniformity and the list of
// values reconstructed before the output.

#ifndef PPCC_AUDIT_H_
#define PPCC_AUDIT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ppcc/transcript.h"

namespace ppcc {

struct GateRow {
  std::string gate;
  std::uint64_t invocations = 0;
  std::uint64_t elements = 0;
  std::uint64_t messages = 0;
};

struct MessageAudit {
  int n = 0;
  std::vector<GateRow> rows;
  std::uint64_t mul_invocations = 0;
  std::uint64_t mul_messages = 0;
  bool per_mul_exact = false;  // every mul batch cost exactly n(n-1)
  std::uint64_t total_messages = 0;
  std::uint64_t primitive_invocations = 0;  // input, mul, open, reveal
  double c = 0;  // total / (n^2 * primitive invocations)
  bool within_bound = false;  // c <= 1

  std::string text() const;
};

// per_mul_exact needs the per-invocation gate log, i.e. a recording
// transcript; otherwise it falls back to the aggregate ratio.
MessageAudit audit_messages(const Transcript& t, int n);

struct CoalitionTest {
  std::vector<int> parties;
  double statistic = 0;
  double critical = 0;
  bool pass = false;
};

struct ShareAudit {
  int n = 0;
  int t = 0;
  int samples = 0;
  int bins = 0;
  double alpha = 0;
  std::vector<CoalitionTest> tests;  // every coalition of t-1 parties
  bool pass = true;

  std::string text() const;
};

// Shares one fixed secret `samples` times and runs a chi-square test on
// the binned joint distribution of every (t-1)-party view.
ShareAudit audit_shares(int n, std::uint64_t secret, int samples, int bins,
                        double alpha, std::uint64_t seed);

struct LeakageEntry {
  std::string source;
  RevealKind kind;
  std::uint64_t count = 0;
  bool declared = false;
};

struct LeakageAudit {
  std::vector<LeakageEntry> entries;  // in order of first appearance
  bool only_declared = true;
  bool bits_only = true;  // guards and flags are 0/1
  // Output values reach their owner only (restricted visibility).
  bool outputs_owner_only = true;
  std::uint64_t misaddressed = 0;

  std::string text() const;
};

// Reconstructions that are allowed before the output.
bool is_declared_source(RevealKind kind, const std::string& source);

LeakageAudit audit_leakage(const Transcript& t);

}  // namespace ppcc

#endif  // PPCC_AUDIT_H_
