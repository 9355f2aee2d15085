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

#include "ppcc/transcript.h"

#include <ostream>

namespace ppcc {

const char* gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kInput: return "input";
    case GateKind::kMul: return "mul";
    case GateKind::kOpen: return "open";
    case GateKind::kReveal: return "reveal";
    case GateKind::kLsb: return "lsb";
    case GateKind::kLessThan: return "less_than";
    case GateKind::kEqZero: return "eq_zero";
    case GateKind::kMin: return "min";
    case GateKind::kMax: return "max";
    case GateKind::kOr: return "or";
    case GateKind::kHalve: return "halve";
    case GateKind::kBitDecompose: return "bit_decompose";
    case GateKind::kDiv: return "div";
    case GateKind::kKthRanked: return "kth_ranked";
    case GateKind::kCount_: break;
  }
  return "?";
}

const char* reveal_kind_name(RevealKind kind) {
  switch (kind) {
    case RevealKind::kLoopGuard: return "loop_guard";
    case RevealKind::kCheaterFlag: return "cheater_flag";
    case RevealKind::kPublicBound: return "public_bound";
    case RevealKind::kOutput: return "output";
  }
  return "?";
}

void Transcript::add_message(const RoundMessage& m) {
  ++total_messages_;
  if (record_) messages_.push_back(m);
}

void Transcript::add_gate(const GateRecord& g, std::uint64_t elements) {
  auto& s = summary_[static_cast<int>(g.kind)];
  ++s.invocations;
  s.elements += elements;
  s.messages += g.messages;
  if (record_) gate_log_.push_back(g);
}

std::vector<RevealRecord> Transcript::leakage() const {
  std::vector<RevealRecord> out;
  for (const auto& r : reveals_) {
    if (r.kind != RevealKind::kOutput) out.push_back(r);
  }
  return out;
}

void Transcript::write(std::ostream& os) const {
  os << "# messages\n";
  os << "round,from,to,payload_len\n";
  for (const auto& m : messages_) {
    os << m.round << ',' << m.from << ',' << m.to << ',' << m.payload_len
       << '\n';
  }
  os << "# gates\n";
  os << "gate,invocations,elements,messages\n";
  for (int k = 0; k < static_cast<int>(GateKind::kCount_); ++k) {
    const auto& s = summary_[k];
    if (s.invocations == 0) continue;
    os << gate_name(static_cast<GateKind>(k)) << ',' << s.invocations << ','
       << s.elements << ',' << s.messages << '\n';
  }
  os << "# totals\n";
  os << "rounds," << round_ << '\n';
  os << "messages," << total_messages_ << '\n';
  os << "masked_openings," << masked_openings_ << '\n';
  os << "# leakage\n";
  os << "round,kind,source,target,value\n";
  for (const auto& r : reveals_) {
    if (r.kind == RevealKind::kOutput) continue;
    os << r.round << ',' << reveal_kind_name(r.kind) << ',' << r.source << ','
       << r.target << ',' << r.value << '\n';
  }
}

}  // namespace ppcc
