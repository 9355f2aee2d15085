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

#ifndef PPCC_TRANSCRIPT_H_
#define PPCC_TRANSCRIPT_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ppcc {

enum class MessageTag : std::uint8_t {
  kInput,    // owner distributes shares of a private value
  kReshare,  // degree reduction inside a multiplication
  kOpen,     // broadcast opening of a dealer-masked value
  kReveal,   // reconstruction of a protocol value (guard, flag, output)
};

struct RoundMessage {
  std::uint32_t round = 0;
  int from = 0;
  int to = 0;
  std::uint32_t payload_len = 0;
  MessageTag tag = MessageTag::kReshare;
  // For kReveal: the agent the revealed value is about (0 when none).
  int subject = 0;
};

enum class GateKind : std::uint8_t {
  kInput,
  kMul,
  kOpen,
  kReveal,
  kLsb,
  kLessThan,
  kEqZero,
  kMin,
  kMax,
  kOr,
  kHalve,
  kBitDecompose,
  kDiv,
  kKthRanked,
  kCount_,
};

const char* gate_name(GateKind kind);

struct GateRecord {
  GateKind kind;
  std::uint32_t first_round;
  std::uint32_t last_round;
  std::uint64_t messages;
  int depth;
};

struct GateSummary {
  std::uint64_t invocations = 0;
  std::uint64_t elements = 0;
  std::uint64_t messages = 0;
};

enum class RevealKind : std::uint8_t {
  kLoopGuard,    // declared leakage: control-flow bits
  kCheaterFlag,  // declared leakage: Cheater_i bits
  kPublicBound,  // declared leakage: agreed d and computed ell
  kOutput,       // allocation output
};

const char* reveal_kind_name(RevealKind kind);

struct RevealRecord {
  RevealKind kind;
  std::string source;
  int target;  // 0 = every party
  int subject;
  std::uint64_t value;
  std::uint32_t round;
};

// Round-ordered log of one simulated execution. Message records and the
// per-invocation gate log are kept only when `record` is set; counters and
// reveals are always kept.
class Transcript {
 public:
  explicit Transcript(bool record = false) : record_(record) {}

  bool recording() const { return record_; }
  std::uint32_t round() const { return round_; }
  std::uint32_t close_round() { return round_++; }

  void add_message(const RoundMessage& m);
  void add_gate(const GateRecord& g, std::uint64_t elements);
  void add_reveal(RevealRecord r) { reveals_.push_back(std::move(r)); }
  void count_masked_openings(std::uint64_t k) { masked_openings_ += k; }

  std::uint64_t total_messages() const { return total_messages_; }
  std::uint64_t masked_openings() const { return masked_openings_; }
  const std::vector<RoundMessage>& messages() const { return messages_; }
  const std::vector<GateRecord>& gate_log() const { return gate_log_; }
  const std::vector<RevealRecord>& reveals() const { return reveals_; }
  const GateSummary& summary(GateKind k) const {
    return summary_[static_cast<int>(k)];
  }

  // Reveals of kind other than kOutput.
  std::vector<RevealRecord> leakage() const;

  // Line format: header, `round,from,to,payload_len` per message, then the
  // gate summary table and the declared-leakage list.
  void write(std::ostream& os) const;

 private:
  bool record_;
  std::uint32_t round_ = 0;
  std::uint64_t total_messages_ = 0;
  std::uint64_t masked_openings_ = 0;
  std::vector<RoundMessage> messages_;
  std::vector<GateRecord> gate_log_;
  std::vector<RevealRecord> reveals_;
  std::array<GateSummary, static_cast<int>(GateKind::kCount_)> summary_{};
};

}  // namespace ppcc

#endif  // PPCC_TRANSCRIPT_H_
