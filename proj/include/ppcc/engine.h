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

// Simulated honest-majority MPC runtime over Shamir sharings.
//
// All n parties run in lockstep inside one process. Every interactive step
// is one synchronous round: each party fills its outbox, the round closes,
// and only then are inboxes read. Batched entry points evaluate many
// independent gates in the same rounds, so a batch of B multiplications
// still costs n(n-1) messages, each carrying B field elements.
//
// Bit-level gates (lsb, comparison, equality, bit decomposition) open
// x + r for a dealer mask r that is uniform in F_p and whose bits are
// shared, then finish with arithmetic on the shared bits of r.

#ifndef PPCC_ENGINE_H_
#define PPCC_ENGINE_H_

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "ppcc/dealer.h"
#include "ppcc/field.h"
#include "ppcc/shamir.h"
#include "ppcc/transcript.h"

namespace ppcc {

struct DivResult {
  Sharing quotient;
  Sharing remainder;
  std::vector<Sharing> quotient_bits;  // most significant first
};

class Engine {
 public:
  // `seed` derives every party generator and, when `dealer` is null, the
  // default TrustedDealer.
  Engine(ShareParams params, PrimeModulus modulus, std::uint64_t seed,
         std::shared_ptr<Transcript> transcript,
         std::unique_ptr<Dealer> dealer = nullptr);
  ~Engine();

  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const ShareParams& params() const { return params_; }
  const PrimeModulus& modulus() const { return mod_; }
  int n() const { return params_.n; }
  Transcript& transcript() { return *transcript_; }
  const Dealer& dealer() const { return *dealer_; }

  // --- local operations (no messages) ---------------------------------
  Sharing constant(std::int64_t alpha) const;
  // alpha + beta * u + gamma * v
  Sharing affine(std::int64_t alpha, std::int64_t beta, const Sharing& u,
                 std::int64_t gamma, const Sharing& v) const;
  Sharing add(const Sharing& u, const Sharing& v) const;
  Sharing sub(const Sharing& u, const Sharing& v) const;
  Sharing add_const(const Sharing& u, std::int64_t c) const;
  Sharing scale(const Sharing& u, std::int64_t c) const;
  Sharing one_minus(const Sharing& u) const { return affine(1, -1, u, 0, u); }
  Sharing sum(std::span<const Sharing> xs) const;

  // --- sharing and reconstruction -------------------------------------
  Sharing input(PartyId owner, std::uint64_t secret);
  std::vector<Sharing> input(PartyId owner,
                             std::span<const std::uint64_t> secrets);

  // Broadcast reconstruction, logged as a reveal of the given kind.
  // `subject` names the agent the value belongs to, if any.
  std::uint64_t reveal(const Sharing& x, RevealKind kind,
                       std::string_view source, int subject = 0);
  // The t-1 lowest-indexed other parties send their shares to `target`
  // only; nobody else learns the value.
  std::uint64_t reveal_to(PartyId target, const Sharing& x, RevealKind kind,
                          std::string_view source, int subject = 0);
  // Broadcast opening of dealer-masked values (uniform, not leakage).
  std::vector<std::uint64_t> open_masked(std::span<const Sharing> xs);

  // Auditor view: reconstructs without any message or log entry. Used by
  // traces and tests only.
  std::uint64_t peek(const Sharing& x) const;

  // --- gates ------------------------------------------------------------
  Sharing mul(const Sharing& u, const Sharing& v);
  std::vector<Sharing> mul(std::span<const Sharing> u,
                           std::span<const Sharing> v);

  // x mod 2 for any x in [0, p).
  Sharing lsb(const Sharing& x);
  std::vector<Sharing> lsb(std::span<const Sharing> xs);

  // 1{u < v}; requires |u - v| < p/2 (both in [0, M]).
  Sharing less_than(const Sharing& u, const Sharing& v);
  std::vector<Sharing> less_than(std::span<const Sharing> u,
                                 std::span<const Sharing> v);

  // 1{x = 0}; requires |x| < p/2.
  Sharing eq_zero(const Sharing& x);
  std::vector<Sharing> eq_zero(std::span<const Sharing> xs);
  Sharing eq(const Sharing& u, const Sharing& v) { return eq_zero(sub(u, v)); }

  Sharing min(const Sharing& u, const Sharing& v);
  std::vector<Sharing> min(std::span<const Sharing> u,
                           std::span<const Sharing> v);
  Sharing max(const Sharing& u, const Sharing& v);
  std::vector<Sharing> max(std::span<const Sharing> u,
                           std::span<const Sharing> v);

  // Bits only.
  Sharing or_(const Sharing& u, const Sharing& v);
  std::vector<Sharing> or_(std::span<const Sharing> u,
                           std::span<const Sharing> v);
  // Balanced-tree OR; empty input gives a sharing of 0.
  Sharing or_all(std::span<const Sharing> bits);
  // or_all over each group, all groups evaluated in the same rounds.
  std::vector<Sharing> or_all_batch(
      const std::vector<std::vector<Sharing>>& groups);

  // floor(x / 2) = inv(2) * (x - lsb(x)).
  Sharing halve(const Sharing& x);

  // s = modulus().bits() bit sharings, most significant first.
  std::vector<Sharing> bit_decompose(const Sharing& x);
  std::vector<std::vector<Sharing>> bit_decompose(std::span<const Sharing> xs);

  // Binary long division. u_bits most significant first; v > 0 and
  // 2v < p/2.
  DivResult div(const Sharing& u, std::span<const Sharing> u_bits,
                const Sharing& v);
  std::vector<DivResult> div(const std::vector<std::vector<Sharing>>& u_bits,
                             std::span<const Sharing> v);

  // k-th smallest (1-based, duplicates counted) of values in [0, 2^h).
  Sharing kth_ranked(std::span<const Sharing> data, int k, int h);
  std::vector<Sharing> kth_ranked(std::span<const Sharing> data,
                                  std::span<const int> ks, int h);

 private:
  class Scope;
  using Mailbox = std::vector<std::vector<std::vector<std::uint64_t>>>;

  Mailbox empty_mailbox() const;
  // Records every non-empty outbox[from][to] as one message, closes the
  // round, and returns inbox[to][from].
  Mailbox exchange(Mailbox outbox, MessageTag tag, int subject = 0);
  MaskTuple take_mask();
  void check(const Sharing& x) const;
  // Parties (0-based) whose shares reach `recipient` in a reconstruction.
  const std::vector<int>& senders_for(int recipient) const {
    return senders_[recipient];
  }
  std::uint64_t interpolate_for(int recipient, const Sharing& x) const;
  // 1{c < r} for public c and shared little-endian bits of r.
  std::vector<Sharing> public_less_than_bits(
      std::span<const std::uint64_t> c,
      const std::vector<const std::vector<Sharing>*>& r_bits);

  ShareParams params_;
  PrimeModulus mod_;
  std::shared_ptr<Transcript> transcript_;
  std::unique_ptr<Dealer> dealer_;
  std::vector<Rng> party_rng_;
  std::vector<std::uint64_t> lambda_all_;
  std::vector<std::vector<int>> senders_;
  std::vector<std::vector<std::uint64_t>> lambda_recipient_;
  std::uint64_t last_tape_id_ = 0;
  int depth_ = 0;
};

}  // namespace ppcc

#endif  // PPCC_ENGINE_H_
