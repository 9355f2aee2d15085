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

#include "ppcc/protocol.h"

#include <stdexcept>

#include "ppcc/allocation_phase.h"
#include "ppcc/engine.h"
#include "ppcc/intervals_phase.h"

namespace ppcc {

namespace {

// Digit counts never exceed 18, so a tiny field is enough to agree on d.
constexpr std::uint64_t kBootstrapBound = 64;
constexpr std::uint64_t kBootstrapSalt = 0xb0075eedULL;

std::vector<std::int64_t> peek_all(const Engine& e,
                                   const std::vector<Sharing>& xs) {
  std::vector<std::int64_t> out;
  const std::uint64_t p = e.modulus().p();
  for (const auto& x : xs) {
    const std::uint64_t v = e.peek(x);
    out.push_back(v > p / 2 ? -static_cast<std::int64_t>(p - v)
                            : static_cast<std::int64_t>(v));
  }
  return out;
}

}  // namespace

AgentInput honest_input(const PiecewiseUniformValuation& v) {
  AgentInput in;
  in.digits = required_digits(v);
  in.declared_ell = v.size();
  const std::int64_t scale = pow10(in.digits);
  for (const auto& iv : v.intervals()) {
    for (const Rational* x : {&iv.lo, &iv.hi}) {
      const Rational s = *x * scale;
      in.endpoints.push_back(
          static_cast<std::int64_t>(boost::multiprecision::numerator(s)));
    }
  }
  return in;
}

RunResult run_protocol(std::span<const AgentInput> inputs,
                       const ProtocolConfig& cfg) {
  const int n = static_cast<int>(inputs.size());
  if (n < 1) throw std::invalid_argument("at least one agent required");
  RunResult res;
  res.transcript = std::make_shared<Transcript>(cfg.record_messages);
  const ShareParams params = ShareParams::for_parties(n);

  // Public bounds: L in the clear, d through a secure maximum.
  std::vector<int> ells, digits;
  for (const auto& in : inputs) {
    if (in.endpoints.size() % 2 != 0) {
      throw std::invalid_argument("endpoints come in pairs");
    }
    ells.push_back(in.declared_ell);
    digits.push_back(in.digits);
  }
  res.L = agree_interval_bound(ells);
  {
    Engine boot(params, PrimeModulus::smallest_above(kBootstrapBound),
                cfg.seed ^ kBootstrapSalt, res.transcript);
    res.d = agree_digits(boot, digits);
  }
  res.Q = pow10(res.d);
  const PrimeModulus mod = choose_prime(n, res.Q, cfg.prime);
  res.prime = mod.p();
  Engine engine(params, mod, cfg.seed, res.transcript);

  std::vector<SubmittedValuation> subs;
  for (const auto& in : inputs) {
    SubmittedValuation s;
    const std::int64_t up = pow10(res.d - std::min(in.digits, res.d));
    for (std::int64_t x : in.endpoints) s.endpoints.push_back(x * up);
    if (static_cast<int>(s.endpoints.size()) > 2 * res.L) {
      // More intervals than declared: submit the first L; the padding or
      // ordering test flags the agent.
      s.endpoints.resize(2 * static_cast<std::size_t>(res.L));
    }
    s.endpoints.resize(2 * static_cast<std::size_t>(res.L), res.Q);
    s.ell = in.declared_ell;
    subs.push_back(std::move(s));
  }
  SharingOutcome shared =
      run_sharing_phase(engine, subs, res.L, res.Q, cfg.strict_no_ell);
  if (shared.aborted) {
    res.aborted = true;
    res.cheaters = shared.cheaters;
    return res;
  }
  res.ell = shared.shared.ell;

  ProtocolState st = run_intervals_phase(engine, shared.shared);
  res.trace.W = peek_all(engine, st.W);
  res.trace.interval_len = peek_all(engine, st.len);
  for (const auto& row : st.desired) res.trace.desired.push_back(peek_all(engine, row));

  AllocationRun run = run_iterative_allocation(engine, st, cfg);
  res.iterations = run.iterations;
  res.trace.iterations = std::move(run.snapshots);
  for (const auto& row : st.allocation) {
    res.trace.allocation.push_back(peek_all(engine, row));
  }
  res.trace.denominator = peek_all(engine, st.denominator);

  Classification cls;
  ServingResult served = run_final_serving(engine, st, cfg.visibility, &cls);
  res.trace.exclusive = peek_all(engine, cls.exclusive);
  res.trace.portions = std::move(served.portions);
  res.allocation = std::move(served.allocation);
  return res;
}

RunResult run_protocol(std::span<const PiecewiseUniformValuation> vs,
                       const ProtocolConfig& cfg) {
  std::vector<AgentInput> inputs;
  for (const auto& v : vs) inputs.push_back(honest_input(v));
  return run_protocol(inputs, cfg);
}

}  // namespace ppcc
