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

#include "ppcc/engine.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace ppcc {

namespace {

Rng derive_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), 0x9e3779b9u};
  return Rng(seq);
}

}  // namespace

class Engine::Scope {
 public:
  Scope(Engine& e, GateKind kind, std::uint64_t elements)
      : e_(e),
        kind_(kind),
        elements_(elements),
        first_round_(e.transcript_->round()),
        first_messages_(e.transcript_->total_messages()) {
    ++e_.depth_;
  }
  ~Scope() {
    --e_.depth_;
    const std::uint32_t now = e_.transcript_->round();
    GateRecord g{kind_, first_round_, now > first_round_ ? now - 1 : now,
                 e_.transcript_->total_messages() - first_messages_,
                 e_.depth_};
    e_.transcript_->add_gate(g, elements_);
  }

 private:
  Engine& e_;
  GateKind kind_;
  std::uint64_t elements_;
  std::uint32_t first_round_;
  std::uint64_t first_messages_;
};

Engine::Engine(ShareParams params, PrimeModulus modulus, std::uint64_t seed,
               std::shared_ptr<Transcript> transcript,
               std::unique_ptr<Dealer> dealer)
    : params_(params),
      mod_(modulus),
      transcript_(std::move(transcript)),
      dealer_(std::move(dealer)) {
  if (params_.n < 1 || params_.t < 1 || 2 * params_.t - 1 > params_.n) {
    throw SharingError("engine needs an honest-majority threshold");
  }
  if (!transcript_) transcript_ = std::make_shared<Transcript>();
  if (!dealer_) {
    Rng r = derive_rng(seed, 0);
    dealer_ = std::make_unique<TrustedDealer>(params_, mod_, r());
  }
  for (int i = 1; i <= params_.n; ++i) {
    party_rng_.push_back(derive_rng(seed, static_cast<std::uint64_t>(i)));
  }
  std::vector<PartyId> all;
  for (int i = 1; i <= params_.n; ++i) all.push_back(i);
  lambda_all_ = lagrange_at_zero(all, mod_);

  senders_.resize(params_.n);
  lambda_recipient_.resize(params_.n);
  for (int j = 0; j < params_.n; ++j) {
    std::vector<PartyId> xs{j + 1};
    for (int i = 0; i < params_.n && static_cast<int>(senders_[j].size()) <
                                         params_.t - 1;
         ++i) {
      if (i == j) continue;
      senders_[j].push_back(i);
      xs.push_back(i + 1);
    }
    lambda_recipient_[j] = lagrange_at_zero(xs, mod_);
  }
}

Engine::~Engine() = default;

// ---------------------------------------------------------------- local

void Engine::check(const Sharing& x) const {
  if (x.params != params_ ||
      static_cast<int>(x.shares.size()) != params_.n) {
    throw SharingError("sharing does not belong to this engine");
  }
}

Sharing Engine::constant(std::int64_t alpha) const {
  Sharing out;
  out.params = params_;
  out.shares.assign(params_.n, mod_.from_signed(alpha));
  return out;
}

Sharing Engine::affine(std::int64_t alpha, std::int64_t beta, const Sharing& u,
                       std::int64_t gamma, const Sharing& v) const {
  check(u);
  check(v);
  const std::uint64_t a = mod_.from_signed(alpha);
  const std::uint64_t b = mod_.from_signed(beta);
  const std::uint64_t g = mod_.from_signed(gamma);
  Sharing out;
  out.params = params_;
  out.shares.resize(params_.n);
  for (int i = 0; i < params_.n; ++i) {
    out.shares[i] = mod_.add(
        a, mod_.add(mod_.mul(b, u.shares[i]), mod_.mul(g, v.shares[i])));
  }
  return out;
}

Sharing Engine::add(const Sharing& u, const Sharing& v) const {
  check(u);
  check(v);
  Sharing out = u;
  for (int i = 0; i < params_.n; ++i) {
    out.shares[i] = mod_.add(u.shares[i], v.shares[i]);
  }
  return out;
}

Sharing Engine::sub(const Sharing& u, const Sharing& v) const {
  check(u);
  check(v);
  Sharing out = u;
  for (int i = 0; i < params_.n; ++i) {
    out.shares[i] = mod_.sub(u.shares[i], v.shares[i]);
  }
  return out;
}

Sharing Engine::add_const(const Sharing& u, std::int64_t c) const {
  check(u);
  const std::uint64_t k = mod_.from_signed(c);
  Sharing out = u;
  for (auto& s : out.shares) s = mod_.add(s, k);
  return out;
}

Sharing Engine::scale(const Sharing& u, std::int64_t c) const {
  check(u);
  const std::uint64_t k = mod_.from_signed(c);
  Sharing out = u;
  for (auto& s : out.shares) s = mod_.mul(s, k);
  return out;
}

Sharing Engine::sum(std::span<const Sharing> xs) const {
  Sharing out = constant(0);
  for (const auto& x : xs) {
    check(x);
    for (int i = 0; i < params_.n; ++i) {
      out.shares[i] = mod_.add(out.shares[i], x.shares[i]);
    }
  }
  return out;
}

// -------------------------------------------------------------- network

Engine::Mailbox Engine::empty_mailbox() const {
  return Mailbox(params_.n, std::vector<std::vector<std::uint64_t>>(params_.n));
}

Engine::Mailbox Engine::exchange(Mailbox outbox, MessageTag tag, int subject) {
  const std::uint32_t round = transcript_->round();
  Mailbox inbox = empty_mailbox();
  for (int from = 0; from < params_.n; ++from) {
    for (int to = 0; to < params_.n; ++to) {
      auto& payload = outbox[from][to];
      if (payload.empty()) continue;
      if (from == to) throw std::logic_error("party messaged itself");
      transcript_->add_message(RoundMessage{
          round, from + 1, to + 1, static_cast<std::uint32_t>(payload.size()),
          tag, subject});
      inbox[to][from] = std::move(payload);
    }
  }
  transcript_->close_round();
  return inbox;
}

MaskTuple Engine::take_mask() {
  MaskTuple m = dealer_->next_mask();
  if (m.id <= last_tape_id_) {
    throw std::logic_error("dealer tape entry reused");
  }
  last_tape_id_ = m.id;
  if (static_cast<int>(m.bits.size()) != mod_.bits()) {
    throw std::logic_error("mask has the wrong number of bits");
  }
  return m;
}

std::uint64_t Engine::interpolate_for(int recipient, const Sharing& x) const {
  const auto& lam = lambda_recipient_[recipient];
  std::uint64_t acc = mod_.mul(lam[0], x.shares[recipient]);
  const auto& from = senders_[recipient];
  for (std::size_t k = 0; k < from.size(); ++k) {
    acc = mod_.add(acc, mod_.mul(lam[k + 1], x.shares[from[k]]));
  }
  return acc;
}

// ------------------------------------------------------- input / reveal

Sharing Engine::input(PartyId owner, std::uint64_t secret) {
  const std::uint64_t one[] = {secret};
  return std::move(input(owner, one)[0]);
}

std::vector<Sharing> Engine::input(PartyId owner,
                                   std::span<const std::uint64_t> secrets) {
  if (owner < 1 || owner > params_.n) throw SharingError("bad input owner");
  Scope scope(*this, GateKind::kInput, secrets.size());
  const int o = owner - 1;
  std::vector<Sharing> full;
  full.reserve(secrets.size());
  for (std::uint64_t s : secrets) {
    full.push_back(share(mod_.reduce(s), params_, mod_, party_rng_[o]));
  }
  Mailbox out = empty_mailbox();
  for (int to = 0; to < params_.n; ++to) {
    if (to == o) continue;
    for (const auto& f : full) out[o][to].push_back(f.shares[to]);
  }
  Mailbox in = exchange(std::move(out), MessageTag::kInput);
  std::vector<Sharing> result(secrets.size());
  for (std::size_t b = 0; b < secrets.size(); ++b) {
    result[b].params = params_;
    result[b].shares.resize(params_.n);
    for (int to = 0; to < params_.n; ++to) {
      result[b].shares[to] = to == o ? full[b].shares[to] : in[to][o][b];
    }
  }
  return result;
}

std::vector<std::uint64_t> Engine::open_masked(std::span<const Sharing> xs) {
  Scope scope(*this, GateKind::kOpen, xs.size());
  Mailbox out = empty_mailbox();
  for (int j = 0; j < params_.n; ++j) {
    for (int i : senders_[j]) {
      for (const auto& x : xs) {
        check(x);
        out[i][j].push_back(x.shares[i]);
      }
    }
  }
  Mailbox in = exchange(std::move(out), MessageTag::kOpen);
  std::vector<std::uint64_t> values(xs.size());
  for (int j = 0; j < params_.n; ++j) {
    const auto& lam = lambda_recipient_[j];
    for (std::size_t b = 0; b < xs.size(); ++b) {
      std::uint64_t acc = mod_.mul(lam[0], xs[b].shares[j]);
      for (std::size_t k = 0; k < senders_[j].size(); ++k) {
        acc = mod_.add(acc, mod_.mul(lam[k + 1], in[j][senders_[j][k]][b]));
      }
      if (j == 0) {
        values[b] = acc;
      } else if (values[b] != acc) {
        throw std::logic_error("parties disagree on an opened value");
      }
    }
  }
  transcript_->count_masked_openings(xs.size());
  return values;
}

std::uint64_t Engine::reveal(const Sharing& x, RevealKind kind,
                             std::string_view source, int subject) {
  check(x);
  Scope scope(*this, GateKind::kReveal, 1);
  const std::uint32_t round = transcript_->round();
  Mailbox out = empty_mailbox();
  for (int j = 0; j < params_.n; ++j) {
    for (int i : senders_[j]) out[i][j].push_back(x.shares[i]);
  }
  exchange(std::move(out), MessageTag::kReveal, subject);
  std::uint64_t value = interpolate_for(0, x);
  for (int j = 1; j < params_.n; ++j) {
    if (interpolate_for(j, x) != value) {
      throw std::logic_error("parties disagree on a revealed value");
    }
  }
  transcript_->add_reveal(
      RevealRecord{kind, std::string(source), 0, subject, value, round});
  return value;
}

std::uint64_t Engine::reveal_to(PartyId target, const Sharing& x,
                                RevealKind kind, std::string_view source,
                                int subject) {
  check(x);
  if (target < 1 || target > params_.n) throw SharingError("bad target");
  Scope scope(*this, GateKind::kReveal, 1);
  const std::uint32_t round = transcript_->round();
  const int j = target - 1;
  Mailbox out = empty_mailbox();
  for (int i : senders_[j]) out[i][j].push_back(x.shares[i]);
  exchange(std::move(out), MessageTag::kReveal, subject);
  const std::uint64_t value = interpolate_for(j, x);
  transcript_->add_reveal(
      RevealRecord{kind, std::string(source), target, subject, value, round});
  return value;
}

std::uint64_t Engine::peek(const Sharing& x) const {
  check(x);
  return reconstruct_secret(x, mod_);
}

// ------------------------------------------------------------------ mul

Sharing Engine::mul(const Sharing& u, const Sharing& v) {
  const Sharing a[] = {u};
  const Sharing b[] = {v};
  return std::move(mul(a, b)[0]);
}

std::vector<Sharing> Engine::mul(std::span<const Sharing> u,
                                 std::span<const Sharing> v) {
  if (u.size() != v.size()) throw SharingError("mul batch size mismatch");
  const std::size_t batch = u.size();
  std::vector<Sharing> result(batch);
  if (batch == 0) return result;
  Scope scope(*this, GateKind::kMul, batch);
  const int n = params_.n;
  const int t = params_.t;
  for (std::size_t b = 0; b < batch; ++b) {
    check(u[b]);
    check(v[b]);
  }

  // local[i][b]: party i's degree-(t-1) share of its own product.
  std::vector<std::vector<std::uint64_t>> local(
      n, std::vector<std::uint64_t>(batch));
  Mailbox out = empty_mailbox();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j != i) out[i][j].resize(batch);
    }
  }
  std::vector<std::uint64_t> coeff(t);
  for (int i = 0; i < n; ++i) {
    Rng& rng = party_rng_[i];
    for (std::size_t b = 0; b < batch; ++b) {
      coeff[0] = mod_.mul(u[b].shares[i], v[b].shares[i]);
      for (int k = 1; k < t; ++k) coeff[k] = uniform_residue(rng, mod_);
      for (int j = 0; j < n; ++j) {
        const std::uint64_t x = static_cast<std::uint64_t>(j + 1);
        std::uint64_t acc = 0;
        for (int k = t - 1; k >= 0; --k) {
          acc = mod_.add(mod_.mul(acc, x), coeff[k]);
        }
        if (j == i) {
          local[i][b] = acc;
        } else {
          out[i][j][b] = acc;
        }
      }
    }
  }
  Mailbox in = exchange(std::move(out), MessageTag::kReshare);
  for (std::size_t b = 0; b < batch; ++b) {
    result[b].params = params_;
    result[b].shares.assign(n, 0);
    for (int j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (int i = 0; i < n; ++i) {
        const std::uint64_t piece = i == j ? local[j][b] : in[j][i][b];
        acc = mod_.add(acc, mod_.mul(lambda_all_[i], piece));
      }
      result[b].shares[j] = acc;
    }
  }
  return result;
}

// ------------------------------------------------------------ bit gates

std::vector<Sharing> Engine::public_less_than_bits(
    std::span<const std::uint64_t> c,
    const std::vector<const std::vector<Sharing>*>& r_bits) {
  const std::size_t batch = c.size();
  const int s = mod_.bits();
  std::vector<Sharing> lt(batch);
  for (std::size_t b = 0; b < batch; ++b) {
    lt[b] = (c[b] & 1) ? constant(0) : (*r_bits[b])[0];
  }
  std::vector<Sharing> rj(batch);
  for (int j = 1; j < s; ++j) {
    for (std::size_t b = 0; b < batch; ++b) rj[b] = (*r_bits[b])[j];
    std::vector<Sharing> prod = mul(rj, lt);
    for (std::size_t b = 0; b < batch; ++b) {
      if ((c[b] >> j) & 1) {
        lt[b] = std::move(prod[b]);
      } else {
        lt[b] = sub(add(rj[b], lt[b]), prod[b]);
      }
    }
  }
  return lt;
}

Sharing Engine::lsb(const Sharing& x) {
  const Sharing a[] = {x};
  return std::move(lsb(a)[0]);
}

std::vector<Sharing> Engine::lsb(std::span<const Sharing> xs) {
  const std::size_t batch = xs.size();
  if (batch == 0) return {};
  Scope scope(*this, GateKind::kLsb, batch);
  std::vector<MaskTuple> masks;
  masks.reserve(batch);
  std::vector<Sharing> masked(batch);
  for (std::size_t b = 0; b < batch; ++b) {
    masks.push_back(take_mask());
    masked[b] = add(xs[b], masks[b].value);
  }
  const std::vector<std::uint64_t> c = open_masked(masked);
  std::vector<const std::vector<Sharing>*> rb(batch);
  for (std::size_t b = 0; b < batch; ++b) rb[b] = &masks[b].bits;
  std::vector<Sharing> wrap = public_less_than_bits(c, rb);

  // x = c - r + wrap * p, and p is odd.
  std::vector<Sharing> r0(batch);
  for (std::size_t b = 0; b < batch; ++b) r0[b] = masks[b].bits[0];
  std::vector<Sharing> prod = mul(r0, wrap);
  std::vector<Sharing> out(batch);
  for (std::size_t b = 0; b < batch; ++b) {
    Sharing y = affine(0, 1, r0[b], 1, wrap[b]);
    y = sub(y, scale(prod[b], 2));
    out[b] = (c[b] & 1) ? one_minus(y) : std::move(y);
  }
  return out;
}

Sharing Engine::less_than(const Sharing& u, const Sharing& v) {
  const Sharing a[] = {u};
  const Sharing b[] = {v};
  return std::move(less_than(a, b)[0]);
}

std::vector<Sharing> Engine::less_than(std::span<const Sharing> u,
                                       std::span<const Sharing> v) {
  if (u.size() != v.size()) throw SharingError("less_than size mismatch");
  if (u.empty()) return {};
  Scope scope(*this, GateKind::kLessThan, u.size());
  std::vector<Sharing> d(u.size());
  for (std::size_t b = 0; b < u.size(); ++b) d[b] = affine(0, 2, u[b], -2, v[b]);
  return lsb(d);
}

Sharing Engine::eq_zero(const Sharing& x) {
  const Sharing a[] = {x};
  return std::move(eq_zero(a)[0]);
}

std::vector<Sharing> Engine::eq_zero(std::span<const Sharing> xs) {
  const std::size_t batch = xs.size();
  if (batch == 0) return {};
  Scope scope(*this, GateKind::kEqZero, batch);
  // Exactly one of 2x, -2x is odd as a residue when x != 0.
  std::vector<Sharing> both(2 * batch);
  for (std::size_t b = 0; b < batch; ++b) {
    both[b] = scale(xs[b], 2);
    both[batch + b] = scale(xs[b], -2);
  }
  std::vector<Sharing> l = lsb(both);
  std::vector<Sharing> out(batch);
  for (std::size_t b = 0; b < batch; ++b) {
    out[b] = affine(1, -1, l[b], -1, l[batch + b]);
  }
  return out;
}

Sharing Engine::min(const Sharing& u, const Sharing& v) {
  const Sharing a[] = {u};
  const Sharing b[] = {v};
  return std::move(min(a, b)[0]);
}

std::vector<Sharing> Engine::min(std::span<const Sharing> u,
                                 std::span<const Sharing> v) {
  if (u.empty()) return {};
  Scope scope(*this, GateKind::kMin, u.size());
  std::vector<Sharing> l = less_than(u, v);
  std::vector<Sharing> d(u.size());
  for (std::size_t b = 0; b < u.size(); ++b) d[b] = sub(u[b], v[b]);
  std::vector<Sharing> p = mul(l, d);
  std::vector<Sharing> out(u.size());
  for (std::size_t b = 0; b < u.size(); ++b) out[b] = add(v[b], p[b]);
  return out;
}

Sharing Engine::max(const Sharing& u, const Sharing& v) {
  const Sharing a[] = {u};
  const Sharing b[] = {v};
  return std::move(max(a, b)[0]);
}

std::vector<Sharing> Engine::max(std::span<const Sharing> u,
                                 std::span<const Sharing> v) {
  if (u.empty()) return {};
  Scope scope(*this, GateKind::kMax, u.size());
  std::vector<Sharing> l = less_than(u, v);
  std::vector<Sharing> d(u.size());
  for (std::size_t b = 0; b < u.size(); ++b) d[b] = sub(v[b], u[b]);
  std::vector<Sharing> p = mul(l, d);
  std::vector<Sharing> out(u.size());
  for (std::size_t b = 0; b < u.size(); ++b) out[b] = add(u[b], p[b]);
  return out;
}

Sharing Engine::or_(const Sharing& u, const Sharing& v) {
  const Sharing a[] = {u};
  const Sharing b[] = {v};
  return std::move(or_(a, b)[0]);
}

std::vector<Sharing> Engine::or_(std::span<const Sharing> u,
                                 std::span<const Sharing> v) {
  if (u.empty()) return {};
  Scope scope(*this, GateKind::kOr, u.size());
  std::vector<Sharing> p = mul(u, v);
  std::vector<Sharing> out(u.size());
  for (std::size_t b = 0; b < u.size(); ++b) {
    out[b] = sub(add(u[b], v[b]), p[b]);
  }
  return out;
}

Sharing Engine::or_all(std::span<const Sharing> bits) {
  std::vector<std::vector<Sharing>> g(1);
  g[0].assign(bits.begin(), bits.end());
  return std::move(or_all_batch(g)[0]);
}

std::vector<Sharing> Engine::or_all_batch(
    const std::vector<std::vector<Sharing>>& groups) {
  std::vector<std::vector<Sharing>> cur = groups;
  while (true) {
    std::vector<Sharing> lhs, rhs;
    for (const auto& g : cur) {
      for (std::size_t k = 0; k + 1 < g.size(); k += 2) {
        lhs.push_back(g[k]);
        rhs.push_back(g[k + 1]);
      }
    }
    if (lhs.empty()) break;
    std::vector<Sharing> r = or_(lhs, rhs);
    std::size_t pos = 0;
    for (auto& g : cur) {
      std::vector<Sharing> next;
      for (std::size_t k = 0; k + 1 < g.size(); k += 2) {
        next.push_back(std::move(r[pos++]));
      }
      if (g.size() % 2 == 1) next.push_back(std::move(g.back()));
      g = std::move(next);
    }
  }
  std::vector<Sharing> out;
  out.reserve(cur.size());
  for (auto& g : cur) out.push_back(g.empty() ? constant(0) : std::move(g[0]));
  return out;
}

Sharing Engine::halve(const Sharing& x) {
  Scope scope(*this, GateKind::kHalve, 1);
  Sharing l = lsb(x);
  Sharing out = sub(x, l);
  for (auto& s : out.shares) s = mod_.mul(s, mod_.half_inverse());
  return out;
}

std::vector<Sharing> Engine::bit_decompose(const Sharing& x) {
  const Sharing a[] = {x};
  return std::move(bit_decompose(a)[0]);
}

std::vector<std::vector<Sharing>> Engine::bit_decompose(
    std::span<const Sharing> xs) {
  const std::size_t batch = xs.size();
  if (batch == 0) return {};
  Scope scope(*this, GateKind::kBitDecompose, batch);
  const int s = mod_.bits();
  std::vector<MaskTuple> masks;
  masks.reserve(batch);
  std::vector<Sharing> masked(batch);
  for (std::size_t b = 0; b < batch; ++b) {
    masks.push_back(take_mask());
    masked[b] = add(xs[b], masks[b].value);
  }
  const std::vector<std::uint64_t> c = open_masked(masked);
  std::vector<const std::vector<Sharing>*> rb(batch);
  for (std::size_t b = 0; b < batch; ++b) rb[b] = &masks[b].bits;
  std::vector<Sharing> wrap = public_less_than_bits(c, rb);

  // Two borrow chains: c - r (valid when c >= r) and c + p - r (when
  // c < r). Both fit in s bits in their valid case.
  std::vector<std::uint64_t> cc(2 * batch);
  for (std::size_t b = 0; b < batch; ++b) {
    cc[b] = c[b];
    cc[batch + b] = c[b] + mod_.p();
  }
  std::vector<std::vector<Sharing>> d(2 * batch, std::vector<Sharing>(s));
  std::vector<Sharing> borrow(2 * batch, constant(0));
  std::vector<Sharing> rj(2 * batch);
  for (int j = 0; j < s; ++j) {
    for (std::size_t b = 0; b < batch; ++b) {
      rj[b] = masks[b].bits[j];
      rj[batch + b] = masks[b].bits[j];
    }
    std::vector<Sharing> t;
    if (j == 0) {
      t.assign(2 * batch, constant(0));
    } else {
      t = mul(rj, borrow);
    }
    for (std::size_t e = 0; e < 2 * batch; ++e) {
      Sharing rb_sum = add(rj[e], borrow[e]);
      Sharing base = sub(rb_sum, scale(t[e], 2));
      if ((cc[e] >> j) & 1) {
        d[e][j] = one_minus(base);
        borrow[e] = std::move(t[e]);
      } else {
        d[e][j] = std::move(base);
        borrow[e] = sub(rb_sum, t[e]);
      }
    }
  }
  std::vector<Sharing> w(batch * s), diff(batch * s);
  for (std::size_t b = 0; b < batch; ++b) {
    for (int j = 0; j < s; ++j) {
      w[b * s + j] = wrap[b];
      diff[b * s + j] = sub(d[batch + b][j], d[b][j]);
    }
  }
  std::vector<Sharing> p = mul(w, diff);
  std::vector<std::vector<Sharing>> out(batch, std::vector<Sharing>(s));
  for (std::size_t b = 0; b < batch; ++b) {
    for (int j = 0; j < s; ++j) {
      out[b][s - 1 - j] = add(d[b][j], p[b * s + j]);
    }
  }
  return out;
}

DivResult Engine::div(const Sharing& u, std::span<const Sharing> u_bits,
                      const Sharing& v) {
  (void)u;
  std::vector<std::vector<Sharing>> bits(1);
  bits[0].assign(u_bits.begin(), u_bits.end());
  const Sharing vs[] = {v};
  return std::move(div(bits, vs)[0]);
}

std::vector<DivResult> Engine::div(
    const std::vector<std::vector<Sharing>>& u_bits,
    std::span<const Sharing> v) {
  const std::size_t batch = v.size();
  if (u_bits.size() != batch) throw SharingError("div batch size mismatch");
  if (batch == 0) return {};
  const std::size_t len = u_bits[0].size();
  for (const auto& ub : u_bits) {
    if (ub.size() != len) throw SharingError("div bit lengths differ");
  }
  Scope scope(*this, GateKind::kDiv, batch);
  std::vector<DivResult> out(batch);
  std::vector<Sharing> r(batch, constant(0));
  for (auto& o : out) o.quotient = constant(0);
  for (std::size_t idx = 0; idx < len; ++idx) {
    for (std::size_t b = 0; b < batch; ++b) {
      r[b] = affine(0, 2, r[b], 1, u_bits[b][idx]);
    }
    std::vector<Sharing> l = less_than(r, v);
    std::vector<Sharing> q(batch);
    for (std::size_t b = 0; b < batch; ++b) q[b] = one_minus(l[b]);
    std::vector<Sharing> qv = mul(q, v);
    for (std::size_t b = 0; b < batch; ++b) {
      r[b] = sub(r[b], qv[b]);
      out[b].quotient = affine(0, 2, out[b].quotient, 1, q[b]);
      out[b].quotient_bits.push_back(std::move(q[b]));
    }
  }
  for (std::size_t b = 0; b < batch; ++b) out[b].remainder = std::move(r[b]);
  return out;
}

Sharing Engine::kth_ranked(std::span<const Sharing> data, int k, int h) {
  const int ks[] = {k};
  return std::move(kth_ranked(data, ks, h)[0]);
}

std::vector<Sharing> Engine::kth_ranked(std::span<const Sharing> data,
                                        std::span<const int> ks, int h) {
  if (h < 1 || h > 62) throw SharingError("kth_ranked: bad bit length");
  const std::size_t m = data.size();
  const std::size_t nq = ks.size();
  for (int k : ks) {
    if (k < 1 || static_cast<std::size_t>(k) > m) {
      throw SharingError("kth_ranked: rank out of range");
    }
  }
  if (nq == 0) return {};
  Scope scope(*this, GateKind::kKthRanked, nq);
  std::vector<Sharing> kc(nq);
  for (std::size_t q = 0; q < nq; ++q) kc[q] = constant(ks[q]);

  auto count_below = [&](const std::vector<Sharing>& alpha) {
    std::vector<Sharing> lhs, rhs;
    lhs.reserve(m * nq);
    rhs.reserve(m * nq);
    for (std::size_t q = 0; q < nq; ++q) {
      for (std::size_t j = 0; j < m; ++j) {
        lhs.push_back(data[j]);
        rhs.push_back(alpha[q]);
      }
    }
    std::vector<Sharing> x = less_than(lhs, rhs);
    std::vector<Sharing> kappa(nq);
    for (std::size_t q = 0; q < nq; ++q) {
      kappa[q] = sum(std::span<const Sharing>(x).subspan(q * m, m));
    }
    return kappa;
  };

  std::vector<Sharing> alpha(nq, constant(std::int64_t{1} << (h - 1)));
  for (int i = h - 1; i >= 1; --i) {
    std::vector<Sharing> lam = less_than(count_below(alpha), kc);
    // lam * (alpha + 2^(i-1)) + (1 - lam) * (alpha - 2^(i-1)); the step is
    // public, so this is affine in lam.
    const std::int64_t step = std::int64_t{1} << (i - 1);
    for (std::size_t q = 0; q < nq; ++q) {
      alpha[q] = affine(-step, 1, alpha[q], 2 * step, lam[q]);
    }
  }
  // alpha is now within one of the answer.
  std::vector<Sharing> lam = less_than(count_below(alpha), kc);
  std::vector<Sharing> out(nq);
  for (std::size_t q = 0; q < nq; ++q) {
    // M = alpha - (1 - lam)
    out[q] = affine(-1, 1, alpha[q], 1, lam[q]);
  }
  return out;
}

}  // namespace ppcc
