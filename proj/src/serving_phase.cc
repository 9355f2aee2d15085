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

#include "ppcc/serving_phase.h"

#include <bit>
#include <stdexcept>
#include <string>

namespace ppcc {

namespace {

void add_piece(Allocation& alloc, int agent, Rational lo, Rational hi) {
  if (lo < hi) alloc[agent - 1].push_back(Interval{std::move(lo), std::move(hi)});
}

}  // namespace

std::int64_t Delivery::send(int agent, const Sharing& x, const char* what) {
  const std::string source = std::string(what) + " to A_" + std::to_string(agent);
  const std::uint64_t v =
      visibility == Visibility::kRestricted
          ? engine.reveal_to(agent, x, RevealKind::kOutput, source, agent)
          : engine.reveal(x, RevealKind::kOutput, source, agent);
  return static_cast<std::int64_t>(v);
}

Classification classify_exclusive(Engine& engine, const ProtocolState& st) {
  const int n = st.n;
  const int K = st.intervals();
  std::vector<Sharing> zeros, alloc;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < K; ++k) {
      zeros.push_back(engine.constant(0));
      alloc.push_back(st.allocation[i][k]);
    }
  }
  std::vector<Sharing> rel = engine.less_than(zeros, alloc);
  Classification cls;
  cls.relevant.resize(n);
  for (int i = 0; i < n; ++i) {
    cls.relevant[i].assign(rel.begin() + i * K, rel.begin() + (i + 1) * K);
  }
  // RelevantAgent keeps the last relevant index; all k advance together.
  std::vector<Sharing> count(K, engine.constant(0));
  std::vector<Sharing> last(K, engine.constant(0));
  for (int i = 0; i < n; ++i) {
    std::vector<Sharing> gap(K);
    for (int k = 0; k < K; ++k) {
      count[k] = engine.add(count[k], cls.relevant[i][k]);
      gap[k] = engine.affine(i + 1, -1, last[k], 0, last[k]);
    }
    std::vector<Sharing> d = engine.mul(cls.relevant[i], gap);
    for (int k = 0; k < K; ++k) last[k] = engine.add(last[k], d[k]);
  }
  std::vector<Sharing> one_off(K);
  for (int k = 0; k < K; ++k) one_off[k] = engine.add_const(count[k], -1);
  cls.exclusive = engine.mul(engine.eq_zero(one_off), last);
  return cls;
}

void serve_nonexclusive(Engine& engine, const ProtocolState& st,
                        const Classification& cls, int k, Delivery& out,
                        ServingResult& result) {
  const int n = st.n;
  const std::int64_t nf = factorial(n);
  const std::int64_t sentinel = nf * st.Q;
  // n! * allocation <= n! * n * Q fits in w bits.
  const int w = static_cast<int>(std::bit_width(
      static_cast<std::uint64_t>(nf * n * (st.Q + 1))));
  std::vector<Sharing> scaled(n);
  for (int i = 0; i < n; ++i) scaled[i] = engine.scale(st.allocation[i][k], nf);
  std::vector<std::vector<Sharing>> bits = engine.bit_decompose(scaled);
  for (auto& b : bits) b.erase(b.begin(), b.end() - w);
  std::vector<DivResult> sizes = engine.div(bits, st.denominator);

  Sharing position = engine.scale(st.W[k], nf);
  for (int i = 1; i <= n; ++i) {
    const Sharing& rel = cls.relevant[i - 1][k];
    const Sharing& size = sizes[i - 1].quotient;
    const Sharing end_pos = engine.add(position, size);
    std::vector<Sharing> r{rel, rel};
    std::vector<Sharing> g{engine.add_const(position, -sentinel),
                           engine.add_const(end_pos, -sentinel)};
    std::vector<Sharing> d = engine.mul(r, g);
    const Sharing start = engine.add_const(d[0], sentinel);
    const Sharing end = engine.add_const(d[1], sentinel);
    PortionMessage msg;
    msg.agent = i;
    msg.k = k + 1;
    msg.j = k + 2;
    msg.start = out.send(i, start, "PortionStart");
    msg.end = out.send(i, end, "PortionEnd");
    add_piece(result.allocation, i, Rational(msg.start, sentinel),
              Rational(msg.end, sentinel));
    result.portions.push_back(msg);
    position = end_pos;
  }
}

int serve_exclusive_run(Engine& engine, const ProtocolState& st,
                        const Classification& cls, int k, Delivery& out,
                        ServingResult& result) {
  const int K = st.intervals();
  int j = k + 1;
  while (j < K) {
    const Sharing same = engine.eq(cls.exclusive[j], cls.exclusive[j - 1]);
    if (engine.reveal(same, RevealKind::kLoopGuard,
                      "ExclusiveInterval(j)=ExclusiveInterval(j-1)") != 1) {
      break;
    }
    ++j;
  }
  const std::int64_t Q = st.Q;
  std::vector<Sharing> probe;
  for (int i = 1; i <= st.n; ++i) {
    probe.push_back(engine.add_const(cls.exclusive[k], -i));
  }
  std::vector<Sharing> owner = engine.eq_zero(probe);
  for (int i = 1; i <= st.n; ++i) {
    std::vector<Sharing> r{owner[i - 1], owner[i - 1]};
    std::vector<Sharing> g{engine.add_const(st.W[k], -Q),
                           engine.add_const(st.W[j], -Q)};
    std::vector<Sharing> d = engine.mul(r, g);
    PortionMessage msg;
    msg.agent = i;
    msg.k = k + 1;
    msg.j = j + 1;
    msg.exclusive = true;
    msg.start = out.send(i, engine.add_const(d[0], Q), "PortionStart");
    msg.end = out.send(i, engine.add_const(d[1], Q), "PortionEnd");
    add_piece(result.allocation, i, Rational(msg.start, Q), Rational(msg.end, Q));
    result.portions.push_back(msg);
  }
  return j;
}

ServingResult run_final_serving(Engine& engine, const ProtocolState& st,
                                Visibility visibility,
                                Classification* cls_out) {
  ServingResult result;
  result.allocation.resize(st.n);
  Classification cls = classify_exclusive(engine, st);
  Delivery out{engine, visibility};
  const int K = st.intervals();
  int k = 0;
  while (k < K) {
    const Sharing owned = engine.less_than(engine.constant(0), cls.exclusive[k]);
    if (engine.reveal(owned, RevealKind::kLoopGuard, "0<ExclusiveInterval(k)") == 1) {
      k = serve_exclusive_run(engine, st, cls, k, out, result);
    } else {
      serve_nonexclusive(engine, st, cls, k, out, result);
      ++k;
    }
  }
  if (cls_out) *cls_out = std::move(cls);
  return result;
}

}  // namespace ppcc
