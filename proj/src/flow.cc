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

#include "ppcc/flow.h"

#include <stdexcept>

namespace ppcc {

namespace {

using Grid = std::vector<std::vector<Sharing>>;

// For each row, the one-hot indicator of its first set bit (all zero when
// the row is empty), plus the "any" bit. Rows are scanned in lockstep.
void first_set(Engine& e, const Grid& rows, Grid& first,
               std::vector<Sharing>& any) {
  const std::size_t R = rows.size();
  const std::size_t len = R ? rows[0].size() : 0;
  std::vector<Sharing> none(R, e.constant(1));
  first.assign(R, std::vector<Sharing>(len));
  for (std::size_t col = 0; col < len; ++col) {
    std::vector<Sharing> bits(R);
    for (std::size_t r = 0; r < R; ++r) bits[r] = rows[r][col];
    std::vector<Sharing> f = e.mul(bits, none);
    for (std::size_t r = 0; r < R; ++r) {
      none[r] = e.sub(none[r], f[r]);
      first[r][col] = std::move(f[r]);
    }
  }
  any.resize(R);
  for (std::size_t r = 0; r < R; ++r) any[r] = e.one_minus(none[r]);
}

Sharing min_all(Engine& e, std::vector<Sharing> xs) {
  while (xs.size() > 1) {
    std::vector<Sharing> lhs, rhs;
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      lhs.push_back(xs[k]);
      rhs.push_back(xs[k + 1]);
    }
    std::vector<Sharing> next = e.min(lhs, rhs);
    if (xs.size() % 2 == 1) next.push_back(xs.back());
    xs = std::move(next);
  }
  return xs[0];
}

}  // namespace

FlowState make_flow_state(Engine& engine, std::vector<Sharing> A,
                          std::vector<std::vector<Sharing>> B,
                          std::vector<Sharing> C) {
  FlowState fs;
  fs.K = static_cast<int>(A.size());
  fs.n = static_cast<int>(C.size());
  if (static_cast<int>(B.size()) != fs.K) {
    throw std::invalid_argument("capacity matrix shape mismatch");
  }
  fs.A = std::move(A);
  fs.B = std::move(B);
  fs.C = std::move(C);
  fs.a.assign(fs.K, engine.constant(0));
  fs.b.assign(fs.K, std::vector<Sharing>(fs.n, engine.constant(0)));
  fs.c.assign(fs.n, engine.constant(0));
  fs.flow = engine.constant(0);
  return fs;
}

void greedy_pass(Engine& engine, FlowState& fs) {
  for (int d = 0; d <= fs.K + fs.n - 2; ++d) {
    std::vector<std::pair<int, int>> cells;
    for (int k = 0; k < fs.K; ++k) {
      const int i = d - k;
      if (i >= 0 && i < fs.n) cells.emplace_back(k, i);
    }
    std::vector<Sharing> x, y;
    for (auto [k, i] : cells) {
      x.push_back(fs.A[k]);
      y.push_back(fs.B[k][i]);
    }
    std::vector<Sharing> m1 = engine.min(x, y);
    y.clear();
    for (auto [k, i] : cells) y.push_back(fs.C[i]);
    std::vector<Sharing> mc = engine.min(m1, y);
    for (std::size_t t = 0; t < cells.size(); ++t) {
      const auto [k, i] = cells[t];
      fs.flow = engine.add(fs.flow, mc[t]);
      fs.a[k] = engine.add(fs.a[k], mc[t]);
      fs.b[k][i] = engine.add(fs.b[k][i], mc[t]);
      fs.c[i] = engine.add(fs.c[i], mc[t]);
      fs.A[k] = engine.sub(fs.A[k], mc[t]);
      fs.B[k][i] = engine.sub(fs.B[k][i], mc[t]);
      fs.C[i] = engine.sub(fs.C[i], mc[t]);
    }
  }
}

Reachability residual_reachability(Engine& engine, const FlowState& fs) {
  const int K = fs.K;
  const int n = fs.n;
  // Positivity of every residual edge in one batch.
  std::vector<Sharing> vals;
  vals.reserve(K + 2 * K * n + n);
  for (int k = 0; k < K; ++k) vals.push_back(fs.A[k]);
  for (int k = 0; k < K; ++k) {
    for (int i = 0; i < n; ++i) vals.push_back(fs.B[k][i]);
  }
  for (int k = 0; k < K; ++k) {
    for (int i = 0; i < n; ++i) vals.push_back(fs.b[k][i]);
  }
  for (int i = 0; i < n; ++i) vals.push_back(fs.C[i]);
  std::vector<Sharing> zeros(vals.size(), engine.constant(0));
  std::vector<Sharing> pos = engine.less_than(zeros, vals);
  auto pos_A = [&](int k) -> const Sharing& { return pos[k]; };
  auto pos_B = [&](int k, int i) -> const Sharing& {
    return pos[K + k * n + i];
  };
  auto pos_b = [&](int k, int i) -> const Sharing& {
    return pos[K + K * n + k * n + i];
  };
  auto pos_C = [&](int i) -> const Sharing& { return pos[K + 2 * K * n + i]; };

  Reachability r;
  for (int k = 0; k < K; ++k) r.from_source.push_back(pos_A(k));
  r.interval = r.from_source;
  r.agent.assign(n, engine.constant(0));
  r.agent_pred.assign(n, std::vector<Sharing>(K, engine.constant(0)));
  r.interval_pred.assign(K, std::vector<Sharing>(n, engine.constant(0)));

  for (int layer = 0; layer < n; ++layer) {
    // Agents through forward edges k -> i.
    {
      std::vector<Sharing> u, v;
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < K; ++k) {
          u.push_back(r.interval[k]);
          v.push_back(pos_B(k, i));
        }
      }
      std::vector<Sharing> cand = engine.mul(u, v);
      Grid rows(n);
      for (int i = 0; i < n; ++i) {
        rows[i].assign(cand.begin() + i * K, cand.begin() + (i + 1) * K);
      }
      Grid first;
      std::vector<Sharing> any;
      first_set(engine, rows, first, any);
      std::vector<Sharing> fresh_in(n);
      for (int i = 0; i < n; ++i) fresh_in[i] = engine.one_minus(r.agent[i]);
      std::vector<Sharing> fresh = engine.mul(any, fresh_in);
      u.clear();
      v.clear();
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < K; ++k) {
          u.push_back(fresh[i]);
          v.push_back(first[i][k]);
        }
      }
      std::vector<Sharing> pred = engine.mul(u, v);
      for (int i = 0; i < n; ++i) {
        for (int k = 0; k < K; ++k) {
          r.agent_pred[i][k] = engine.add(r.agent_pred[i][k], pred[i * K + k]);
        }
        r.agent[i] = engine.add(r.agent[i], fresh[i]);
      }
    }
    // Intervals through reverse edges i -> k where b_{k,i} > 0.
    {
      std::vector<Sharing> u, v;
      for (int k = 0; k < K; ++k) {
        for (int i = 0; i < n; ++i) {
          u.push_back(r.agent[i]);
          v.push_back(pos_b(k, i));
        }
      }
      std::vector<Sharing> cand = engine.mul(u, v);
      Grid rows(K);
      for (int k = 0; k < K; ++k) {
        rows[k].assign(cand.begin() + k * n, cand.begin() + (k + 1) * n);
      }
      Grid first;
      std::vector<Sharing> any;
      first_set(engine, rows, first, any);
      std::vector<Sharing> fresh_in(K);
      for (int k = 0; k < K; ++k) fresh_in[k] = engine.one_minus(r.interval[k]);
      std::vector<Sharing> fresh = engine.mul(any, fresh_in);
      u.clear();
      v.clear();
      for (int k = 0; k < K; ++k) {
        for (int i = 0; i < n; ++i) {
          u.push_back(fresh[k]);
          v.push_back(first[k][i]);
        }
      }
      std::vector<Sharing> pred = engine.mul(u, v);
      for (int k = 0; k < K; ++k) {
        for (int i = 0; i < n; ++i) {
          r.interval_pred[k][i] =
              engine.add(r.interval_pred[k][i], pred[k * n + i]);
        }
        r.interval[k] = engine.add(r.interval[k], fresh[k]);
      }
    }
  }

  std::vector<Sharing> pc(n);
  for (int i = 0; i < n; ++i) pc[i] = pos_C(i);
  std::vector<Sharing> cand = engine.mul(r.agent, pc);
  Grid first;
  std::vector<Sharing> any;
  first_set(engine, Grid{cand}, first, any);
  r.endpoint = std::move(first[0]);
  r.found = std::move(any[0]);
  return r;
}

Sharing augment_step(Engine& engine, FlowState& fs, std::int64_t big) {
  const int K = fs.K;
  const int n = fs.n;
  Reachability r = residual_reachability(engine, fs);

  Grid used_fwd(K, std::vector<Sharing>(n, engine.constant(0)));
  Grid used_rev(K, std::vector<Sharing>(n, engine.constant(0)));
  std::vector<Sharing> used_src(K, engine.constant(0));
  std::vector<Sharing> on_agent = r.endpoint;
  for (int step = 0; step < n; ++step) {
    std::vector<Sharing> u, v;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < K; ++k) {
        u.push_back(on_agent[i]);
        v.push_back(r.agent_pred[i][k]);
      }
    }
    std::vector<Sharing> p = engine.mul(u, v);
    std::vector<Sharing> cur(K, engine.constant(0));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < K; ++k) {
        used_fwd[k][i] = engine.add(used_fwd[k][i], p[i * K + k]);
        cur[k] = engine.add(cur[k], p[i * K + k]);
      }
    }
    u.clear();
    v.clear();
    for (int k = 0; k < K; ++k) {
      u.push_back(cur[k]);
      v.push_back(r.from_source[k]);
      for (int i = 0; i < n; ++i) {
        u.push_back(cur[k]);
        v.push_back(r.interval_pred[k][i]);
      }
    }
    std::vector<Sharing> q = engine.mul(u, v);
    std::vector<Sharing> next(n, engine.constant(0));
    for (int k = 0; k < K; ++k) {
      const std::size_t base = static_cast<std::size_t>(k) * (n + 1);
      used_src[k] = engine.add(used_src[k], q[base]);
      for (int i = 0; i < n; ++i) {
        used_rev[k][i] = engine.add(used_rev[k][i], q[base + 1 + i]);
        next[i] = engine.add(next[i], q[base + 1 + i]);
      }
    }
    on_agent = std::move(next);
  }

  // Masked residuals: an edge off the path contributes `big`.
  std::vector<Sharing> used, caps;
  for (int i = 0; i < n; ++i) {
    used.push_back(r.endpoint[i]);
    caps.push_back(fs.C[i]);
  }
  for (int k = 0; k < K; ++k) {
    used.push_back(used_src[k]);
    caps.push_back(fs.A[k]);
    for (int i = 0; i < n; ++i) {
      used.push_back(used_fwd[k][i]);
      caps.push_back(fs.B[k][i]);
      used.push_back(used_rev[k][i]);
      caps.push_back(fs.b[k][i]);
    }
  }
  std::vector<Sharing> gap(caps.size());
  for (std::size_t t = 0; t < caps.size(); ++t) {
    gap[t] = engine.add_const(caps[t], -big);
  }
  std::vector<Sharing> masked = engine.mul(used, gap);
  for (auto& m : masked) m = engine.add_const(m, big);
  Sharing bottleneck = engine.mul(r.found, min_all(engine, masked));

  std::vector<Sharing> bn(used.size(), bottleneck);
  std::vector<Sharing> delta = engine.mul(used, bn);
  std::size_t t = 0;
  for (int i = 0; i < n; ++i, ++t) {
    fs.C[i] = engine.sub(fs.C[i], delta[t]);
    fs.c[i] = engine.add(fs.c[i], delta[t]);
  }
  for (int k = 0; k < K; ++k) {
    fs.A[k] = engine.sub(fs.A[k], delta[t]);
    fs.a[k] = engine.add(fs.a[k], delta[t]);
    ++t;
    for (int i = 0; i < n; ++i) {
      const Sharing& fwd = delta[t++];
      const Sharing& rev = delta[t++];
      // Forward use moves capacity into the flow; reverse use cancels flow.
      fs.B[k][i] = engine.add(engine.sub(fs.B[k][i], fwd), rev);
      fs.b[k][i] = engine.sub(engine.add(fs.b[k][i], fwd), rev);
    }
  }
  fs.flow = engine.add(fs.flow, bottleneck);
  return r.found;
}

int run_max_flow(Engine& engine, FlowState& fs, const Sharing& target,
                 const MaxFlowOptions& opts) {
  if (opts.big <= 0) throw std::invalid_argument("flow needs a bound");
  int loops = 0;
  Sharing progress = engine.constant(1);
  while (true) {
    if (!(opts.at_least_once && loops == 0)) {
      Sharing guard = engine.less_than(fs.flow, target);
      if (opts.stop_on_stall && loops > 0) guard = engine.mul(guard, progress);
      if (engine.reveal(guard, RevealKind::kLoopGuard, opts.source) == 0) break;
    }
    const Sharing before = fs.flow;
    greedy_pass(engine, fs);
    augment_step(engine, fs, opts.big);
    ++loops;
    if (opts.stop_on_stall) progress = engine.less_than(before, fs.flow);
  }
  return loops;
}

}  // namespace ppcc
