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

#include "ppcc/allocation_phase.h"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace ppcc {

namespace {

using Grid = std::vector<std::vector<Sharing>>;

std::int64_t signed_peek(const Engine& e, const Sharing& x) {
  const std::uint64_t v = e.peek(x);
  const std::uint64_t p = e.modulus().p();
  return v > p / 2 ? -static_cast<std::int64_t>(p - v)
                   : static_cast<std::int64_t>(v);
}

// Avail(k) * IntervalLen(k).
std::vector<Sharing> available_length(Engine& e, const ProtocolState& st) {
  return e.mul(st.available, st.len);
}

// OR over i of bits[i] * Desired(i, k), for every k.
std::vector<Sharing> desired_by_any(Engine& e, const ProtocolState& st,
                                    const std::vector<Sharing>& bits) {
  const int K = st.intervals();
  std::vector<Sharing> u, v;
  for (int k = 0; k < K; ++k) {
    for (int i = 0; i < st.n; ++i) {
      u.push_back(bits[i]);
      v.push_back(st.desired[i][k]);
    }
  }
  std::vector<Sharing> p = e.mul(u, v);
  Grid groups(K);
  for (int k = 0; k < K; ++k) {
    groups[k].assign(p.begin() + k * st.n, p.begin() + (k + 1) * st.n);
  }
  return e.or_all_batch(groups);
}

}  // namespace

std::vector<int> subset_members(unsigned u, int n) {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) {
    if (u & (1u << (i - 1))) out.push_back(i);
  }
  return out;
}

std::vector<LenStar> compute_len_star_all(Engine& engine,
                                          const ProtocolState& st) {
  const int n = st.n;
  const int K = st.intervals();
  const unsigned count = (1u << n) - 1;
  const std::int64_t sentinel = n * (st.Q + 1);
  std::vector<Sharing> al = available_length(engine, st);

  Grid groups;
  groups.reserve(static_cast<std::size_t>(count) * K);
  std::vector<Sharing> served_sum;
  for (unsigned u = 1; u <= count; ++u) {
    const std::vector<int> members = subset_members(u, n);
    for (int k = 0; k < K; ++k) {
      std::vector<Sharing> g;
      for (int i : members) g.push_back(st.desired[i - 1][k]);
      groups.push_back(std::move(g));
    }
    Sharing s = engine.constant(0);
    for (int i : members) s = engine.add(s, st.served[i - 1]);
    served_sum.push_back(std::move(s));
  }
  std::vector<Sharing> covered = engine.or_all_batch(groups);
  std::vector<Sharing> al_rep;
  al_rep.reserve(covered.size());
  for (unsigned u = 1; u <= count; ++u) {
    for (int k = 0; k < K; ++k) al_rep.push_back(al[k]);
  }
  std::vector<Sharing> part = engine.mul(covered, al_rep);
  std::vector<Sharing> legal = engine.eq_zero(served_sum);

  std::vector<LenStar> out(count);
  std::vector<Sharing> gap(count);
  for (unsigned u = 0; u < count; ++u) {
    out[u].len = engine.sum(std::span<const Sharing>(part).subspan(
        static_cast<std::size_t>(u) * K, K));
    out[u].legal = legal[u];
    gap[u] = engine.add_const(out[u].len, -sentinel);
  }
  std::vector<Sharing> masked = engine.mul(legal, gap);
  for (unsigned u = 0; u < count; ++u) {
    out[u].len_star = engine.add_const(masked[u], sentinel);
  }
  return out;
}

LenStar compute_len_star(Engine& engine, const ProtocolState& st,
                         const std::vector<int>& members) {
  if (members.empty()) throw std::invalid_argument("empty subset");
  const int K = st.intervals();
  const std::int64_t sentinel = st.n * (st.Q + 1);
  std::vector<Sharing> al = available_length(engine, st);
  Grid groups(K);
  Sharing served_sum = engine.constant(0);
  for (int i : members) {
    for (int k = 0; k < K; ++k) groups[k].push_back(st.desired[i - 1][k]);
    served_sum = engine.add(served_sum, st.served[i - 1]);
  }
  std::vector<Sharing> covered = engine.or_all_batch(groups);
  LenStar r;
  r.len = engine.sum(engine.mul(covered, al));
  r.legal = engine.eq_zero(served_sum);
  r.len_star = engine.add_const(
      engine.mul(r.legal, engine.add_const(r.len, -sentinel)), sentinel);
  return r;
}

void oblivious_best_update(Engine& engine, IterationState& it,
                           const std::vector<int>& members,
                           const Sharing& len_star) {
  const int n = static_cast<int>(it.best.size());
  const auto size = static_cast<std::int64_t>(members.size());
  // Update = 1{SizeBestSubset * Len* < |S'| * MinLen}
  const Sharing lhs = engine.mul(it.size_best, len_star);
  const Sharing update =
      engine.less_than(lhs, engine.scale(it.min_len, size));
  std::vector<Sharing> diff;
  std::vector<bool> in(n, false);
  for (int i : members) in[i - 1] = true;
  for (int i = 0; i < n; ++i) {
    diff.push_back(engine.affine(in[i] ? 1 : 0, -1, it.best[i], 0, it.best[i]));
  }
  diff.push_back(engine.sub(len_star, it.min_len));
  diff.push_back(engine.add_const(engine.scale(it.size_best, -1), size));
  std::vector<Sharing> us(diff.size(), update);
  std::vector<Sharing> d = engine.mul(us, diff);
  for (int i = 0; i < n; ++i) it.best[i] = engine.add(it.best[i], d[i]);
  it.min_len = engine.add(it.min_len, d[n]);
  it.size_best = engine.add(it.size_best, d[n + 1]);
}

IterationState select_subset_exhaustive(Engine& engine,
                                        const ProtocolState& st) {
  const int n = st.n;
  IterationState it;
  it.best.assign(n, engine.constant(0));
  it.min_len = engine.constant(n * (st.Q + 1));
  it.size_best = engine.constant(0);
  std::vector<LenStar> all = compute_len_star_all(engine, st);
  for (unsigned u = 1; u <= all.size(); ++u) {
    oblivious_best_update(engine, it, subset_members(u, n),
                          all[u - 1].len_star);
  }
  return it;
}

namespace {

struct FlowInputs {
  std::vector<Sharing> A;
  Grid B;
};

// Capacities scaled by n!: A_k = n! Avail len, B_{k,i} = n! len Des (1-Served).
FlowInputs feasibility_capacities(Engine& e, const ProtocolState& st) {
  const int K = st.intervals();
  const int n = st.n;
  const std::int64_t nf = factorial(n);
  std::vector<Sharing> u, v;
  for (int k = 0; k < K; ++k) {
    u.push_back(st.available[k]);
    v.push_back(st.len[k]);
    for (int i = 0; i < n; ++i) {
      u.push_back(st.len[k]);
      v.push_back(st.desired[i][k]);
    }
  }
  std::vector<Sharing> p = e.mul(u, v);
  u.clear();
  v.clear();
  for (int k = 0; k < K; ++k) {
    for (int i = 0; i < n; ++i) {
      u.push_back(p[k * (n + 1) + 1 + i]);
      v.push_back(e.one_minus(st.served[i]));
    }
  }
  std::vector<Sharing> q = e.mul(u, v);
  FlowInputs f;
  f.B.assign(K, {});
  for (int k = 0; k < K; ++k) {
    f.A.push_back(e.scale(p[k * (n + 1)], nf));
    for (int i = 0; i < n; ++i) f.B[k].push_back(e.scale(q[k * n + i], nf));
  }
  return f;
}

Sharing unserved_count(Engine& e, const ProtocolState& st) {
  return e.affine(st.n, -1, e.sum(st.served), 0, st.served[0]);
}

// Flow of G(c) run to its maximum (or to c per unserved agent).
FlowState feasibility_flow(Engine& e, const ProtocolState& st,
                           const Sharing& c, const Sharing& target,
                           bool at_least_once, std::string_view source,
                           int* loops) {
  FlowInputs f = feasibility_capacities(e, st);
  FlowState fs = make_flow_state(e, std::move(f.A), std::move(f.B),
                                 std::vector<Sharing>(st.n, c));
  MaxFlowOptions opts;
  opts.stop_on_stall = true;
  opts.at_least_once = at_least_once;
  opts.big = magnitude_bound(st.n, st.Q);
  opts.source = source;
  const int l = run_max_flow(e, fs, target, opts);
  if (loops) *loops = l;
  return fs;
}

int floor_log2(std::uint64_t x) {
  return x == 0 ? 0 : static_cast<int>(std::bit_width(x)) - 1;
}

// Distinct values n! * x / s for x in [0, Q], s in [1, n], ascending.
std::vector<std::int64_t> candidate_averages(int n, std::int64_t Q) {
  const std::int64_t nf = factorial(n);
  std::set<std::int64_t> vals;
  for (std::int64_t x = 0; x <= Q; ++x) {
    for (int s = 1; s <= n; ++s) vals.insert(nf * x / s);
  }
  return {vals.begin(), vals.end()};
}

}  // namespace

Sharing is_feasible(Engine& engine, const ProtocolState& st, const Sharing& c,
                    bool at_least_once, int* loops) {
  const Sharing target = engine.mul(c, unserved_count(engine, st));
  FlowState fs = feasibility_flow(engine, st, c, target, at_least_once,
                                  "IsFeasible flow<target", loops);
  return engine.eq_zero(engine.sub(fs.flow, target));
}

Sharing capacity_binary_search(Engine& engine, const ProtocolState& st,
                               const ProtocolConfig& cfg) {
  const std::int64_t top = st.Q * factorial(st.n) + 1;
  const bool pad = cfg.pad_iterations;
  if (!cfg.search_candidates) {
    Sharing lo = engine.constant(0);
    Sharing hi = engine.constant(top);
    const int deferred = cfg.defer_search_check ? floor_log2(top) : 0;
    for (int step = 0;; ++step) {
      if (step >= deferred) {
        const Sharing done =
            engine.eq_zero(engine.add_const(engine.sub(hi, lo), -1));
        if (engine.reveal(done, RevealKind::kLoopGuard, "c_U-c_L=1") == 1) {
          break;
        }
      }
      const Sharing mid = engine.halve(engine.add(lo, hi));
      const Sharing ok = is_feasible(engine, st, mid, pad);
      std::vector<Sharing> bs{ok, ok};
      std::vector<Sharing> ds{engine.sub(mid, lo), engine.sub(hi, mid)};
      std::vector<Sharing> d = engine.mul(bs, ds);
      lo = engine.add(lo, d[0]);
      hi = engine.add(mid, d[1]);
    }
    return lo;
  }

  // Bisection over indices into the public candidate list; the list ends
  // with the infeasible sentinel.
  std::vector<std::int64_t> cand = candidate_averages(st.n, st.Q);
  cand.push_back(top);
  const auto N = static_cast<std::int64_t>(cand.size());
  Sharing ilo = engine.constant(0);
  Sharing ihi = engine.constant(N - 1);
  Sharing lo = engine.constant(0);
  const int deferred =
      cfg.defer_search_check ? floor_log2(static_cast<std::uint64_t>(N - 1)) : 0;
  for (int step = 0;; ++step) {
    if (step >= deferred) {
      const Sharing done =
          engine.eq_zero(engine.add_const(engine.sub(ihi, ilo), -1));
      if (engine.reveal(done, RevealKind::kLoopGuard, "i_U-i_L=1") == 1) break;
    }
    const Sharing imid = engine.halve(engine.add(ilo, ihi));
    std::vector<Sharing> probe;
    for (std::int64_t j = 0; j < N; ++j) probe.push_back(engine.add_const(imid, -j));
    std::vector<Sharing> hit = engine.eq_zero(probe);
    Sharing mid = engine.constant(0);
    for (std::int64_t j = 0; j < N; ++j) {
      mid = engine.add(mid, engine.scale(hit[j], cand[j]));
    }
    const Sharing ok = is_feasible(engine, st, mid, pad);
    std::vector<Sharing> bs{ok, ok, ok};
    std::vector<Sharing> ds{engine.sub(imid, ilo), engine.sub(ihi, imid),
                            engine.sub(mid, lo)};
    std::vector<Sharing> d = engine.mul(bs, ds);
    ilo = engine.add(ilo, d[0]);
    ihi = engine.add(imid, d[1]);
    lo = engine.add(lo, d[2]);
  }
  return lo;
}

std::vector<Sharing> extract_min_subset(Engine& engine,
                                        const ProtocolState& st,
                                        const Sharing& c_star,
                                        bool at_least_once) {
  const Sharing c = engine.add_const(c_star, 1);
  const Sharing target = engine.mul(c, unserved_count(engine, st));
  FlowState fs = feasibility_flow(engine, st, c, target, at_least_once,
                                  "G(c*+1) flow<target", nullptr);
  Reachability r = residual_reachability(engine, fs);
  std::vector<Sharing> u, v;
  for (int i = 0; i < st.n; ++i) {
    u.push_back(engine.one_minus(r.agent[i]));
    v.push_back(engine.one_minus(st.served[i]));
  }
  return engine.mul(u, v);
}

IterationState select_subset_polynomial(Engine& engine,
                                        const ProtocolState& st,
                                        const ProtocolConfig& cfg) {
  IterationState it;
  it.c_star = capacity_binary_search(engine, st, cfg);
  it.has_c_star = true;
  it.best = extract_min_subset(engine, st, it.c_star, cfg.pad_iterations);
  std::vector<Sharing> covered = desired_by_any(engine, st, it.best);
  it.min_len = engine.sum(engine.mul(covered, available_length(engine, st)));
  it.size_best = engine.sum(it.best);
  return it;
}

void update_served_and_available(Engine& engine, IterationState& it,
                                 ProtocolState& st, Fault fault) {
  const int K = st.intervals();
  for (int i = 0; i < st.n; ++i) {
    st.served[i] = engine.add(st.served[i], it.best[i]);
  }
  st.num_served = engine.add(st.num_served, it.size_best);
  it.selected = engine.mul(st.available, desired_by_any(engine, st, it.best));
  std::vector<Sharing> keep(K);
  for (int k = 0; k < K; ++k) {
    if (fault == Fault::kAvailabilityOffByOne) {
      keep[k] = k == 0 ? engine.constant(1) : engine.one_minus(it.selected[k - 1]);
    } else {
      keep[k] = engine.one_minus(it.selected[k]);
    }
  }
  st.available = engine.mul(st.available, keep);
}

AssignOutcome assign_cake_to_selected(Engine& engine, const IterationState& it,
                                      ProtocolState& st, bool at_least_once) {
  const int K = st.intervals();
  const int n = st.n;
  std::vector<Sharing> u, v;
  for (int k = 0; k < K; ++k) {
    u.push_back(it.selected[k]);
    v.push_back(st.len[k]);
    for (int i = 0; i < n; ++i) {
      u.push_back(st.len[k]);
      v.push_back(st.desired[i][k]);
    }
  }
  std::vector<Sharing> p = engine.mul(u, v);
  u.clear();
  v.clear();
  for (int k = 0; k < K; ++k) {
    for (int i = 0; i < n; ++i) {
      u.push_back(it.best[i]);
      v.push_back(p[k * (n + 1) + 1 + i]);
    }
  }
  std::vector<Sharing> q = engine.mul(u, v);
  u.clear();
  v.clear();
  for (int k = 0; k < K; ++k) {
    u.push_back(it.size_best);
    v.push_back(p[k * (n + 1)]);
    for (int i = 0; i < n; ++i) {
      u.push_back(it.size_best);
      v.push_back(q[k * n + i]);
    }
  }
  u.push_back(it.size_best);
  v.push_back(it.min_len);
  std::vector<Sharing> caps = engine.mul(u, v);
  std::vector<Sharing> A;
  Grid B(K);
  for (int k = 0; k < K; ++k) {
    A.push_back(caps[k * (n + 1)]);
    for (int i = 0; i < n; ++i) B[k].push_back(caps[k * (n + 1) + 1 + i]);
  }
  const Sharing max_flow = caps.back();

  AssignOutcome out;
  out.flow = make_flow_state(engine, std::move(A), std::move(B),
                             std::vector<Sharing>(n, it.min_len));
  MaxFlowOptions opts;
  opts.at_least_once = at_least_once;
  opts.big = magnitude_bound(n, st.Q);
  opts.source = "flow<MaxFlow";
  out.loops = run_max_flow(engine, out.flow, max_flow, opts);

  std::vector<Sharing> sz(n, it.size_best);
  std::vector<Sharing> den = engine.mul(sz, it.best);
  for (int i = 0; i < n; ++i) {
    st.denominator[i] = engine.add(st.denominator[i], den[i]);
    for (int k = 0; k < K; ++k) {
      st.allocation[i][k] = engine.add(st.allocation[i][k], out.flow.b[k][i]);
    }
  }
  return out;
}

AllocationRun run_iterative_allocation(Engine& engine, ProtocolState& st,
                                       const ProtocolConfig& cfg,
                                       bool snapshots) {
  AllocationRun run;
  const int n = st.n;
  const bool pad = cfg.pad_iterations;
  while (true) {
    if (pad) {
      if (run.iterations == n) break;
    } else {
      const Sharing all_served =
          engine.eq_zero(engine.add_const(st.num_served, -n));
      if (engine.reveal(all_served, RevealKind::kLoopGuard,
                        "NumAgentsServed=n") == 1) {
        break;
      }
    }
    IterationState it = cfg.mode == SearchMode::kExhaustive
                            ? select_subset_exhaustive(engine, st)
                            : select_subset_polynomial(engine, st, cfg);
    if (pad) {
      // A void iteration after everyone is served selects nothing.
      const Sharing live = engine.one_minus(
          engine.eq_zero(engine.add_const(st.num_served, -n)));
      std::vector<Sharing> regs = it.best;
      regs.push_back(it.min_len);
      regs.push_back(it.size_best);
      std::vector<Sharing> lv(regs.size(), live);
      std::vector<Sharing> masked = engine.mul(lv, regs);
      for (int i = 0; i < n; ++i) it.best[i] = masked[i];
      it.min_len = masked[n];
      it.size_best = masked[n + 1];
    }
    update_served_and_available(engine, it, st, cfg.fault);
    AssignOutcome assigned = assign_cake_to_selected(engine, it, st, pad);
    ++run.iterations;

    if (!snapshots) continue;
    IterationSnapshot snap;
    for (const auto& b : it.best) snap.best_subset.push_back(signed_peek(engine, b));
    snap.min_len = signed_peek(engine, it.min_len);
    snap.size_best = signed_peek(engine, it.size_best);
    if (it.has_c_star) snap.c_star = signed_peek(engine, it.c_star);
    for (const auto& s : st.served) snap.served.push_back(signed_peek(engine, s));
    for (const auto& s : it.selected) snap.selected.push_back(signed_peek(engine, s));
    for (const auto& s : st.available) snap.available.push_back(signed_peek(engine, s));
    for (const auto& row : assigned.flow.b) {
      std::vector<std::int64_t> r;
      for (const auto& x : row) r.push_back(signed_peek(engine, x));
      snap.flow.push_back(std::move(r));
    }
    snap.total_flow = signed_peek(engine, assigned.flow.flow);
    snap.flow_loops = assigned.loops;
    run.snapshots.push_back(std::move(snap));
  }
  return run;
}

}  // namespace ppcc
