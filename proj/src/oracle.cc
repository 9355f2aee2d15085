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

#include "ppcc/oracle.h"

#include <algorithm>
#include <bit>
#include <bitset>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ppcc {

namespace {

using I64 = std::int64_t;
using IMatrix = std::vector<std::vector<I64>>;

int bit_ceil_at_least_one(int x) {
  return static_cast<int>(std::bit_ceil(static_cast<unsigned>(std::max(x, 1))));
}

}  // namespace

PlainInstance make_instance(std::span<const IntegerValuation> vs,
                            bool strict_no_ell) {
  if (vs.empty()) throw std::invalid_argument("at least one agent required");
  PlainInstance inst;
  inst.n = static_cast<int>(vs.size());
  inst.Q = vs[0].Q;
  int max_ell = 0;
  for (const auto& v : vs) {
    if (v.Q != inst.Q) throw std::invalid_argument("mixed grids");
    max_ell = std::max(max_ell, v.ell);
  }
  inst.slots = strict_no_ell ? bit_ceil_at_least_one(max_ell) : max_ell;
  for (const auto& v : vs) {
    IntegerValuation w;
    w.Q = inst.Q;
    w.ell = v.ell;
    w.endpoints.assign(v.endpoints.begin(),
                       v.endpoints.begin() + 2 * static_cast<std::ptrdiff_t>(v.ell));
    inst.valuations.push_back(w.padded(inst.slots));
  }
  return inst;
}

PlainInstance make_instance(std::span<const PiecewiseUniformValuation> vs,
                            bool strict_no_ell) {
  const std::int64_t Q = choose_precision(vs).Q;
  std::vector<IntegerValuation> ints;
  for (const auto& v : vs) ints.push_back(discretize(v, Q));
  return make_instance(ints, strict_no_ell);
}

// --- flow -------------------------------------------------------------------

PlainFlow make_plain_flow(std::vector<I64> A, IMatrix B, std::vector<I64> C) {
  PlainFlow f;
  const std::size_t K = A.size();
  const std::size_t n = C.size();
  f.A = std::move(A);
  f.B = std::move(B);
  f.C = std::move(C);
  f.a.assign(K, 0);
  f.b.assign(K, std::vector<I64>(n, 0));
  f.c.assign(n, 0);
  return f;
}

void plain_greedy_pass(PlainFlow& f) {
  for (std::size_t k = 0; k < f.A.size(); ++k) {
    for (std::size_t i = 0; i < f.C.size(); ++i) {
      const I64 m = std::min({f.A[k], f.B[k][i], f.C[i]});
      f.flow += m;
      f.a[k] += m;
      f.b[k][i] += m;
      f.c[i] += m;
      f.A[k] -= m;
      f.B[k][i] -= m;
      f.C[i] -= m;
    }
  }
}

namespace {

struct PlainReach {
  std::vector<int> from_source, interval, agent;
  std::vector<int> agent_pred;     // interval index or -1
  std::vector<int> interval_pred;  // agent index or -1
  int endpoint = -1;
};

// Layered search with lowest-index predecessors, as in the secure version.
PlainReach plain_reach(const PlainFlow& f) {
  const int K = static_cast<int>(f.A.size());
  const int n = static_cast<int>(f.C.size());
  PlainReach r;
  for (int k = 0; k < K; ++k) r.from_source.push_back(f.A[k] > 0);
  r.interval = r.from_source;
  r.agent.assign(n, 0);
  r.agent_pred.assign(n, -1);
  r.interval_pred.assign(K, -1);
  for (int layer = 0; layer < n; ++layer) {
    for (int i = 0; i < n; ++i) {
      if (r.agent[i]) continue;
      for (int k = 0; k < K; ++k) {
        if (r.interval[k] && f.B[k][i] > 0) {
          r.agent_pred[i] = k;
          break;
        }
      }
    }
    for (int i = 0; i < n; ++i) r.agent[i] = r.agent[i] || r.agent_pred[i] >= 0;
    for (int k = 0; k < K; ++k) {
      if (r.interval[k]) continue;
      for (int i = 0; i < n; ++i) {
        if (r.agent[i] && f.b[k][i] > 0) {
          r.interval_pred[k] = i;
          break;
        }
      }
    }
    for (int k = 0; k < K; ++k) {
      r.interval[k] = r.interval[k] || r.interval_pred[k] >= 0;
    }
  }
  for (int i = 0; i < n; ++i) {
    if (r.agent[i] && f.C[i] > 0) {
      r.endpoint = i;
      break;
    }
  }
  return r;
}

}  // namespace

int plain_augment_step(PlainFlow& f, I64 big) {
  const PlainReach r = plain_reach(f);
  if (r.endpoint < 0) return 0;
  // Walk back to the source; the path alternates agent <- interval.
  std::vector<std::pair<int, int>> fwd, rev;  // (k, i)
  int src = -1;
  int i = r.endpoint;
  while (true) {
    const int k = r.agent_pred[i];
    fwd.emplace_back(k, i);
    if (r.from_source[k]) {
      src = k;
      break;
    }
    const int prev = r.interval_pred[k];
    rev.emplace_back(k, prev);
    i = prev;
  }
  I64 bn = std::min(big, f.C[r.endpoint]);
  bn = std::min(bn, f.A[src]);
  for (auto [k, j] : fwd) bn = std::min(bn, f.B[k][j]);
  for (auto [k, j] : rev) bn = std::min(bn, f.b[k][j]);
  f.C[r.endpoint] -= bn;
  f.c[r.endpoint] += bn;
  f.A[src] -= bn;
  f.a[src] += bn;
  for (auto [k, j] : fwd) {
    f.B[k][j] -= bn;
    f.b[k][j] += bn;
  }
  for (auto [k, j] : rev) {
    f.B[k][j] += bn;
    f.b[k][j] -= bn;
  }
  f.flow += bn;
  return 1;
}

std::vector<int> plain_reachable_agents(const PlainFlow& f) {
  return plain_reach(f).agent;
}

int plain_run_max_flow(PlainFlow& f, I64 target, bool stop_on_stall,
                       bool at_least_once, I64 big) {
  int loops = 0;
  bool progress = true;
  while (true) {
    if (!(at_least_once && loops == 0)) {
      bool guard = f.flow < target;
      if (stop_on_stall && loops > 0) guard = guard && progress;
      if (!guard) break;
    }
    const I64 before = f.flow;
    plain_greedy_pass(f);
    plain_augment_step(f, big);
    ++loops;
    progress = before < f.flow;
  }
  return loops;
}

PlainFlow max_flow_plain(std::vector<I64> A, IMatrix B, std::vector<I64> C) {
  I64 big = 1;
  for (I64 x : A) big += x;
  PlainFlow f = make_plain_flow(std::move(A), std::move(B), std::move(C));
  plain_run_max_flow(f, std::numeric_limits<I64>::max(), true, false, big);
  return f;
}

Rational edmonds_karp(std::vector<std::vector<Rational>> cap) {
  const std::size_t N = cap.size();
  if (N < 2) return 0;
  const std::size_t s = 0;
  const std::size_t t = N - 1;
  Rational total = 0;
  while (true) {
    std::vector<int> parent(N, -1);
    parent[s] = static_cast<int>(s);
    std::deque<std::size_t> queue{s};
    while (!queue.empty() && parent[t] < 0) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v = 0; v < N; ++v) {
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = static_cast<int>(u);
          queue.push_back(v);
        }
      }
    }
    if (parent[t] < 0) return total;
    Rational bn = -1;
    for (std::size_t v = t; v != s; v = parent[v]) {
      const Rational& c = cap[parent[v]][v];
      if (bn < 0 || c < bn) bn = c;
    }
    for (std::size_t v = t; v != s; v = parent[v]) {
      cap[parent[v]][v] -= bn;
      cap[v][parent[v]] += bn;
    }
    total += bn;
  }
}

Rational layered_max_flow(std::span<const I64> A, const IMatrix& B,
                          std::span<const I64> C) {
  const std::size_t K = A.size();
  const std::size_t n = C.size();
  const std::size_t N = K + n + 2;
  std::vector<std::vector<Rational>> cap(N, std::vector<Rational>(N, 0));
  for (std::size_t k = 0; k < K; ++k) {
    cap[0][1 + k] = A[k];
    for (std::size_t i = 0; i < n; ++i) cap[1 + k][1 + K + i] = B[k][i];
  }
  for (std::size_t i = 0; i < n; ++i) cap[1 + K + i][N - 1] = C[i];
  return edmonds_karp(std::move(cap));
}

// --- register mirror --------------------------------------------------------

OracleResult cc_puv_allocate(const PlainInstance& inst,
                             const OracleOptions& opts) {
  const int n = inst.n;
  const I64 Q = inst.Q;
  const I64 nf = factorial(n);
  const I64 big = magnitude_bound(n, Q);
  const I64 sentinel = n * (Q + 1);
  OracleResult res;
  ProtocolTrace& tr = res.trace;

  std::vector<I64> W;
  for (const auto& v : inst.valuations) {
    for (int j = 1; j <= inst.slots; ++j) {
      W.push_back(v.a(j));
      W.push_back(v.b(j));
    }
  }
  W.push_back(0);
  W.push_back(Q);
  std::sort(W.begin(), W.end());
  const int K = static_cast<int>(W.size()) - 1;
  std::vector<I64> len(K);
  for (int k = 0; k < K; ++k) len[k] = W[k + 1] - W[k];
  IMatrix des(n, std::vector<I64>(K, 0));
  for (int i = 0; i < n; ++i) {
    const auto& v = inst.valuations[i];
    for (int k = 0; k < K; ++k) {
      if (len[k] == 0) continue;
      for (int j = 1; j <= inst.slots; ++j) {
        if (v.a(j) <= W[k] && W[k + 1] <= v.b(j)) des[i][k] = 1;
      }
    }
  }
  tr.W = W;
  tr.interval_len = len;
  tr.desired = des;

  std::vector<I64> avail(K, 1), served(n, 0), den(n, 0);
  IMatrix alloc(n, std::vector<I64>(K, 0));
  I64 num_served = 0;

  auto covered_len = [&](const std::vector<I64>& members) {
    I64 total = 0;
    for (int k = 0; k < K; ++k) {
      bool any = false;
      for (int i = 0; i < n; ++i) any = any || (members[i] && des[i][k]);
      if (any) total += avail[k] * len[k];
    }
    return total;
  };
  auto feasibility_flow = [&](I64 c) {
    std::vector<I64> A(K);
    IMatrix B(K, std::vector<I64>(n));
    for (int k = 0; k < K; ++k) {
      A[k] = nf * avail[k] * len[k];
      for (int i = 0; i < n; ++i) B[k][i] = nf * len[k] * des[i][k] * (1 - served[i]);
    }
    PlainFlow f = make_plain_flow(std::move(A), std::move(B), std::vector<I64>(n, c));
    const I64 target = c * (n - num_served);
    plain_run_max_flow(f, target, true, opts.pad_iterations, big);
    return std::make_pair(f, target);
  };

  const unsigned subsets = (1u << n) - 1;
  while (true) {
    if (opts.pad_iterations ? res.iterations == n : num_served == n) break;

    // Reference minimum by enumeration, before anything changes.
    {
      I64 best = -1;
      int hits = 0;
      for (unsigned u = 1; u <= subsets; ++u) {
        I64 size = 0;
        bool legal = true;
        std::vector<I64> mem(n, 0);
        for (int i = 0; i < n; ++i) {
          if (u & (1u << i)) {
            mem[i] = 1;
            ++size;
            legal = legal && served[i] == 0;
          }
        }
        if (!legal) continue;
        const I64 avg = nf * covered_len(mem) / size;
        if (best < 0 || avg < best) {
          best = avg;
          hits = 1;
        } else if (avg == best) {
          ++hits;
        }
      }
      res.min_average.push_back(best);
      res.unique_minimizer.push_back(hits == 1);
    }

    IterationSnapshot snap;
    std::vector<I64> best_set(n, 0);
    I64 min_len = 0;
    I64 size_best = 0;
    if (opts.mode == SearchMode::kExhaustive) {
      min_len = sentinel;
      for (unsigned u = 1; u <= subsets; ++u) {
        std::vector<I64> mem(n, 0);
        I64 size = 0;
        I64 served_in = 0;
        for (int i = 0; i < n; ++i) {
          if (u & (1u << i)) {
            mem[i] = 1;
            ++size;
            served_in += served[i];
          }
        }
        const I64 len_star = served_in == 0 ? covered_len(mem) : sentinel;
        if (size_best * len_star < size * min_len) {
          best_set = mem;
          min_len = len_star;
          size_best = size;
        }
      }
    } else {
      I64 lo = 0;
      I64 hi = Q * nf + 1;
      while (hi - lo != 1) {
        const I64 mid = (lo + hi) / 2;
        auto [f, target] = feasibility_flow(mid);
        if (f.flow == target) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      snap.c_star = lo;
      auto [f, target] = feasibility_flow(lo + 1);
      (void)target;
      const std::vector<int> reach = plain_reachable_agents(f);
      for (int i = 0; i < n; ++i) best_set[i] = !reach[i] && !served[i];
      min_len = covered_len(best_set);
      for (I64 b : best_set) size_best += b;
    }
    if (opts.pad_iterations && num_served == n) {
      std::fill(best_set.begin(), best_set.end(), 0);
      min_len = 0;
      size_best = 0;
    }

    // Served and available.
    for (int i = 0; i < n; ++i) served[i] += best_set[i];
    num_served += size_best;
    std::vector<I64> selected(K, 0);
    for (int k = 0; k < K; ++k) {
      bool any = false;
      for (int i = 0; i < n; ++i) any = any || (best_set[i] && des[i][k]);
      selected[k] = avail[k] * (any ? 1 : 0);
    }
    for (int k = 0; k < K; ++k) avail[k] *= 1 - selected[k];

    // Flow on the selected intervals.
    std::vector<I64> A(K);
    IMatrix B(K, std::vector<I64>(n));
    for (int k = 0; k < K; ++k) {
      A[k] = size_best * selected[k] * len[k];
      for (int i = 0; i < n; ++i) B[k][i] = size_best * len[k] * des[i][k] * best_set[i];
    }
    PlainFlow f = make_plain_flow(std::move(A), std::move(B),
                                  std::vector<I64>(n, min_len));
    const int loops = plain_run_max_flow(f, min_len * size_best, false,
                                         opts.pad_iterations, big);
    for (int i = 0; i < n; ++i) {
      den[i] += size_best * best_set[i];
      for (int k = 0; k < K; ++k) alloc[i][k] += f.b[k][i];
    }
    ++res.iterations;

    snap.best_subset = best_set;
    snap.min_len = min_len;
    snap.size_best = size_best;
    snap.served = served;
    snap.selected = selected;
    snap.available = avail;
    snap.flow = f.b;
    snap.total_flow = f.flow;
    snap.flow_loops = loops;
    tr.iterations.push_back(std::move(snap));
  }
  tr.allocation = alloc;
  tr.denominator = den;

  // Serving.
  std::vector<I64> excl(K, 0);
  for (int k = 0; k < K; ++k) {
    int count = 0;
    int last = 0;
    for (int i = 0; i < n; ++i) {
      if (alloc[i][k] > 0) {
        ++count;
        last = i + 1;
      }
    }
    excl[k] = count == 1 ? last : 0;
  }
  tr.exclusive = excl;
  res.allocation.assign(n, {});
  const I64 scaled_q = nf * Q;
  auto add_piece = [&](int agent, Rational lo, Rational hi) {
    if (lo < hi) res.allocation[agent - 1].push_back({std::move(lo), std::move(hi)});
  };
  int k = 0;
  while (k < K) {
    if (excl[k] > 0) {
      int j = k + 1;
      while (j < K && excl[j] == excl[j - 1]) ++j;
      for (int i = 1; i <= n; ++i) {
        const bool owner = excl[k] == i;
        PortionMessage m{i, k + 1, j + 1, true, owner ? W[k] : Q, owner ? W[j] : Q};
        add_piece(i, Rational(m.start, Q), Rational(m.end, Q));
        tr.portions.push_back(m);
      }
      k = j;
    } else {
      I64 pos = nf * W[k];
      for (int i = 1; i <= n; ++i) {
        const I64 num = nf * alloc[i - 1][k];
        const I64 d = den[i - 1];
        if (d <= 0) throw std::logic_error("agent never served");
        if (num % d != 0) throw std::logic_error("inexact portion");
        const I64 size = num / d;
        const bool rel = alloc[i - 1][k] > 0;
        PortionMessage m{i, k + 1, k + 2, false, rel ? pos : scaled_q,
                         rel ? pos + size : scaled_q};
        add_piece(i, Rational(m.start, scaled_q), Rational(m.end, scaled_q));
        tr.portions.push_back(m);
        pos += size;
      }
      ++k;
    }
  }
  return res;
}

// --- naive recursion --------------------------------------------------------

NaiveResult naive_cc_puv(std::span<const PiecewiseUniformValuation> vs) {
  const int n = static_cast<int>(vs.size());
  if (n < 1 || n > 16) throw std::invalid_argument("naive oracle needs 1..16 agents");
  // Atoms between consecutive endpoints.
  std::vector<Rational> cuts{Rational(0), Rational(1)};
  for (const auto& v : vs) {
    for (const auto& iv : v.intervals()) {
      cuts.push_back(iv.lo);
      cuts.push_back(iv.hi);
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  const int K = static_cast<int>(cuts.size()) - 1;
  std::vector<std::vector<bool>> wants(n, std::vector<bool>(K, false));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < K; ++k) {
      for (const auto& iv : vs[i].intervals()) {
        if (iv.lo <= cuts[k] && cuts[k + 1] <= iv.hi) wants[i][k] = true;
      }
    }
  }
  std::vector<bool> left(K, true);
  std::vector<bool> done(n, false);
  NaiveResult res;
  res.amount.assign(n, 0);
  res.round.assign(n, 0);
  for (int level = 1;; ++level) {
    std::vector<int> rest;
    for (int i = 0; i < n; ++i) {
      if (!done[i]) rest.push_back(i);
    }
    if (rest.empty()) break;
    // Union of every minimizer is itself a minimizer.
    Rational best = -1;
    std::vector<bool> pick(n, false);
    for (unsigned mask = 1; mask < (1u << rest.size()); ++mask) {
      std::vector<bool> in(n, false);
      int size = 0;
      for (std::size_t t = 0; t < rest.size(); ++t) {
        if (mask & (1u << t)) {
          in[rest[t]] = true;
          ++size;
        }
      }
      Rational demand = 0;
      for (int k = 0; k < K; ++k) {
        bool any = false;
        for (int i = 0; i < n; ++i) any = any || (in[i] && wants[i][k]);
        if (any && left[k]) demand += cuts[k + 1] - cuts[k];
      }
      const Rational avg = demand / size;
      if (best < 0 || avg < best) {
        best = avg;
        pick = in;
      } else if (avg == best) {
        for (int i = 0; i < n; ++i) pick[i] = pick[i] || in[i];
      }
    }
    // An exact allocation must exist: flow of `best` into every member.
    std::vector<int> members;
    for (int i = 0; i < n; ++i) {
      if (pick[i]) members.push_back(i);
    }
    const std::size_t N = K + members.size() + 2;
    std::vector<std::vector<Rational>> cap(N, std::vector<Rational>(N, 0));
    for (int k = 0; k < K; ++k) {
      if (!left[k]) continue;
      cap[0][1 + k] = cuts[k + 1] - cuts[k];
      for (std::size_t t = 0; t < members.size(); ++t) {
        if (wants[members[t]][k]) cap[1 + k][1 + K + t] = cap[0][1 + k];
      }
    }
    for (std::size_t t = 0; t < members.size(); ++t) cap[1 + K + t][N - 1] = best;
    if (edmonds_karp(cap) != best * static_cast<int>(members.size())) {
      throw std::logic_error("no exact allocation for the minimizing subset");
    }
    for (int i : members) {
      done[i] = true;
      res.amount[i] = best;
      res.round[i] = level;
    }
    for (int k = 0; k < K; ++k) {
      for (int i : members) {
        if (wants[i][k]) left[k] = false;
      }
    }
  }
  return res;
}

// --- fairness ---------------------------------------------------------------

Rational total_length(std::span<const Interval> pieces) {
  Rational t = 0;
  for (const auto& p : pieces) t += p.length();
  return t;
}

FairnessReport check_fairness(std::span<const PiecewiseUniformValuation> vs,
                              const Allocation& alloc) {
  FairnessReport rep;
  const int n = static_cast<int>(vs.size());
  for (int i = 0; i < n; ++i) {
    const Rational own = measure(vs[i], alloc[i]);
    if (own * n < 1 && rep.proportional) {
      rep.proportional = false;
      if (rep.detail.empty()) {
        rep.detail = "agent " + std::to_string(i + 1) + " values its piece at " +
                     format_rational(own) + " < 1/" + std::to_string(n);
      }
    }
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const Rational other = measure(vs[i], alloc[j]);
      if (other > own && rep.envy_free) {
        rep.envy_free = false;
        if (rep.detail.empty()) {
          rep.detail = "agent " + std::to_string(i + 1) + " envies agent " +
                       std::to_string(j + 1) + ": " + format_rational(other) +
                       " > " + format_rational(own);
        }
      }
    }
  }
  return rep;
}

// --- corpus -----------------------------------------------------------------

std::vector<PiecewiseUniformValuation> random_valuations(std::mt19937_64& rng,
                                                         int n,
                                                         int max_intervals,
                                                         int digits) {
  const I64 Q = pow10(digits);
  if (2 * max_intervals > Q + 1) throw std::invalid_argument("grid too coarse");
  std::uniform_int_distribution<int> count(1, max_intervals);
  std::vector<PiecewiseUniformValuation> out;
  for (int i = 0; i < n; ++i) {
    const int ell = count(rng);
    std::vector<I64> pts;
    std::uniform_int_distribution<I64> pick(0, Q);
    while (static_cast<int>(pts.size()) < 2 * ell) {
      const I64 x = pick(rng);
      if (std::find(pts.begin(), pts.end(), x) == pts.end()) pts.push_back(x);
    }
    std::sort(pts.begin(), pts.end());
    std::vector<Interval> ivs;
    for (int j = 0; j < ell; ++j) {
      ivs.push_back({Rational(pts[2 * j], Q), Rational(pts[2 * j + 1], Q)});
    }
    out.emplace_back(std::move(ivs));
  }
  return out;
}

// --- strategyproofness ------------------------------------------------------

std::vector<IntegerValuation> grid_valuations(std::int64_t Q,
                                              int max_intervals) {
  std::vector<IntegerValuation> out;
  std::vector<I64> ends;
  // Strictly increasing endpoint sequences of length 2m.
  auto rec = [&](auto&& self, int m, I64 from) -> void {
    if (static_cast<int>(ends.size()) == 2 * m) {
      IntegerValuation v;
      v.Q = Q;
      v.ell = m;
      v.endpoints = ends;
      out.push_back(std::move(v));
      return;
    }
    for (I64 x = from; x <= Q; ++x) {
      ends.push_back(x);
      self(self, m, x + 1);
      ends.pop_back();
    }
  };
  for (int m = 1; m <= max_intervals; ++m) rec(rec, m, 0);
  return out;
}

namespace {

using Mask = std::bitset<512>;

Mask valuation_mask(const IntegerValuation& v, I64 unit) {
  Mask m;
  for (int j = 1; j <= v.ell; ++j) {
    for (I64 x = v.a(j) * unit; x < v.b(j) * unit; ++x) m.set(x);
  }
  return m;
}

Mask piece_mask(std::span<const Interval> pieces, I64 units) {
  Mask m;
  for (const auto& p : pieces) {
    const Rational lo = p.lo * units;
    const Rational hi = p.hi * units;
    if (boost::multiprecision::denominator(lo) != 1 ||
        boost::multiprecision::denominator(hi) != 1) {
      throw std::logic_error("piece off the n!Q grid");
    }
    const I64 a = static_cast<I64>(boost::multiprecision::numerator(lo));
    const I64 b = static_cast<I64>(boost::multiprecision::numerator(hi));
    for (I64 x = a; x < b; ++x) m.set(x);
  }
  return m;
}

std::string describe_valuation(const IntegerValuation& v) {
  std::ostringstream os;
  for (int j = 1; j <= v.ell; ++j) {
    os << (j > 1 ? " " : "") << '[' << v.a(j) << ',' << v.b(j) << ')';
  }
  os << " /" << v.Q;
  return os.str();
}

}  // namespace

StrategyproofReport check_strategyproof_grid(std::int64_t Q,
                                             int max_intervals) {
  const int n = 2;
  const I64 unit = factorial(n);
  if (unit * Q > 512) throw std::invalid_argument("grid too fine");
  const std::vector<IntegerValuation> grid = grid_valuations(Q, max_intervals);
  const std::size_t G = grid.size();
  std::vector<Mask> truth(G);
  for (std::size_t g = 0; g < G; ++g) truth[g] = valuation_mask(grid[g], unit);
  // piece[x][y][i]: agent i's piece when agent 1 reports x and agent 2 y.
  std::vector<Mask> piece1(G * G), piece2(G * G);
  for (std::size_t x = 0; x < G; ++x) {
    for (std::size_t y = 0; y < G; ++y) {
      const IntegerValuation pair[2] = {grid[x], grid[y]};
      const OracleResult r = cc_puv_allocate(make_instance(pair));
      piece1[x * G + y] = piece_mask(r.allocation[0], unit * Q);
      piece2[x * G + y] = piece_mask(r.allocation[1], unit * Q);
    }
  }
  StrategyproofReport rep;
  for (std::size_t x = 0; x < G; ++x) {
    for (std::size_t y = 0; y < G; ++y) {
      ++rep.profiles;
      const std::size_t u1 = (piece1[x * G + y] & truth[x]).count();
      const std::size_t u2 = (piece2[x * G + y] & truth[y]).count();
      for (std::size_t r = 0; r < G; ++r) {
        if (r != x) {
          ++rep.deviations;
          if ((piece1[r * G + y] & truth[x]).count() > u1) {
            if (rep.violations++ == 0) {
              rep.first_violation = "agent 1 truth " + describe_valuation(grid[x]) +
                                    " other " + describe_valuation(grid[y]) +
                                    " gains by reporting " + describe_valuation(grid[r]);
            }
          }
        }
        if (r != y) {
          ++rep.deviations;
          if ((piece2[x * G + r] & truth[y]).count() > u2) {
            if (rep.violations++ == 0) {
              rep.first_violation = "agent 2 truth " + describe_valuation(grid[y]) +
                                    " other " + describe_valuation(grid[x]) +
                                    " gains by reporting " + describe_valuation(grid[r]);
            }
          }
        }
      }
    }
  }
  return rep;
}

StrategyproofReport check_strategyproof(
    std::span<const IntegerValuation> truth, int agent,
    std::span<const IntegerValuation> misreports) {
  if (agent < 1 || agent > static_cast<int>(truth.size())) {
    throw std::invalid_argument("agent out of range");
  }
  std::vector<PiecewiseUniformValuation> real;
  for (const auto& v : truth) real.push_back(from_integer(v));
  const PiecewiseUniformValuation& mine = real[agent - 1];
  const Rational honest =
      measure(mine, cc_puv_allocate(make_instance(truth)).allocation[agent - 1]);
  StrategyproofReport rep;
  rep.profiles = 1;
  std::vector<IntegerValuation> profile(truth.begin(), truth.end());
  for (const auto& lie : misreports) {
    profile[agent - 1] = lie;
    ++rep.deviations;
    const Rational got = measure(
        mine, cc_puv_allocate(make_instance(profile)).allocation[agent - 1]);
    if (got > honest && rep.violations++ == 0) {
      rep.first_violation = "agent " + std::to_string(agent) + " gains " +
                            format_rational(got) + " > " + format_rational(honest) +
                            " by reporting " + describe_valuation(lie);
    }
  }
  return rep;
}

}  // namespace ppcc
