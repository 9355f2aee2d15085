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

#include "ppcc/intervals_phase.h"

#include <bit>
#include <numeric>

namespace ppcc {

int rank_bits(std::int64_t Q) {
  return static_cast<int>(std::bit_width(static_cast<std::uint64_t>(Q)));
}

std::vector<std::vector<Sharing>> compute_interval_desired(
    Engine& engine, const SharedValuationSet& sv,
    const std::vector<Sharing>& W, const std::vector<Sharing>& len) {
  const int n = sv.n;
  const int ell = sv.ell;
  const int K = static_cast<int>(len.size());
  // a <= W(k) is a < W(k) + 1, and W(k+1) <= b is W(k+1) < b + 1.
  std::vector<Sharing> lhs, rhs;
  lhs.reserve(2 * n * ell * K);
  rhs.reserve(2 * n * ell * K);
  std::vector<Sharing> w_plus(K + 1);
  for (int k = 0; k <= K; ++k) w_plus[k] = engine.add_const(W[k], 1);
  for (int i = 0; i < n; ++i) {
    std::vector<Sharing> b_plus(ell);
    for (int j = 0; j < ell; ++j) b_plus[j] = engine.add_const(sv.b[i][j], 1);
    for (int k = 0; k < K; ++k) {
      for (int j = 0; j < ell; ++j) {
        lhs.push_back(sv.a[i][j]);
        rhs.push_back(w_plus[k]);
        lhs.push_back(W[k + 1]);
        rhs.push_back(b_plus[j]);
      }
    }
  }
  std::vector<Sharing> cmp = engine.less_than(lhs, rhs);
  std::vector<Sharing> left, right;
  for (std::size_t t = 0; t < cmp.size(); t += 2) {
    left.push_back(cmp[t]);
    right.push_back(cmp[t + 1]);
  }
  std::vector<Sharing> inside = engine.mul(left, right);
  std::vector<std::vector<Sharing>> groups;
  groups.reserve(static_cast<std::size_t>(n) * K);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < K; ++k) {
      const auto first = inside.begin() + (static_cast<std::ptrdiff_t>(i) * K + k) * ell;
      groups.emplace_back(first, first + ell);
    }
  }
  std::vector<Sharing> covered = engine.or_all_batch(groups);
  std::vector<Sharing> empty = engine.eq_zero(len);
  std::vector<Sharing> nonempty_rep, cov;
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < K; ++k) {
      nonempty_rep.push_back(engine.one_minus(empty[k]));
      cov.push_back(covered[static_cast<std::size_t>(i) * K + k]);
    }
  }
  std::vector<Sharing> bits = engine.mul(nonempty_rep, cov);
  std::vector<std::vector<Sharing>> out(n);
  for (int i = 0; i < n; ++i) {
    out[i].assign(bits.begin() + static_cast<std::ptrdiff_t>(i) * K,
                  bits.begin() + static_cast<std::ptrdiff_t>(i + 1) * K);
  }
  return out;
}

ProtocolState run_intervals_phase(Engine& engine,
                                  const SharedValuationSet& sv) {
  ProtocolState st;
  st.n = sv.n;
  st.Q = sv.Q;
  std::vector<Sharing> V;
  for (int i = 0; i < sv.n; ++i) {
    for (int j = 0; j < sv.ell; ++j) {
      V.push_back(sv.a[i][j]);
      V.push_back(sv.b[i][j]);
    }
  }
  V.push_back(engine.constant(0));
  V.push_back(engine.constant(sv.Q));
  st.m = static_cast<int>(V.size());

  std::vector<int> ranks(st.m);
  std::iota(ranks.begin(), ranks.end(), 1);
  st.W = engine.kth_ranked(V, ranks, rank_bits(sv.Q));

  const int K = st.m - 1;
  for (int k = 0; k < K; ++k) {
    st.len.push_back(engine.sub(st.W[k + 1], st.W[k]));
    st.available.push_back(engine.constant(1));
  }
  st.desired = compute_interval_desired(engine, sv, st.W, st.len);
  st.allocation.assign(sv.n, std::vector<Sharing>(K, engine.constant(0)));
  st.denominator.assign(sv.n, engine.constant(0));
  st.served.assign(sv.n, engine.constant(0));
  st.num_served = engine.constant(0);
  return st;
}

}  // namespace ppcc
