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

#include "ppcc/sharing_phase.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ppcc {

namespace {

// Pairwise tree of secure maxima.
Sharing secure_max_all(Engine& e, std::vector<Sharing> xs) {
  while (xs.size() > 1) {
    std::vector<Sharing> lhs, rhs;
    for (std::size_t k = 0; k + 1 < xs.size(); k += 2) {
      lhs.push_back(xs[k]);
      rhs.push_back(xs[k + 1]);
    }
    std::vector<Sharing> next = e.max(lhs, rhs);
    if (xs.size() % 2 == 1) next.push_back(xs.back());
    xs = std::move(next);
  }
  return xs.empty() ? e.constant(0) : xs[0];
}

// Product tree; returns one product per group.
std::vector<Sharing> product_all(Engine& e,
                                 std::vector<std::vector<Sharing>> groups) {
  while (true) {
    std::vector<Sharing> lhs, rhs;
    for (const auto& g : groups) {
      for (std::size_t k = 0; k + 1 < g.size(); k += 2) {
        lhs.push_back(g[k]);
        rhs.push_back(g[k + 1]);
      }
    }
    if (lhs.empty()) break;
    std::vector<Sharing> p = e.mul(lhs, rhs);
    std::size_t pos = 0;
    for (auto& g : groups) {
      std::vector<Sharing> next;
      for (std::size_t k = 0; k + 1 < g.size(); k += 2) {
        next.push_back(std::move(p[pos++]));
      }
      if (g.size() % 2 == 1) next.push_back(std::move(g.back()));
      g = std::move(next);
    }
  }
  std::vector<Sharing> out;
  for (auto& g : groups) out.push_back(g.empty() ? e.constant(1) : g[0]);
  return out;
}

}  // namespace

int agree_interval_bound(std::span<const int> declared_ells) {
  int hi = 1;
  for (int l : declared_ells) hi = std::max(hi, l);
  return static_cast<int>(std::bit_ceil(static_cast<unsigned>(hi)));
}

int agree_digits(Engine& engine, std::span<const int> digits) {
  if (static_cast<int>(digits.size()) != engine.n()) {
    throw std::invalid_argument("one digit count per agent expected");
  }
  std::vector<Sharing> shared;
  for (int i = 1; i <= engine.n(); ++i) {
    shared.push_back(engine.input(i, static_cast<std::uint64_t>(digits[i - 1])));
  }
  const Sharing d = secure_max_all(engine, shared);
  return static_cast<int>(
      engine.reveal(d, RevealKind::kPublicBound, "digits d"));
}

SharingOutcome run_sharing_phase(Engine& engine,
                                 std::span<const SubmittedValuation> inputs,
                                 int L, std::int64_t Q, bool strict_no_ell) {
  const int n = engine.n();
  if (static_cast<int>(inputs.size()) != n) {
    throw std::invalid_argument("one submission per agent expected");
  }
  const PrimeModulus& mod = engine.modulus();
  std::vector<std::vector<Sharing>> a(n), b(n);
  std::vector<Sharing> ell_i(n);
  for (int i = 1; i <= n; ++i) {
    const auto& in = inputs[i - 1];
    if (static_cast<int>(in.endpoints.size()) != 2 * L) {
      throw std::invalid_argument("submission must hold 2L endpoints");
    }
    std::vector<std::uint64_t> raw;
    for (std::int64_t x : in.endpoints) raw.push_back(mod.from_signed(x));
    raw.push_back(mod.from_signed(in.ell));
    std::vector<Sharing> s = engine.input(i, raw);
    for (int j = 0; j < L; ++j) {
      a[i - 1].push_back(s[2 * j]);
      b[i - 1].push_back(s[2 * j + 1]);
    }
    ell_i[i - 1] = s[2 * L];
  }

  // Count check: ell_i <= L. Ordering check with sentinels b_0 = 0 and
  // a_{L+1} = Q. Both are comparisons and go in one batch.
  const Sharing zero = engine.constant(0);
  const Sharing q_const = engine.constant(Q);
  const Sharing l_const = engine.constant(L);
  std::vector<Sharing> lhs, rhs;
  for (int i = 0; i < n; ++i) {
    lhs.push_back(l_const);  // 1{L < ell_i}
    rhs.push_back(ell_i[i]);
    for (int j = 1; j <= L + 1; ++j) {
      // alpha_j = 1 - 1{a_j < b_{j-1}}
      lhs.push_back(j <= L ? a[i][j - 1] : q_const);
      rhs.push_back(j >= 2 ? b[i][j - 2] : zero);
    }
    for (int j = 1; j <= L; ++j) {
      // beta_j = 1 - 1{b_j < a_j}
      lhs.push_back(b[i][j - 1]);
      rhs.push_back(a[i][j - 1]);
    }
  }
  std::vector<Sharing> cmp = engine.less_than(lhs, rhs);
  const std::size_t per = 1 + (L + 1) + L;
  std::vector<Sharing> too_many(n);
  std::vector<std::vector<Sharing>> order_bits(n);
  for (int i = 0; i < n; ++i) {
    too_many[i] = cmp[i * per];
    for (std::size_t k = 1; k < per; ++k) {
      order_bits[i].push_back(engine.one_minus(cmp[i * per + k]));
    }
  }
  std::vector<Sharing> gamma = product_all(engine, order_bits);

  // Padding check: every slot is (Q, Q) or lies within the first ell_i.
  std::vector<Sharing> eq_in;
  std::vector<Sharing> le_lhs, le_rhs;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= L; ++j) {
      eq_in.push_back(engine.add_const(a[i][j - 1], -Q));
      eq_in.push_back(engine.add_const(b[i][j - 1], -Q));
      le_lhs.push_back(ell_i[i]);  // 1{j <= ell_i} = 1 - 1{ell_i < j}
      le_rhs.push_back(engine.constant(j));
    }
  }
  std::vector<Sharing> eqs = engine.eq_zero(eq_in);
  std::vector<Sharing> below = engine.less_than(le_lhs, le_rhs);
  std::vector<Sharing> eq_a, eq_b;
  for (std::size_t k = 0; k < eqs.size(); k += 2) {
    eq_a.push_back(eqs[k]);
    eq_b.push_back(eqs[k + 1]);
  }
  std::vector<Sharing> both_q = engine.mul(eq_a, eq_b);
  std::vector<Sharing> within(below.size());
  for (std::size_t k = 0; k < below.size(); ++k) {
    within[k] = engine.one_minus(below[k]);
  }
  std::vector<Sharing> slot_ok = engine.or_(both_q, within);
  std::vector<Sharing> count(n), l_vec(n, l_const);
  for (int i = 0; i < n; ++i) {
    count[i] = engine.sum(
        std::span<const Sharing>(slot_ok).subspan(static_cast<std::size_t>(i) * L, L));
  }
  std::vector<Sharing> bad_padding = engine.less_than(count, l_vec);

  // Cheater_i = too_many OR (gamma = 0) OR bad_padding.
  std::vector<Sharing> bad_order(n);
  for (int i = 0; i < n; ++i) bad_order[i] = engine.one_minus(gamma[i]);
  std::vector<std::vector<Sharing>> groups(n);
  for (int i = 0; i < n; ++i) groups[i] = {too_many[i], bad_order[i], bad_padding[i]};
  std::vector<Sharing> cheater = engine.or_all_batch(groups);

  SharingOutcome out;
  for (int i = 1; i <= n; ++i) {
    const std::uint64_t flag = engine.reveal(
        cheater[i - 1], RevealKind::kCheaterFlag,
        "Cheater_" + std::to_string(i));
    if (flag == 1) {
      out.cheaters.push_back(i);
    } else if (flag != 0) {
      throw std::logic_error("cheater flag is not a bit");
    }
  }
  if (!out.cheaters.empty()) {
    out.aborted = true;
    return out;
  }

  int ell = L;
  if (!strict_no_ell) {
    ell = static_cast<int>(engine.reveal(secure_max_all(engine, ell_i),
                                         RevealKind::kPublicBound, "ell"));
    for (int i = 0; i < n; ++i) {
      a[i].resize(ell);
      b[i].resize(ell);
    }
  }
  out.shared = SharedValuationSet{n, L, ell, Q, std::move(a), std::move(b),
                                  std::move(ell_i)};
  return out;
}

}  // namespace ppcc
