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

#include "ppcc/audit.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <boost/math/distributions/chi_squared.hpp>

#include "ppcc/shamir.h"

namespace ppcc {

namespace {

void ksubsets(int n, int k, int from, std::vector<int>& cur,
              std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = from; i <= n; ++i) {
    cur.push_back(i);
    ksubsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

MessageAudit audit_messages(const Transcript& t, int n) {
  MessageAudit a;
  a.n = n;
  for (int k = 0; k < static_cast<int>(GateKind::kCount_); ++k) {
    const auto kind = static_cast<GateKind>(k);
    const GateSummary& s = t.summary(kind);
    if (s.invocations == 0) continue;
    a.rows.push_back({gate_name(kind), s.invocations, s.elements, s.messages});
    if (kind == GateKind::kInput || kind == GateKind::kMul ||
        kind == GateKind::kOpen || kind == GateKind::kReveal) {
      a.primitive_invocations += s.invocations;
    }
  }
  const GateSummary& mul = t.summary(GateKind::kMul);
  a.mul_invocations = mul.invocations;
  a.mul_messages = mul.messages;
  const std::uint64_t per = static_cast<std::uint64_t>(n) * (n - 1);
  if (t.recording() && !t.gate_log().empty()) {
    a.per_mul_exact = mul.invocations > 0;
    for (const auto& g : t.gate_log()) {
      if (g.kind == GateKind::kMul && g.messages != per) a.per_mul_exact = false;
    }
  } else {
    a.per_mul_exact = mul.invocations > 0 && mul.messages == per * mul.invocations;
  }
  a.total_messages = t.total_messages();
  if (a.primitive_invocations > 0) {
    a.c = static_cast<double>(a.total_messages) /
          (static_cast<double>(n) * n * static_cast<double>(a.primitive_invocations));
  }
  a.within_bound = a.c <= 1.0;
  return a;
}

std::string MessageAudit::text() const {
  std::ostringstream os;
  os << "gate            invocations     elements     messages\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(14) << r.gate << std::right << std::setw(13)
       << r.invocations << std::setw(13) << r.elements << std::setw(13)
       << r.messages << '\n';
  }
  os << "total messages: " << total_messages << '\n';
  os << "messages per mul: "
     << (mul_invocations ? mul_messages / mul_invocations : 0)
     << " (n(n-1) = " << n * (n - 1) << ", "
     << (per_mul_exact ? "exact" : "MISMATCH") << ")\n";
  os << "primitive invocations: " << primitive_invocations << '\n';
  os << std::fixed << std::setprecision(4) << "c = messages / (n^2 * primitives) = "
     << c << (within_bound ? " (<= 1, fits)" : " (> 1, EXCEEDS)") << '\n';
  return os.str();
}

ShareAudit audit_shares(int n, std::uint64_t secret, int samples, int bins,
                        double alpha, std::uint64_t seed) {
  ShareAudit a;
  const ShareParams params = ShareParams::for_parties(n);
  a.n = n;
  a.t = params.t;
  a.samples = samples;
  a.bins = bins;
  a.alpha = alpha;
  const int k = params.t - 1;
  if (k == 0) return a;  // a single share determines nothing to test
  const PrimeModulus mod((std::uint64_t{1} << 61) - 1);
  Rng rng(seed);
  std::vector<Sharing> draws;
  draws.reserve(samples);
  for (int s = 0; s < samples; ++s) draws.push_back(share(secret, params, mod, rng));

  std::vector<std::vector<int>> coalitions;
  std::vector<int> cur;
  ksubsets(n, k, 1, cur, coalitions);
  std::size_t cells = 1;
  for (int j = 0; j < k; ++j) cells *= bins;
  const double expected = static_cast<double>(samples) / static_cast<double>(cells);
  boost::math::chi_squared dist(static_cast<double>(cells - 1));
  const double critical = boost::math::quantile(boost::math::complement(dist, alpha));
  for (const auto& c : coalitions) {
    std::vector<std::uint64_t> hist(cells, 0);
    for (const auto& d : draws) {
      std::size_t cell = 0;
      for (int party : c) {
        const auto b = static_cast<std::size_t>(
            static_cast<unsigned __int128>(d.share_of(party)) * bins / mod.p());
        cell = cell * bins + b;
      }
      ++hist[cell];
    }
    double stat = 0;
    for (std::uint64_t h : hist) {
      const double diff = static_cast<double>(h) - expected;
      stat += diff * diff / expected;
    }
    CoalitionTest test{c, stat, critical, stat <= critical};
    a.pass = a.pass && test.pass;
    a.tests.push_back(std::move(test));
  }
  return a;
}

std::string ShareAudit::text() const {
  std::ostringstream os;
  os << "n=" << n << " t=" << t << " samples=" << samples << " bins=" << bins
     << " alpha=" << alpha << '\n';
  if (tests.empty()) {
    os << "no coalition below the threshold holds a share; nothing to test\n";
  }
  os << std::fixed << std::setprecision(2);
  for (const auto& c : tests) {
    os << "parties {";
    for (std::size_t j = 0; j < c.parties.size(); ++j) {
      os << (j ? "," : "") << c.parties[j];
    }
    os << "} chi2=" << c.statistic << " critical=" << c.critical << ' '
       << (c.pass ? "uniform" : "REJECTED") << '\n';
  }
  os << (pass ? "PASS" : "FAIL") << '\n';
  return os.str();
}

bool is_declared_source(RevealKind kind, const std::string& source) {
  switch (kind) {
    case RevealKind::kPublicBound:
      return source == "digits d" || source == "ell";
    case RevealKind::kCheaterFlag:
      return source.rfind("Cheater_", 0) == 0;
    case RevealKind::kLoopGuard:
      return source == "NumAgentsServed=n" || source == "flow<MaxFlow" ||
             source == "IsFeasible flow<target" ||
             source == "G(c*+1) flow<target" || source == "c_U-c_L=1" ||
             source == "i_U-i_L=1" || source == "0<ExclusiveInterval(k)" ||
             source == "ExclusiveInterval(j)=ExclusiveInterval(j-1)";
    case RevealKind::kOutput:
      return true;
  }
  return false;
}

LeakageAudit audit_leakage(const Transcript& t) {
  LeakageAudit a;
  for (const auto& r : t.reveals()) {
    if (r.kind == RevealKind::kOutput) {
      if (r.target != r.subject) a.outputs_owner_only = false;
      continue;
    }
    auto it = std::find_if(a.entries.begin(), a.entries.end(), [&](const LeakageEntry& e) {
      return e.source == r.source && e.kind == r.kind;
    });
    if (it == a.entries.end()) {
      a.entries.push_back({r.source, r.kind, 0, is_declared_source(r.kind, r.source)});
      it = a.entries.end() - 1;
    }
    ++it->count;
    if (!it->declared) a.only_declared = false;
    if (r.kind != RevealKind::kPublicBound && r.value > 1) a.bits_only = false;
  }
  for (const auto& m : t.messages()) {
    if (m.tag == MessageTag::kReveal && m.subject > 0 && m.to != m.subject) {
      ++a.misaddressed;
      a.outputs_owner_only = false;
    }
  }
  return a;
}

std::string LeakageAudit::text() const {
  std::ostringstream os;
  os << "kind          count  source\n";
  for (const auto& e : entries) {
    os << std::left << std::setw(13) << reveal_kind_name(e.kind) << std::right
       << std::setw(6) << e.count << "  " << e.source
       << (e.declared ? "" : "  [UNDECLARED]") << '\n';
  }
  os << "only declared values: " << (only_declared ? "yes" : "NO") << '\n';
  os << "guards and flags are bits: " << (bits_only ? "yes" : "NO") << '\n';
  os << "outputs addressed to owner only: " << (outputs_owner_only ? "yes" : "NO");
  if (misaddressed) os << " (" << misaddressed << " misaddressed)";
  os << '\n';
  return os.str();
}

}  // namespace ppcc
