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

#include "ppcc/trace.h"

#include <sstream>

namespace ppcc {

namespace {

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string str(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ')';
  return os.str();
}

class Comparer {
 public:
  bool scalar(const char* phase, int it, const char* reg, std::int64_t want,
              std::int64_t got) {
    if (!d_.empty() || want == got) return d_.empty();
    d_ = {phase, it, reg, 0, str(want), str(got)};
    return false;
  }
  bool vec(const char* phase, int it, const char* reg,
           const std::vector<std::int64_t>& want,
           const std::vector<std::int64_t>& got) {
    if (!d_.empty()) return false;
    if (want.size() != got.size()) {
      d_ = {phase, it, reg, 0, str(want), str(got)};
      return false;
    }
    for (std::size_t k = 0; k < want.size(); ++k) {
      if (want[k] != got[k]) {
        d_ = {phase, it, reg, static_cast<int>(k) + 1, str(want[k]),
              str(got[k])};
        return false;
      }
    }
    return true;
  }
  bool mat(const char* phase, int it, const char* reg, const Matrix& want,
           const Matrix& got) {
    if (!d_.empty()) return false;
    if (want.size() != got.size()) {
      d_ = {phase, it, reg, 0, str(want.size()), str(got.size())};
      return false;
    }
    for (std::size_t r = 0; r < want.size(); ++r) {
      if (!vec(phase, it, reg, want[r], got[r])) {
        d_.index = static_cast<int>(r) + 1;
        return false;
      }
    }
    return true;
  }
  TraceDivergence result() const { return d_; }

 private:
  TraceDivergence d_;
};

}  // namespace

std::string TraceDivergence::describe() const {
  if (empty()) return "no divergence";
  std::ostringstream os;
  os << "phase=" << phase;
  if (iteration) os << " iteration=" << iteration;
  os << " register=" << reg;
  if (index) os << " index=" << index;
  os << " expected=" << expected << " actual=" << actual;
  return os.str();
}

TraceDivergence compare_traces(const ProtocolTrace& expected,
                               const ProtocolTrace& actual) {
  Comparer c;
  c.vec("intervals", 0, "W", expected.W, actual.W);
  c.vec("intervals", 0, "IntervalLen", expected.interval_len,
        actual.interval_len);
  c.mat("intervals", 0, "IntervalDesired", expected.desired, actual.desired);
  const std::size_t iters =
      std::min(expected.iterations.size(), actual.iterations.size());
  for (std::size_t t = 0; t < iters; ++t) {
    const auto& e = expected.iterations[t];
    const auto& a = actual.iterations[t];
    const int it = static_cast<int>(t) + 1;
    if (e.c_star >= 0 && a.c_star >= 0) {
      c.scalar("allocation", it, "CStar", e.c_star, a.c_star);
    }
    c.vec("allocation", it, "BestSubset", e.best_subset, a.best_subset);
    c.scalar("allocation", it, "MinLen", e.min_len, a.min_len);
    c.scalar("allocation", it, "SizeBestSubset", e.size_best, a.size_best);
    c.vec("allocation", it, "AgentsServed", e.served, a.served);
    c.vec("allocation", it, "SelectedInterval", e.selected, a.selected);
    c.vec("allocation", it, "IntervalAvailable", e.available, a.available);
    c.mat("allocation", it, "Flow", e.flow, a.flow);
    c.scalar("allocation", it, "FlowLoops", e.flow_loops, a.flow_loops);
  }
  c.scalar("allocation", 0, "Iterations",
           static_cast<std::int64_t>(expected.iterations.size()),
           static_cast<std::int64_t>(actual.iterations.size()));
  c.mat("allocation", 0, "IntervalAllocation", expected.allocation,
        actual.allocation);
  c.vec("allocation", 0, "AllocationDenominator", expected.denominator,
        actual.denominator);
  c.vec("serving", 0, "ExclusiveInterval", expected.exclusive,
        actual.exclusive);
  if (expected.portions.size() != actual.portions.size()) {
    c.scalar("serving", 0, "PortionCount",
             static_cast<std::int64_t>(expected.portions.size()),
             static_cast<std::int64_t>(actual.portions.size()));
  }
  for (std::size_t p = 0;
       p < std::min(expected.portions.size(), actual.portions.size()); ++p) {
    const auto& e = expected.portions[p];
    const auto& a = actual.portions[p];
    c.vec("serving", 0, "Portion",
          {e.agent, e.k, e.j, e.exclusive ? 1 : 0, e.start, e.end},
          {a.agent, a.k, a.j, a.exclusive ? 1 : 0, a.start, a.end});
  }
  return c.result();
}

}  // namespace ppcc
