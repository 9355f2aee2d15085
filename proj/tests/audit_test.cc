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

#include "doctest.h"
#include "ppcc/protocol.h"
#include "test_support.h"

namespace ppcc {
namespace {

RunResult worked_run(Visibility vis, bool record = true) {
  ProtocolConfig cfg;
  cfg.visibility = vis;
  cfg.record_messages = record;
  return run_protocol(testing::worked_example(), cfg);
}

TEST_CASE("message accounting on the worked example") {
  const RunResult r = worked_run(Visibility::kRestricted);
  const MessageAudit a = audit_messages(*r.transcript, 4);
  CHECK(a.per_mul_exact);
  CHECK(a.mul_invocations > 0);
  CHECK(a.mul_messages == a.mul_invocations * 12);
  CHECK(a.total_messages == r.transcript->total_messages());
  CHECK(a.within_bound);
  CHECK(a.c > 0);
  CHECK(a.text().find("exact") != std::string::npos);

  // Without the gate log the aggregate ratio is used and agrees.
  const RunResult q = worked_run(Visibility::kRestricted, false);
  const MessageAudit b = audit_messages(*q.transcript, 4);
  CHECK(b.per_mul_exact);
  CHECK(b.total_messages == a.total_messages);
  CHECK(b.c == doctest::Approx(a.c));
}

TEST_CASE("share uniformity below the threshold") {
  const ShareAudit five = audit_shares(5, 42, 4000, 10, 0.001, 3);
  CHECK(five.t == 3);
  CHECK(five.tests.size() == 10);  // pairs of 5 parties
  CHECK(five.pass);
  for (const auto& t : five.tests) CHECK(t.parties.size() == 2);

  const ShareAudit three = audit_shares(3, 0, 2000, 10, 0.001, 4);
  CHECK(three.tests.size() == 3);
  CHECK(three.pass);

  // t = 1: no coalition below the threshold holds anything.
  const ShareAudit two = audit_shares(2, 5, 100, 10, 0.001, 5);
  CHECK(two.tests.empty());
  CHECK(two.pass);
  CHECK(two.text().find("nothing to test") != std::string::npos);
}

TEST_CASE("declared sources") {
  CHECK(is_declared_source(RevealKind::kCheaterFlag, "Cheater_3"));
  CHECK(is_declared_source(RevealKind::kPublicBound, "ell"));
  CHECK(is_declared_source(RevealKind::kLoopGuard, "NumAgentsServed=n"));
  CHECK(is_declared_source(RevealKind::kOutput, "anything"));
  CHECK_FALSE(is_declared_source(RevealKind::kLoopGuard, "ell"));
  CHECK_FALSE(is_declared_source(RevealKind::kPublicBound, "MinLen"));
}

TEST_CASE("leakage audit of a restricted run") {
  const RunResult r = worked_run(Visibility::kRestricted);
  const LeakageAudit a = audit_leakage(*r.transcript);
  CHECK(a.only_declared);
  CHECK(a.bits_only);
  CHECK(a.outputs_owner_only);
  CHECK(a.misaddressed == 0);
  bool saw_guard = false;
  for (const auto& e : a.entries) saw_guard |= e.source == "NumAgentsServed=n";
  CHECK(saw_guard);
}

TEST_CASE("full visibility is flagged by the restricted scan") {
  const RunResult r = worked_run(Visibility::kFull);
  const LeakageAudit a = audit_leakage(*r.transcript);
  CHECK(a.only_declared);
  CHECK_FALSE(a.outputs_owner_only);
  CHECK(a.misaddressed > 0);
}

TEST_CASE("undeclared and non-bit reveals are reported") {
  Transcript t(true);
  t.add_reveal({RevealKind::kLoopGuard, "MinLen", 0, 0, 25, 0});
  t.add_reveal({RevealKind::kOutput, "PortionStart", 2, 1, 7, 0});
  const LeakageAudit a = audit_leakage(t);
  CHECK_FALSE(a.only_declared);
  CHECK_FALSE(a.bits_only);
  CHECK_FALSE(a.outputs_owner_only);
  CHECK(a.text().find("[UNDECLARED]") != std::string::npos);
}

}  // namespace
}  // namespace ppcc
