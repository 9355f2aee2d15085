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

#include "ppcc/cli.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "test_support.h"

namespace ppcc {
namespace {

using testing::data_file;
using testing::R;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ppcake");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

std::string write_temp(const char* name, const std::string& body) {
  const std::string path = temp_path(name);
  std::ofstream(path) << body;
  return path;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST_CASE("agent file parsing") {
  const auto vs = parse_agents(
      "# two agents\n"
      "2: [0.5, 1)\n"
      "\n"
      "1: [0,0.25) [3/8, 0.5)  # trailing comment\n");
  REQUIRE(vs.size() == 2);
  CHECK(vs[0].intervals() == std::vector<Interval>{{R("0"), R("1/4")}, {R("3/8"), R("1/2")}});
  CHECK(vs[1].intervals() == std::vector<Interval>{{R("1/2"), R("1")}});

  struct Bad {
    const char* text;
    int line;
  };
  const Bad bad[] = {
      {"1: [0,0.5)\n1: [0.5,1)\n", 2},
      {"1: [0,0.5)\n3: [0.5,1)\n", 2},
      {"1: [0,0.5) junk\n", 1},
      {"1:\n", 1},
      {"x: [0,1)\n", 1},
      {"1: [0,abc)\n", 1},
      {"0: [0,1)\n", 1},
      {"# nothing\n", 1},
  };
  for (const auto& b : bad) {
    CAPTURE(b.text);
    try {
      parse_agents(b.text);
      FAIL("accepted");
    } catch (const ParseError& e) {
      CHECK(e.line() == b.line);
    }
  }
}

TEST_CASE("run prints the allocation") {
  const Result r = cli({"run", data_file("worked_example.txt")});
  CHECK(r.code == kExitOk);
  CHECK(has(r.out, "mode=exhaustive visibility=restricted pad=no seed=1"));
  CHECK(has(r.out, "L=1 d=2 Q=100"));
  CHECK(has(r.out, "A1: 0/8..1/8 [0.000000, 0.125000)  length=1/8"));
  CHECK(has(r.out, "A2: 5/40..8/40 [0.125000, 0.200000) 4/20..5/20"));
  CHECK(has(r.out, "A4: 3/4..4/4"));
  const Result p = cli({"run", data_file("worked_example.txt"), "--mode", "polynomial",
                        "--pad-iterations", "--strict-no-ell", "--visibility", "full"});
  CHECK(p.code == kExitOk);
  CHECK(has(p.out, "iterations=4"));
  CHECK(has(p.out, "A1: 0/8..1/8"));
}

TEST_CASE("cheaters exit with code 2") {
  const Result r = cli({"run", data_file("cheater_reversed.txt")});
  CHECK(r.code == kExitCheater);
  CHECK(has(r.out, "aborted: cheating detected for agent(s) 2"));
  CHECK(cli({"oracle-check", data_file("cheater_reversed.txt")}).code == kExitCheater);
}

TEST_CASE("oracle check passes and catches the injected fault") {
  for (const char* mode : {"exhaustive", "polynomial"}) {
    const Result ok = cli({"oracle-check", data_file("worked_example.txt"), "--mode", mode});
    CHECK(ok.code == kExitOk);
    CHECK(has(ok.out, "PASS"));
  }
  CHECK(cli({"oracle-check", data_file("identical.txt")}).code == kExitOk);
  const Result bad = cli({"oracle-check", data_file("worked_example.txt"),
                          "--inject-fault", "availability"});
  CHECK(bad.code == kExitDivergence);
  CHECK(has(bad.out, "FAIL phase=allocation iteration=1 register=IntervalAvailable"));
}

TEST_CASE("the fault flag is hidden") {
  const Result h = cli({"oracle-check", "--help"});
  CHECK(h.code == kExitOk);
  CHECK(has(h.out, "--mode"));
  CHECK_FALSE(has(h.out, "inject"));
}

TEST_CASE("parse errors exit with code 1") {
  CHECK(cli({}).code == kExitParse);
  CHECK(cli({"run"}).code == kExitParse);
  CHECK(cli({"run", data_file("worked_example.txt"), "--bogus"}).code == kExitParse);
  CHECK(cli({"run", data_file("worked_example.txt"), "--mode", "fast"}).code == kExitParse);
  CHECK(cli({"run", temp_path("ppcake_missing.txt")}).code == kExitParse);
  const std::string bad = write_temp("ppcake_bad.txt", "1: [0, 0.5\n");
  const Result r = cli({"run", bad});
  CHECK(r.code == kExitParse);
  CHECK(has(r.err, "line 1"));
  const std::string third = write_temp("ppcake_third.txt", "1: [0, 1/3)\n2: [0.5, 1)\n");
  CHECK(cli({"run", third}).code == kExitParse);
  CHECK(cli({"run", data_file("worked_example.txt"), "--prime", "7"}).code == kExitParse);
  CHECK(cli({"audit", "messages"}).code == kExitParse);
  CHECK(cli({"audit", "everything", data_file("worked_example.txt")}).code == kExitParse);
}

TEST_CASE("transcripts are written and reproducible") {
  const std::string a = temp_path("ppcake_t1.txt");
  const std::string b = temp_path("ppcake_t2.txt");
  CHECK(cli({"run", data_file("worked_example.txt"), "--seed", "9", "--transcript", a}).code == 0);
  CHECK(cli({"run", data_file("worked_example.txt"), "--seed", "9", "--transcript", b}).code == 0);
  const std::string ta = slurp(a);
  CHECK_FALSE(ta.empty());
  CHECK(ta == slurp(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("audits") {
  const Result m = cli({"audit", "messages", data_file("worked_example.txt")});
  CHECK(m.code == kExitOk);
  CHECK(has(m.out, "messages per mul: 12 (n(n-1) = 12, exact)"));
  const Result l = cli({"audit", "leakage", data_file("worked_example.txt")});
  CHECK(l.code == kExitOk);
  CHECK(has(l.out, "only declared values: yes"));
  CHECK(has(l.out, "outputs addressed to owner only: yes"));
  const Result f = cli({"audit", "leakage", data_file("worked_example.txt"), "--visibility", "full"});
  CHECK(has(f.out, "outputs addressed to owner only: NO"));
  const Result s = cli({"audit", "shares", "--samples", "2000"});
  CHECK(s.code == kExitOk);
  CHECK(has(s.out, "n=5 t=3 samples=2000"));
  CHECK(has(s.out, "PASS"));
  CHECK(cli({"audit", "leakage", data_file("cheater_reversed.txt")}).code == kExitCheater);
}

}  // namespace
}  // namespace ppcc
