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

#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "ppcc/audit.h"
#include "ppcc/oracle.h"

namespace ppcc {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const char* mode_name(SearchMode m) {
  return m == SearchMode::kExhaustive ? "exhaustive" : "polynomial";
}

const char* visibility_name(Visibility v) {
  return v == Visibility::kRestricted ? "restricted" : "full";
}

}  // namespace

std::vector<PiecewiseUniformValuation> parse_agents(std::string_view text) {
  static const std::regex head(R"(^(\d+)\s*:(.*)$)");
  static const std::regex piece(R"(\[\s*([^,\[\]\)]+?)\s*,\s*([^,\[\]\)]+?)\s*\))");
  std::map<int, PiecewiseUniformValuation> by_id;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::smatch m;
    if (!std::regex_match(line, m, head)) {
      throw ParseError(lineno, "expected `id: [a,b) ...`");
    }
    const int id = std::stoi(m[1].str());
    if (id < 1) throw ParseError(lineno, "agent ids start at 1");
    if (by_id.count(id)) {
      throw ParseError(lineno, "agent " + std::to_string(id) + " listed twice");
    }
    const std::string body = m[2].str();
    std::vector<Interval> ivs;
    std::string rest;
    auto last = body.cbegin();
    for (std::sregex_iterator it(body.begin(), body.end(), piece), end; it != end; ++it) {
      rest.append(last, body.cbegin() + it->position());
      last = body.cbegin() + it->position() + it->length();
      try {
        ivs.push_back({parse_endpoint((*it)[1].str()), parse_endpoint((*it)[2].str())});
      } catch (const ValuationError& e) {
        throw ParseError(lineno, e.what());
      }
    }
    rest.append(last, body.cend());
    if (!trim(rest).empty()) {
      throw ParseError(lineno, "unexpected text `" + trim(rest) + "`");
    }
    if (ivs.empty()) throw ParseError(lineno, "agent has no intervals");
    by_id.emplace(id, PiecewiseUniformValuation(std::move(ivs)));
  }
  if (by_id.empty()) throw ParseError(lineno, "no agents");
  std::vector<PiecewiseUniformValuation> out;
  int expect = 1;
  for (auto& [id, v] : by_id) {
    if (id != expect) {
      throw ParseError(lineno, "agent ids must be 1.." + std::to_string(by_id.size()));
    }
    out.push_back(std::move(v));
    ++expect;
  }
  return out;
}

std::vector<PiecewiseUniformValuation> read_agents_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError(0, "cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_agents(ss.str());
}

std::string format_piece(const Interval& piece) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  const auto den = boost::multiprecision::lcm(denominator(piece.lo), denominator(piece.hi));
  const auto lo = numerator(piece.lo) * (den / denominator(piece.lo));
  const auto hi = numerator(piece.hi) * (den / denominator(piece.hi));
  std::ostringstream os;
  os << lo << '/' << den << ".." << hi << '/' << den << " ["
     << format_decimal(piece.lo) << ", " << format_decimal(piece.hi) << ')';
  return os.str();
}

std::string format_report(const RunResult& r, const ProtocolConfig& cfg) {
  std::ostringstream os;
  os << "mode=" << mode_name(cfg.mode) << " visibility="
     << visibility_name(cfg.visibility)
     << " pad=" << (cfg.pad_iterations ? "yes" : "no")
     << " seed=" << cfg.seed << '\n';
  os << "L=" << r.L << " d=" << r.d << " Q=" << r.Q << " p=" << r.prime;
  if (r.aborted) {
    os << "\naborted: cheating detected for agent(s)";
    for (int c : r.cheaters) os << ' ' << c;
    os << '\n';
    return os.str();
  }
  os << " ell=" << r.ell << '\n';
  os << "iterations=" << r.iterations
     << " rounds=" << r.transcript->round()
     << " messages=" << r.transcript->total_messages() << '\n';
  for (std::size_t i = 0; i < r.allocation.size(); ++i) {
    os << 'A' << i + 1 << ':';
    if (r.allocation[i].empty()) os << " (empty)";
    for (const auto& p : r.allocation[i]) os << ' ' << format_piece(p);
    os << "  length=" << format_rational(total_length(r.allocation[i])) << '\n';
  }
  return os.str();
}

namespace {

struct Options {
  std::string file;
  std::string mode = "exhaustive";
  std::string visibility = "restricted";
  bool pad = false;
  bool strict_no_ell = false;
  bool search_candidates = false;
  bool defer_check = false;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> prime;
  std::string transcript;
  std::string fault;
  std::string what;
  int samples = 10000;
  std::uint64_t secret = 42;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "subset search")
      ->check(CLI::IsMember({"exhaustive", "polynomial"}));
  cmd->add_option("--visibility", o.visibility, "who learns each piece")
      ->check(CLI::IsMember({"restricted", "full"}));
  cmd->add_flag("--pad-iterations", o.pad, "always run n iterations");
  cmd->add_flag("--strict-no-ell", o.strict_no_ell,
                "keep all L interval slots instead of revealing ell");
  cmd->add_flag("--search-candidates", o.search_candidates,
                "polynomial mode: bisect over candidate averages");
  cmd->add_flag("--defer-check", o.defer_check,
                "polynomial mode: defer the first termination check");
  cmd->add_option("--seed", o.seed, "randomness seed");
  cmd->add_option("--prime", o.prime, "field modulus override");
  cmd->add_option("--transcript", o.transcript, "write the transcript here");
}

ProtocolConfig to_config(const Options& o) {
  ProtocolConfig c;
  c.mode = o.mode == "polynomial" ? SearchMode::kPolynomial : SearchMode::kExhaustive;
  c.visibility = o.visibility == "full" ? Visibility::kFull : Visibility::kRestricted;
  c.pad_iterations = o.pad;
  c.strict_no_ell = o.strict_no_ell;
  c.search_candidates = o.search_candidates;
  c.defer_search_check = o.defer_check;
  c.seed = o.seed;
  c.prime = o.prime;
  if (o.fault == "availability") c.fault = Fault::kAvailabilityOffByOne;
  return c;
}

RunResult execute(const Options& o, const ProtocolConfig& cfg) {
  const auto vs = read_agents_file(o.file);
  RunResult r = run_protocol(vs, cfg);
  if (!o.transcript.empty()) {
    std::ofstream f(o.transcript, std::ios::binary);
    if (!f) throw ParseError(0, "cannot write " + o.transcript);
    r.transcript->write(f);
  }
  return r;
}

int cmd_run(const Options& o, std::ostream& out) {
  const ProtocolConfig cfg = to_config(o);
  const RunResult r = execute(o, cfg);
  out << format_report(r, cfg);
  return r.aborted ? kExitCheater : kExitOk;
}

int cmd_oracle_check(const Options& o, std::ostream& out) {
  const ProtocolConfig cfg = to_config(o);
  const auto vs = read_agents_file(o.file);
  const RunResult r = execute(o, cfg);
  if (r.aborted) {
    out << format_report(r, cfg);
    return kExitCheater;
  }
  OracleOptions oo;
  oo.mode = cfg.mode;
  oo.pad_iterations = cfg.pad_iterations;
  const OracleResult expect = cc_puv_allocate(make_instance(vs, cfg.strict_no_ell), oo);
  TraceDivergence d = compare_traces(expect.trace, r.trace);
  if (d.empty() && expect.allocation != r.allocation) {
    d.phase = "serving";
    d.reg = "Allocation";
    d.expected = "oracle pieces";
    d.actual = "different pieces";
  }
  if (!d.empty()) {
    out << "FAIL " << d.describe() << '\n';
    return kExitDivergence;
  }
  out << "PASS iterations=" << r.iterations
      << " portions=" << r.trace.portions.size() << '\n';
  return kExitOk;
}

int cmd_audit(const Options& o, std::ostream& out) {
  if (o.what == "shares") {
    int n = 5;
    if (!o.file.empty()) n = static_cast<int>(read_agents_file(o.file).size());
    out << audit_shares(n, o.secret, o.samples, 10, 0.001, o.seed).text();
    return kExitOk;
  }
  if (o.file.empty()) throw ParseError(0, "audit " + o.what + " needs an agents file");
  ProtocolConfig cfg = to_config(o);
  cfg.record_messages = true;
  const RunResult r = execute(o, cfg);
  if (r.aborted) out << "run aborted by cheater detection\n";
  const int n = static_cast<int>(r.allocation.empty() ? read_agents_file(o.file).size()
                                                      : r.allocation.size());
  if (o.what == "messages") {
    out << audit_messages(*r.transcript, n).text();
  } else {
    out << audit_leakage(*r.transcript).text();
  }
  return r.aborted ? kExitCheater : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Privacy-preserving cake cutting simulator", "ppcake"};
  app.require_subcommand(1);
  Options o;

  CLI::App* run = app.add_subcommand("run", "run the protocol and print the allocation");
  run->add_option("agents", o.file, "agent file")->required();
  add_common(run, o);

  CLI::App* check = app.add_subcommand(
      "oracle-check", "compare the protocol with the plaintext oracle");
  check->add_option("agents", o.file, "agent file")->required();
  add_common(check, o);
  check->add_option("--inject-fault", o.fault)
      ->check(CLI::IsMember({"availability"}))
      ->group("");

  CLI::App* audit = app.add_subcommand("audit", "message, share and leakage audits");
  audit->add_option("what", o.what, "messages | shares | leakage")
      ->required()
      ->check(CLI::IsMember({"messages", "shares", "leakage"}));
  audit->add_option("agents", o.file, "agent file");
  audit->add_option("--samples", o.samples, "sharings for the share audit");
  audit->add_option("--secret", o.secret, "secret for the share audit");
  add_common(audit, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*run) return cmd_run(o, out);
    if (*check) return cmd_oracle_check(o, out);
    return cmd_audit(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const ValuationError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const FieldError& e) {
    err << "configuration error: " << e.what() << '\n';
  }
  return kExitParse;
}

}  // namespace ppcc
