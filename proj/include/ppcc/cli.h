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

// Agent files, allocation reports and the `ppcake` command line.
//
// Agent file: one agent per line, `id: [a1,b1) [a2,b2) ...`, ids 1..n in
// any order, `#` starts a comment.

#ifndef PPCC_CLI_H_
#define PPCC_CLI_H_

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ppcc/config.h"
#include "ppcc/protocol.h"
#include "ppcc/valuation.h"

namespace ppcc {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitCheater = 2,
  kExitDivergence = 3,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Valuations ordered by agent id. Endpoints are not validated beyond
// syntax; ordering problems are for the protocol to catch.
std::vector<PiecewiseUniformValuation> parse_agents(std::string_view text);
std::vector<PiecewiseUniformValuation> read_agents_file(const std::string& path);

// `A<i>: s/den..e/den [s_dec, e_dec) ...` per agent.
std::string format_piece(const Interval& piece);
std::string format_report(const RunResult& r, const ProtocolConfig& cfg);

// Runs the command line with the given arguments (argv[0] included).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ppcc

#endif  // PPCC_CLI_H_
