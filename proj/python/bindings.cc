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

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ppcc/audit.h"
#include "ppcc/cli.h"
#include "ppcc/oracle.h"
#include "ppcc/protocol.h"

namespace py = pybind11;
using namespace ppcc;

namespace {

// Valuations cross the boundary as lists of (lo, hi) strings such as
// "0.125" or "1/8"; the Python side turns them into Fractions.
using PyPiece = std::pair<std::string, std::string>;
using PyValuations = std::vector<std::vector<PyPiece>>;

std::vector<PiecewiseUniformValuation> to_valuations(const PyValuations& in) {
  std::vector<PiecewiseUniformValuation> out;
  for (const auto& agent : in) {
    std::vector<Interval> ivs;
    for (const auto& [lo, hi] : agent) {
      ivs.push_back({parse_endpoint(lo), parse_endpoint(hi)});
    }
    out.emplace_back(std::move(ivs));
  }
  return out;
}

PyValuations from_allocation(const Allocation& a) {
  PyValuations out;
  for (const auto& pieces : a) {
    std::vector<PyPiece> row;
    for (const auto& p : pieces) row.emplace_back(format_rational(p.lo), format_rational(p.hi));
    out.push_back(std::move(row));
  }
  return out;
}

ProtocolConfig make_config(const std::string& mode, const std::string& visibility,
                           bool pad, bool strict, std::uint64_t seed,
                           std::optional<std::uint64_t> prime) {
  ProtocolConfig c;
  if (mode == "polynomial") {
    c.mode = SearchMode::kPolynomial;
  } else if (mode != "exhaustive") {
    throw py::value_error("mode must be exhaustive or polynomial");
  }
  if (visibility == "full") {
    c.visibility = Visibility::kFull;
  } else if (visibility != "restricted") {
    throw py::value_error("visibility must be restricted or full");
  }
  c.pad_iterations = pad;
  c.strict_no_ell = strict;
  c.seed = seed;
  c.prime = prime;
  return c;
}

py::dict run(const PyValuations& agents, const std::string& mode,
             const std::string& visibility, bool pad, bool strict,
             std::uint64_t seed, std::optional<std::uint64_t> prime,
             bool with_transcript) {
  ProtocolConfig cfg = make_config(mode, visibility, pad, strict, seed, prime);
  cfg.record_messages = with_transcript;
  const RunResult r = run_protocol(to_valuations(agents), cfg);
  py::dict d;
  d["aborted"] = r.aborted;
  d["cheaters"] = r.cheaters;
  d["allocation"] = from_allocation(r.allocation);
  d["L"] = r.L;
  d["d"] = r.d;
  d["Q"] = r.Q;
  d["ell"] = r.ell;
  d["prime"] = r.prime;
  d["iterations"] = r.iterations;
  d["rounds"] = r.transcript->round();
  d["messages"] = r.transcript->total_messages();
  d["report"] = format_report(r, cfg);
  if (with_transcript) {
    std::ostringstream os;
    r.transcript->write(os);
    d["transcript"] = os.str();
  }
  return d;
}

py::dict oracle_check(const PyValuations& agents, const std::string& mode,
                      bool pad, bool strict, std::uint64_t seed) {
  ProtocolConfig cfg = make_config(mode, "restricted", pad, strict, seed, std::nullopt);
  cfg.record_messages = false;
  const auto vs = to_valuations(agents);
  const RunResult r = run_protocol(vs, cfg);
  py::dict d;
  d["aborted"] = r.aborted;
  if (r.aborted) {
    d["ok"] = false;
    d["divergence"] = "aborted";
    return d;
  }
  OracleOptions oo;
  oo.mode = cfg.mode;
  oo.pad_iterations = pad;
  const OracleResult o = cc_puv_allocate(make_instance(vs, strict), oo);
  const TraceDivergence dv = compare_traces(o.trace, r.trace);
  d["ok"] = dv.empty() && o.allocation == r.allocation;
  d["divergence"] = dv.describe();
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Simulated privacy-preserving cake cutting for piecewise uniform valuations";

  m.def("parse_agents", [](const std::string& text) {
    PyValuations out;
    for (const auto& v : parse_agents(text)) {
      std::vector<PyPiece> row;
      for (const auto& iv : v.intervals()) {
        row.emplace_back(format_rational(iv.lo), format_rational(iv.hi));
      }
      out.push_back(std::move(row));
    }
    return out;
  }, py::arg("text"));

  m.def("run", &run, py::arg("agents"), py::arg("mode") = "exhaustive",
        py::arg("visibility") = "restricted", py::arg("pad_iterations") = false,
        py::arg("strict_no_ell") = false, py::arg("seed") = 1,
        py::arg("prime") = py::none(), py::arg("with_transcript") = false);

  m.def("oracle_allocate", [](const PyValuations& agents, const std::string& mode) {
    OracleOptions oo;
    oo.mode = mode == "polynomial" ? SearchMode::kPolynomial : SearchMode::kExhaustive;
    return from_allocation(cc_puv_allocate(make_instance(to_valuations(agents)), oo).allocation);
  }, py::arg("agents"), py::arg("mode") = "exhaustive");

  m.def("oracle_check", &oracle_check, py::arg("agents"),
        py::arg("mode") = "exhaustive", py::arg("pad_iterations") = false,
        py::arg("strict_no_ell") = false, py::arg("seed") = 1);

  m.def("check_fairness", [](const PyValuations& agents, const PyValuations& alloc) {
    const auto vs = to_valuations(agents);
    Allocation a;
    for (const auto& v : to_valuations(alloc)) a.push_back(v.intervals());
    const FairnessReport rep = check_fairness(vs, a);
    return py::make_tuple(rep.envy_free, rep.proportional, rep.detail);
  }, py::arg("agents"), py::arg("allocation"));

  m.def("audit_shares", [](int n, std::uint64_t secret, int samples, std::uint64_t seed) {
    const ShareAudit a = audit_shares(n, secret, samples, 10, 0.001, seed);
    py::list tests;
    for (const auto& t : a.tests) {
      tests.append(py::make_tuple(t.parties, t.statistic, t.critical, t.pass));
    }
    py::dict d;
    d["t"] = a.t;
    d["pass"] = a.pass;
    d["tests"] = tests;
    return d;
  }, py::arg("n") = 5, py::arg("secret") = 42, py::arg("samples") = 10000,
     py::arg("seed") = 1);

  py::register_exception<ValuationError>(m, "ValuationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<FieldError>(m, "FieldError", PyExc_ValueError);
}
