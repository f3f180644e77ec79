// Copyright 2026 The pdslab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdslab/errors.h"
#include "pdslab/graph.h"
#include "pdslab/graph_io.h"
#include "pdslab/pds.h"
#include "pdslab/reductions.h"
#include "pdslab/selftest.h"
#include "pdslab/solve.h"

namespace pdslab::cli {

namespace {

using nlohmann::json;

struct Flags {
  bool json = false;
  bool timing = false;
  bool dimacs = false;
  std::optional<int> oracle_cap;
  std::string input;
  // solve
  bool connected = false;
  std::string method = "auto";
  // verify
  std::string set_csv;
  // reduce
  std::string gadget;
  int k = 0;
  std::string output;
  bool permissive = false;
  // selftest
  std::string level = "quick";
  std::string mutate;
};

int OracleCap(const Flags& flags) {
  if (flags.oracle_cap) return *flags.oracle_cap;
  if (const char* env = std::getenv("PDSLAB_ORACLE_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw PreconditionError("PDSLAB_ORACLE_CAP is not an integer");
    }
  }
  return kDefaultOracleCap;
}

Graph LoadGraph(const Flags& flags, std::istream& in) {
  if (!flags.input.empty()) return ReadGraphFile(flags.input, flags.dimacs);
  return flags.dimacs ? ReadDimacs(in) : ReadGraph(in);
}

json InputRecord(const Graph& g) {
  return {{"n", g.num_vertices()}, {"m", g.num_edges()}, {"digest", GraphDigest(g)}};
}

json ParamsRecord(const Graph& g) {
  const GraphParams p = ComputeParams(g);
  return {{"max_degree", p.max_degree},
          {"h_index", p.h_index},
          {"degeneracy", p.degeneracy},
          {"elimination_order", p.elimination_order}};
}

json WitnessRecord(const Graph& g, const SolveResult& r, bool connected) {
  json out = {{"size", r.size}, {"method", std::string(ToString(r.method))}};
  if (r.witness) {
    out["witness"] = r.witness->members();
    out["verified"] = connected ? IsConnectedPds(g, *r.witness) : IsPds(g, *r.witness);
  } else {
    out["witness"] = nullptr;
    out["verified"] = false;
  }
  return out;
}

std::vector<Vertex> ParseCsv(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("bad vertex id '" + item + "' in --set");
    }
    if (used != item.size()) throw PreconditionError("bad vertex id '" + item + "' in --set");
    out.push_back(v);
  }
  return out;
}

json RunParams(const Graph& g) {
  json result = ParamsRecord(g);
  result["complement"] = ParamsRecord(Complement(g));
  result["components"] = ConnectedComponents(g).size();
  result["bipartite"] = TwoColoring(g).has_value();
  return result;
}

json RunSolve(const Graph& g, const Flags& flags) {
  const auto method = ParseMethod(flags.method);
  if (!method) throw PreconditionError("unknown method '" + flags.method + "'");
  SolverOptions options;
  options.oracle_cap = OracleCap(flags);
  const Method resolved = ResolveMethod(g, *method, options);
  const SolveResult r = Solve(g, resolved, flags.connected, options);
  json result = WitnessRecord(g, r, flags.connected);
  result["stage"] = result["method"];
  result["method"] = std::string(ToString(resolved));
  result["connected"] = flags.connected;
  return result;
}

json RunVerify(const Graph& g, const Flags& flags) {
  const VertexSet s(g.num_vertices(), ParseCsv(flags.set_csv));
  json result = {{"set", s.members()}, {"size", s.size()}};
  const bool pds = IsPds(g, s);
  result["is_pds"] = pds;
  result["is_connected_pds"] = pds && InducesConnected(g, s);
  result["verified"] = pds;
  result["violation"] = nullptr;
  if (s.size() < 2 || s.size() >= g.num_vertices()) {
    result["violation"] = {{"reason", "size must satisfy 2 <= |S| < n"}};
  } else if (!pds) {
    const SatisfactionReport report = Satisfaction(g, s);
    for (const VertexVerdict& v : report.verdicts) {
      if (v.vertex != *report.first_violation) continue;
      result["violation"] = {{"vertex", v.vertex},
                             {"inside_degree", v.inside_degree},
                             {"outside_degree", v.outside_degree},
                             {"lhs", v.form_a.lhs},
                             {"rhs", v.form_a.rhs}};
    }
  }
  return result;
}

json RunReduce(const Graph& g, const Flags& flags) {
  const auto family = ParseGadgetFamily(flags.gadget);
  if (!family) throw PreconditionError("unknown gadget '" + flags.gadget + "'");
  ReductionOutput r;
  switch (*family) {
    case GadgetFamily::kSparse: r = ReduceSparse(g, flags.k, false); break;
    case GadgetFamily::kSparseBipartite: r = ReduceSparse(g, flags.k, true); break;
    case GadgetFamily::kDenseDelta6:
      r = ReduceDenseDelta6(g, flags.k, flags.permissive);
      break;
    case GadgetFamily::kDenseDegen2: r = ReduceDenseDegen2(g, flags.k); break;
  }
  const GadgetParams& p = r.params;
  json params = {{"n_prime", p.n_prime}, {"k_prime", p.k_prime}};
  if (*family == GadgetFamily::kSparse || *family == GadgetFamily::kSparseBipartite) {
    params["C"] = p.c;
    params["A"] = p.a;
    params["B"] = p.b;
  }
  if (*family == GadgetFamily::kDenseDegen2) params["x"] = p.x;
  json result = {{"gadget", std::string(ToString(*family))},
                 {"k", r.k},
                 {"k_prime", r.k_prime},
                 {"vertices", r.gadget.num_vertices()},
                 {"edges", r.gadget.num_edges()},
                 {"params", params},
                 {"audit", AuditGadget(r)}};
  if (!flags.output.empty()) {
    std::ofstream file(flags.output);
    if (!file) throw PreconditionError("cannot write " + flags.output);
    file << "# gadget " << ToString(*family) << " k " << r.k << " k_prime "
         << r.k_prime << '\n';
    for (Vertex v = 0; v < r.gadget.num_vertices(); ++v) {
      file << "# role " << v << ' ' << RoleLabel(r.roles[v]) << '\n';
    }
    WriteGraph(file, r.gadget);
    result["out"] = flags.output;
  }
  return result;
}

void Emit(std::ostream& out, const json& report, bool as_json) {
  if (as_json) {
    out << report.dump(2) << '\n';
    return;
  }
  out << "command: " << report["command"].get<std::string>() << '\n';
  if (report.contains("input")) {
    const json& in = report["input"];
    out << "input: n=" << in["n"] << " m=" << in["m"]
        << " digest=" << in["digest"].get<std::string>() << '\n';
  }
  for (const auto& [key, value] : report["result"].items()) {
    if (key == "checks") continue;
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
        << '\n';
  }
  if (report["result"].contains("checks")) {
    for (const json& c : report["result"]["checks"]) {
      out << (c["passed"].get<bool>() ? "PASS " : "FAIL ")
          << c["name"].get<std::string>() << ": " << c["detail"].get<std::string>()
          << '\n';
    }
  }
  if (report.contains("elapsed_ms")) out << "elapsed_ms: " << report["elapsed_ms"] << '\n';
}

}  // namespace

int Run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Flags flags;
  CLI::App app{"Maximum proportionally dense subgraph toolkit", "pdslab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", flags.json, "Emit a JSON report");
  app.add_flag("--timing", flags.timing, "Add wall-clock time to the report");
  app.add_flag("--dimacs", flags.dimacs, "Read the graph in DIMACS edge format");
  app.add_option("--oracle-cap", flags.oracle_cap,
                 "Largest n for exhaustive search (default 24 or $PDSLAB_ORACLE_CAP)")
      ->check(CLI::Range(3, kMaxOracleVertices));

  auto* params = app.add_subcommand("params", "Print graph parameters");
  params->add_option("--in", flags.input, "Graph file (default stdin)");

  auto* solve = app.add_subcommand("solve", "Find a maximum PDS");
  solve->add_option("--in", flags.input, "Graph file (default stdin)");
  solve->add_flag("--connected", flags.connected, "Require G[S] connected");
  solve->add_option("--method", flags.method, "auto, brute, h2 or co-h2")
      ->check(CLI::IsMember({"auto", "brute", "h2", "co-h2"}));

  auto* verify = app.add_subcommand("verify", "Check whether a set is a PDS");
  verify->add_option("--in", flags.input, "Graph file (default stdin)");
  verify->add_option("--set", flags.set_csv, "Comma-separated vertex ids")->required();

  auto* reduce = app.add_subcommand("reduce", "Build a hardness gadget");
  reduce->add_option("--in", flags.input, "Graph file (default stdin)");
  reduce->add_option("--gadget", flags.gadget, "Gadget family")
      ->required()
      ->check(CLI::IsMember({"sparse", "sparse-bipartite", "dense-delta6", "dense-degen2"}));
  reduce->add_option("-k", flags.k, "Independent set size")->required();
  reduce->add_option("--out", flags.output, "Write the gadget graph here");
  reduce->add_flag("--permissive", flags.permissive,
                   "dense-delta6: accept non-cubic input");

  auto* selftest = app.add_subcommand("selftest", "Run solver checks against the oracle");
  selftest->add_option("--level", flags.level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  selftest->add_option("--mutate", flags.mutate, "Run with a deliberately broken solver")
      ->check(CLI::IsMember({"literal-target"}));

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  json report;
  int code = kExitOk;
  try {
    if (selftest->parsed()) {
      SolverOptions options;
      options.oracle_cap = OracleCap(flags);
      if (flags.mutate == "literal-target") options.accounting = TargetAccounting::kLiteral;
      const auto level = flags.level == "full" ? selftest::Level::kFull : selftest::Level::kQuick;
      const auto results = selftest::Run(level, options);
      json checks = json::array();
      int failed = 0;
      std::string counterexample;
      for (const auto& r : results) {
        checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        if (!r.passed) {
          ++failed;
          if (counterexample.empty()) counterexample = r.counterexample;
        }
      }
      report = {{"command", "selftest"},
                {"result",
                 {{"level", flags.level},
                  {"passed", static_cast<int>(results.size()) - failed},
                  {"failed", failed},
                  {"checks", checks}}}};
      if (!counterexample.empty()) report["result"]["first_counterexample"] = counterexample;
      if (failed > 0) code = kExitFailure;
    } else {
      const Graph g = LoadGraph(flags, in);
      json result;
      std::string command;
      if (params->parsed()) {
        command = "params";
        result = RunParams(g);
      } else if (solve->parsed()) {
        command = "solve";
        result = RunSolve(g, flags);
      } else if (verify->parsed()) {
        command = "verify";
        result = RunVerify(g, flags);
      } else {
        command = "reduce";
        result = RunReduce(g, flags);
      }
      report = {{"command", command}, {"input", InputRecord(g)}, {"result", result}};
    }
  } catch (const GraphParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
  if (flags.timing) {
    report["elapsed_ms"] = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
  }
  Emit(out, report, flags.json);
  return code;
}

}  // namespace pdslab::cli
