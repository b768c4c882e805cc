// clawham command line: verification sweeps, single-instance deciders and
// family enumeration.
//
// Exit codes: 0 pass / positive answer, 1 counterexample / negative answer,
// 2 cap exceeded or invalid input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "clawham/clawfree.hpp"
#include "clawham/enumeration.hpp"
#include "clawham/errors.hpp"
#include "clawham/graph6.hpp"
#include "clawham/json_io.hpp"
#include "clawham/linegraph.hpp"
#include "clawham/trails.hpp"
#include "clawham/verify.hpp"

namespace {

using namespace clawham;
using json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInvalid = 2;

struct GraphInput {
  std::string g6;
  bool from_stdin = false;
  std::string json_graph;
  std::vector<int> require_vertices;
};

// Text, or the contents of the file it names.
std::string text_or_file(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) return arg;
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<Multigraph> read_graphs(const GraphInput& in) {
  std::vector<Multigraph> out;
  if (!in.g6.empty()) out.push_back(Multigraph::from_simple(parse_graph6(in.g6)));
  if (!in.json_graph.empty()) {
    json j;
    try {
      j = json::parse(text_or_file(in.json_graph));
    } catch (const json::exception& e) {
      throw InvalidInput(std::string("graph JSON: ") + e.what());
    }
    out.push_back(multigraph_from_json(j));
  }
  if (in.from_stdin) {
    std::string line;
    while (std::getline(std::cin, line))
      if (!line.empty()) out.push_back(Multigraph::from_simple(parse_graph6(line)));
  }
  if (out.empty()) throw InvalidInput("no input graph: use --g6, --json-graph or --stdin");
  return out;
}

VertexSet vertex_set(const std::vector<int>& vs, const Multigraph& g) {
  VertexSet s;
  for (int v : vs) {
    if (v < 0 || v >= g.order()) throw InvalidInput("required vertex out of range");
    s.insert(v);
  }
  return s;
}

int run_single(const std::string& command, const GraphInput& input) {
  int status = kExitPass;
  for (const Multigraph& g : read_graphs(input)) {
    int rc = kExitPass;
    if (command == "closure") {
      std::cout << write_graph6(closure(g.to_simple())) << '\n';
    } else if (command == "root") {
      try {
        std::cout << to_json(root_graph(g.to_simple())).dump() << '\n';
      } catch (const NotALineGraph& e) {
        std::cout << json{{"error", e.what()}, {"certificate", e.certificate()}}.dump() << '\n';
        rc = kExitNegative;
      } catch (const NotClosed& e) {
        std::cout << json{{"error", e.what()}}.dump() << '\n';
        rc = kExitNegative;
      }
    } else if (command == "dct" || command == "sct") {
      const TrailMode mode = command == "dct" ? TrailMode::kDominating : TrailMode::kSpanning;
      const auto t = closed_trail_exists(g, vertex_set(input.require_vertices, g), EdgeSet(), mode);
      std::cout << (t ? to_json(*t).dump() : "none") << '\n';
      rc = t ? kExitPass : kExitNegative;
    } else if (command == "collapsible") {
      const bool c = is_collapsible(g);
      std::cout << (c ? "true" : "false") << '\n';
      rc = c ? kExitPass : kExitNegative;
    } else if (command == "hamilton") {
      const auto cycle = hamiltonian_cycle(g.to_simple());
      std::cout << (cycle ? json(*cycle).dump() : "none") << '\n';
      rc = cycle ? kExitPass : kExitNegative;
    }
    status = std::max(status, rc);
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Claw-free Hamiltonicity toolkit"};
  app.require_subcommand(1);

  CheckOptions options;
  std::string check_name, json_out;
  bool serial = false, no_timing = false;
  auto* verify = app.add_subcommand("verify", "Run a named verification check");
  std::string check_list;
  for (const auto& info : check_registry()) check_list += (check_list.empty() ? "" : ", ") + info.name;
  verify->add_option("check", check_name, "One of: " + check_list)->required();
  verify->add_option("--max-n", options.max_n, "Largest order swept");
  verify->add_option("--json", json_out, "Write the report to this file");
  verify->add_option("--heavy-slack", options.heavy_slack, "Additive slack in the heaviness threshold");
  verify->add_option("--max-multiplicity", options.max_multiplicity, "Multiplicity bound for multigraph sweeps");
  verify->add_flag("--serial", serial, "Use the serial reference path");
  verify->add_flag("--no-timing", no_timing, "Leave elapsed time out of the JSON report");

  GraphInput input;
  std::vector<CLI::App*> singles;
  for (const char* name : {"closure", "root", "dct", "sct", "collapsible", "hamilton"}) {
    auto* sub = app.add_subcommand(name, std::string("Decide ") + name + " for one or more graphs");
    sub->add_option("--g6", input.g6, "graph6 line");
    sub->add_flag("--stdin", input.from_stdin, "Read graph6 lines from standard input");
    sub->add_option("--json-graph", input.json_graph, "Multigraph JSON {\"n\",\"adj\"}, inline or a file");
    if (std::string(name) == "dct" || std::string(name) == "sct")
      sub->add_option("--require-vertices", input.require_vertices, "Vertices the trail must visit")->delimiter(',');
    singles.push_back(sub);
  }

  std::string spec_arg;
  bool count_only = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream one graph6 line per isomorphism class");
  enumerate_cmd->add_option("--spec", spec_arg, "Family spec JSON, inline or a file")->required();
  enumerate_cmd->add_flag("--count-only", count_only, "Print the number of graphs only");
  enumerate_cmd->add_flag("--serial", serial, "Use the serial reference path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalid;
  }

  try {
    if (verify->parsed()) {
      options.policy = serial ? ExecutionPolicy::kSerial : ExecutionPolicy::kParallel;
      const CheckResult r = run_check(check_name, options);
      const json report = to_json(r, !no_timing);
      if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) throw InvalidInput("cannot write " + json_out);
        out << report.dump(2) << '\n';
      }
      std::cout << r.name << ": " << verdict_name(r.verdict) << " (" << r.instances << " instances, "
                << r.counterexamples.size() << " counterexamples";
      if (!no_timing) std::cout << ", " << r.elapsed_seconds << " s";
      std::cout << ")\n";
      for (const auto& c : r.counterexamples) std::cout << "  " << c.graph6 << ' ' << c.detail << '\n';
      switch (r.verdict) {
        case Verdict::kPass:
          return kExitPass;
        case Verdict::kFail:
          return kExitNegative;
        case Verdict::kCapExceeded:
          return kExitInvalid;
      }
    }
    if (enumerate_cmd->parsed()) {
      json spec_json;
      try {
        spec_json = json::parse(text_or_file(spec_arg));
      } catch (const json::exception& e) {
        throw InvalidInput(std::string("spec JSON: ") + e.what());
      }
      const FamilySpec spec = family_spec_from_json(spec_json);
      const auto graphs = enumerate(spec, serial ? ExecutionPolicy::kSerial : ExecutionPolicy::kParallel);
      if (count_only)
        std::cout << graphs.size() << '\n';
      else
        for (const auto& g : graphs) std::cout << write_graph6(g) << '\n';
      return kExitPass;
    }
    for (auto* sub : singles)
      if (sub->parsed()) return run_single(sub->get_name(), input);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}
