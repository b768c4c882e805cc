#include "clawham/json_io.hpp"

#include "clawham/errors.hpp"
#include "clawham/graph6.hpp"

namespace clawham {

using json = nlohmann::json;

json to_json(const Multigraph& g) {
  json adj = json::array();
  for (int u = 0; u < g.order(); ++u) {
    json row = json::array();
    for (int v = 0; v < g.order(); ++v) row.push_back(g.multiplicity(u, v));
    adj.push_back(std::move(row));
  }
  return {{"n", g.order()}, {"adj", std::move(adj)}};
}

Multigraph multigraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("adj"))
    throw InvalidInput("multigraph JSON needs \"n\" and \"adj\"");
  if (!j["n"].is_number_integer()) throw InvalidInput("multigraph JSON: n must be an integer");
  const int n = j["n"].get<int>();
  if (n < 0 || n > kMaxVertices) throw InvalidInput("multigraph JSON: n out of range");
  const json& adj = j["adj"];
  if (!adj.is_array() || static_cast<int>(adj.size()) != n) throw InvalidInput("multigraph JSON: adj must have n rows");
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u) {
    if (!adj[u].is_array() || static_cast<int>(adj[u].size()) != n)
      throw InvalidInput("multigraph JSON: adj rows must have n entries");
    for (int v = 0; v < n; ++v) {
      if (!adj[u][v].is_number_integer()) throw InvalidInput("multigraph JSON: entries must be integers");
      m[u][v] = adj[u][v].get<int>();
    }
  }
  return Multigraph::from_matrix(m);
}

json to_json(const Trail& t) { return {{"vertices", t.vertices}, {"edges", t.edges}}; }

json to_json(const std::vector<ClawOccurrence>& claws) {
  json out = json::array();
  for (const auto& c : claws) out.push_back({{"center", c.center}, {"leaves", c.leaves}});
  return out;
}

json to_json(const std::vector<NetOccurrence>& nets) {
  json out = json::array();
  for (const auto& s : nets) out.push_back({{"triangle", s.triangle}, {"ends", s.ends}});
  return out;
}

json to_json(const std::vector<SubdividedClawOccurrence>& claws) {
  json out = json::array();
  for (const auto& c : claws) out.push_back({{"hub", c.hub}, {"spokes", c.spokes}, {"tips", c.tips}});
  return out;
}

json to_json(const RootResult& r) {
  json cliques = json::array();
  for (const VertexSet k : r.certificate.cliques) cliques.push_back(k.members());
  json corr = json::array();
  for (const auto& [a, b] : r.correspondence) corr.push_back({a, b});
  return {{"root", write_graph6(r.root)},
          {"cliques", std::move(cliques)},
          {"correspondence", std::move(corr)},
          {"multiplicity", r.multiplicity}};
}

FamilySpec family_spec_from_json(const json& j) {
  if (!j.is_object()) throw InvalidInput("family spec must be a JSON object");
  FamilySpec s;
  try {
    if (j.contains("n")) {
      s.n_min = s.n_max = j["n"].get<int>();
    } else {
      s.n_min = j.value("n_min", 1);
      s.n_max = j.value("n_max", s.n_min);
    }
    s.connected = j.value("connected", false);
    s.two_connected = j.value("two_connected", false);
    s.triangle_free = j.value("triangle_free", false);
    s.claw_free = j.value("claw_free", false);
    s.essentially_2_edge_connected = j.value("essentially_2_edge_connected", false);
    s.min_degree = j.value("min_degree", 0);
    s.max_edges = j.value("max_edges", -1);
  } catch (const json::exception& e) {
    throw InvalidInput(std::string("family spec: ") + e.what());
  }
  for (const auto& [key, value] : j.items()) {
    static const char* known[] = {"n",         "n_min",        "n_max",
                                  "connected", "two_connected", "triangle_free",
                                  "claw_free", "essentially_2_edge_connected", "min_degree",
                                  "max_edges"};
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw InvalidInput("family spec: unknown key " + key);
  }
  return s;
}

json to_json(const FamilySpec& s) {
  return {{"n_min", s.n_min},
          {"n_max", s.n_max},
          {"connected", s.connected},
          {"two_connected", s.two_connected},
          {"triangle_free", s.triangle_free},
          {"claw_free", s.claw_free},
          {"essentially_2_edge_connected", s.essentially_2_edge_connected},
          {"min_degree", s.min_degree},
          {"max_edges", s.max_edges}};
}

json to_json(const CheckResult& r, bool include_timing) {
  json cx = json::array();
  for (const auto& c : r.counterexamples) cx.push_back({{"graph6", c.graph6}, {"detail", json::parse(c.detail)}});
  json out{{"name", r.name},
           {"family", r.family},
           {"instances", r.instances},
           {"counterexamples", std::move(cx)},
           {"verdict", verdict_name(r.verdict)},
           {"notes", r.notes}};
  if (include_timing) out["elapsed"] = r.elapsed_seconds;
  return out;
}

}  // namespace clawham
