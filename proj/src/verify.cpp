#include "clawham/verify.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <optional>

#include "clawham/canon.hpp"
#include "clawham/clawfree.hpp"
#include "clawham/enumeration.hpp"
#include "clawham/errors.hpp"
#include "clawham/graph6.hpp"
#include "clawham/graph_ops.hpp"
#include "clawham/json_io.hpp"
#include "clawham/linegraph.hpp"
#include "clawham/trails.hpp"

namespace clawham {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kCapExceeded:
      return "cap-exceeded";
  }
  return "unknown";
}

namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Outcome {
  std::optional<Counterexample> failure;
  std::optional<std::string> cap;
};

Counterexample counterexample(const SimpleGraph& g, json detail) { return {write_graph6(g), detail.dump()}; }

Counterexample counterexample(const Multigraph& g, json detail) {
  detail["graph"] = to_json(g);
  return {write_graph6(g.underlying_simple()), detail.dump()};
}

class Check {
 public:
  Check(std::string name, std::string family) : start_(Clock::now()) {
    result_.name = std::move(name);
    result_.family = std::move(family);
  }

  CheckResult& result() { return result_; }

  // eval returns a counterexample or nullopt. Library errors other than
  // CapExceeded count as failures of the instance.
  template <class Item, class Eval>
  void sweep(const std::vector<Item>& items, Eval&& eval, ExecutionPolicy policy) {
    auto outcomes = indexed_map<Outcome>(
        items.size(),
        [&](std::size_t i) {
          Outcome o;
          try {
            o.failure = eval(items[i]);
          } catch (const CapExceeded& e) {
            o.cap = e.what();
          } catch (const Error& e) {
            o.failure = failure_of(items[i], e.what());
          }
          return o;
        },
        policy);
    result_.instances += static_cast<long long>(items.size());
    for (auto& o : outcomes) {
      if (o.failure) result_.counterexamples.push_back(std::move(*o.failure));
      if (o.cap) {
        cap_hit_ = true;
        if (cap_notes_ < 5) result_.notes.push_back("cap exceeded: " + *o.cap), ++cap_notes_;
      }
    }
  }

  CheckResult finish() {
    std::sort(result_.counterexamples.begin(), result_.counterexamples.end());
    if (!result_.counterexamples.empty())
      result_.verdict = Verdict::kFail;
    else if (cap_hit_)
      result_.verdict = Verdict::kCapExceeded;
    else
      result_.verdict = Verdict::kPass;
    result_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    return result_;
  }

 private:
  static Counterexample failure_of(const SimpleGraph& g, const std::string& what) {
    return counterexample(g, {{"error", what}});
  }
  static Counterexample failure_of(const Lemma5Instance& inst, const std::string& what) {
    return counterexample(inst.graph, {{"error", what}});
  }
  static Counterexample failure_of(const Lemma6Instance& inst, const std::string& what) {
    return counterexample(inst.graph, {{"error", what}, {"x", inst.x}, {"y", inst.y}});
  }

  CheckResult result_;
  Clock::time_point start_;
  bool cap_hit_ = false;
  int cap_notes_ = 0;
};

int order_bound(const CheckOptions& options, int fallback) { return options.max_n > 0 ? options.max_n : fallback; }

FamilySpec claw_free_2_connected(int max_n) {
  FamilySpec spec;
  spec.n_min = 3;
  spec.n_max = max_n;
  spec.claw_free = true;
  spec.two_connected = true;
  return spec;
}

bool valid_trail_with(const Multigraph& h, const Trail& t, VertexSet must_visit, bool dominating) {
  if (!is_closed_trail(h, t)) return false;
  if ((must_visit - t.vertex_set()) != VertexSet()) return false;
  return !dominating || dominates(h, t);
}

// The correspondence maps host adjacency exactly onto edge adjacency.
bool root_matches_host(const SimpleGraph& host, const RootResult& r) {
  const int n = host.order();
  if (r.root.size() != n || !is_triangle_free(r.root)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto [p, q] = r.correspondence[a];
      const auto [s, t] = r.correspondence[b];
      const bool share = p == s || p == t || q == s || q == t;
      if (share != host.adjacent(a, b)) return false;
    }
  return true;
}

// Edges of the simple graph h as multigraph ids: both enumerate pairs u < v
// lexicographically, so ids coincide.
Multigraph as_multigraph(const SimpleGraph& h) { return Multigraph::from_simple(h); }

}  // namespace

// ---------------------------------------------------------------------------

CheckResult check_lemma_5cycle(const CheckOptions& options) {
  Check check("lemma_5cycle", "triangle-free, 5-cycle plus w1, w2 with two cycle neighbours each");
  const auto instances = enumerate_lemma5_instances();
  check.sweep(
      instances,
      [](const Lemma5Instance& inst) -> std::optional<Counterexample> {
        const Multigraph h = as_multigraph(inst.graph);
        EdgeSet attach(static_cast<std::size_t>(h.size()));
        for (int w : {inst.w1, inst.w2})
          for (int u : inst.cycle)
            if (h.multiplicity(w, u) > 0) attach.insert(h.first_edge(std::min(w, u), std::max(w, u)));
        const auto trail = closed_trail_exists(h, VertexSet(), attach, TrailMode::kSpanning);
        json detail{{"w1w2", inst.w1w2}};
        if (!trail) {
          detail["failed"] = "no spanning closed trail through E({w1,w2},C)";
          return counterexample(inst.graph, detail);
        }
        bool uses_all = true;
        const EdgeSet used = trail->edge_set(h);
        for (EdgeId e : attach.members()) uses_all = uses_all && used.contains(e);
        if (!valid_trail_with(h, *trail, h.vertices(), false) || !uses_all) {
          detail["failed"] = "invalid witness";
          return counterexample(inst.graph, detail);
        }
        if (inst.w1w2 && !is_collapsible(h)) {
          detail["failed"] = "not collapsible";
          return counterexample(inst.graph, detail);
        }
        return std::nullopt;
      },
      options.policy);
  return check.finish();
}

CheckResult check_lemma_nokori2hen(const CheckOptions& options) {
  const int max_n = order_bound(options, 8);
  Check check("nokori2hen", "essentially 2-edge-connected multigraphs, n<=" + std::to_string(max_n) +
                                      ", multiplicity<=" + std::to_string(options.max_multiplicity) +
                                      ", marked edge xy with d(x),d(y)>=2 and |E(G-{x,y})|<=2");
  const auto instances = enumerate_lemma6_instances(max_n, options.max_multiplicity);
  check.sweep(
      instances,
      [](const Lemma6Instance& inst) -> std::optional<Counterexample> {
        const VertexSet xy = VertexSet::of({inst.x, inst.y});
        const auto trail = closed_trail_exists(inst.graph, xy, EdgeSet(), TrailMode::kDominating);
        if (trail && valid_trail_with(inst.graph, *trail, xy, true)) return std::nullopt;
        return counterexample(inst.graph, {{"x", inst.x},
                                           {"y", inst.y},
                                           {"failed", trail ? "invalid witness" : "no DCT through x and y"}});
      },
      options.policy);
  check.result().notes.push_back("multiplicity bounded by " + std::to_string(options.max_multiplicity));
  return check.finish();
}

CheckResult check_hn(const CheckOptions& options) {
  const int max_n = order_bound(options, 7);
  FamilySpec spec;
  spec.n_min = 1;
  spec.n_max = max_n;
  spec.connected = true;
  Check check("hn", spec.describe() + ", |E|>=3");
  auto graphs = enumerate(spec, options.policy);
  std::erase_if(graphs, [](const SimpleGraph& g) { return g.size() < 3; });
  check.sweep(
      graphs,
      [](const SimpleGraph& h) -> std::optional<Counterexample> {
        const Multigraph m = as_multigraph(h);
        const auto dct = has_dct(m);
        if (dct && !valid_trail_with(m, *dct, VertexSet(), true))
          return counterexample(h, {{"failed", "invalid DCT witness"}});
        const auto cycle = hamiltonian_cycle(line_graph(h).graph);
        if (dct.has_value() == cycle.has_value()) return std::nullopt;
        return counterexample(h, {{"dct", dct.has_value()}, {"line_graph_hamiltonian", cycle.has_value()}});
      },
      options.policy);
  return check.finish();
}

CheckResult check_closure(const CheckOptions& options) {
  const int max_n = order_bound(options, 9);
  const FamilySpec spec = claw_free_2_connected(max_n);
  Check check("closure", spec.describe());
  check.sweep(
      enumerate(spec, options.policy),
      [](const SimpleGraph& g) -> std::optional<Counterexample> {
        const SimpleGraph cl = closure(g);
        const bool hg = is_hamiltonian(g), hc = is_hamiltonian(cl);
        if (hg != hc) return counterexample(g, {{"hamiltonian", hg}, {"closure_hamiltonian", hc}});
        const RootResult root = root_graph(cl);
        if (!root_matches_host(cl, root)) return counterexample(g, {{"failed", "root does not match closure"}});
        return std::nullopt;
      },
      options.policy);
  return check.finish();
}

CheckResult check_ms(const CheckOptions& options) {
  const int max_n = order_bound(options, 10);
  const FamilySpec spec = claw_free_2_connected(max_n);
  Check check("ms", spec.describe() + ", 3*min-degree>=n-2");
  auto graphs = enumerate(spec, options.policy);
  std::erase_if(graphs, [](const SimpleGraph& g) { return 3 * g.min_degree() < g.order() - 2; });
  check.sweep(
      graphs,
      [](const SimpleGraph& g) -> std::optional<Counterexample> {
        if (is_hamiltonian(g)) return std::nullopt;
        return counterexample(g, {{"failed", "not hamiltonian"}});
      },
      options.policy);
  return check.finish();
}

CheckResult check_theorem_small(const CheckOptions& options) {
  const int max_n = order_bound(options, 10);
  const FamilySpec spec = claw_free_2_connected(max_n);
  Check check("theorem_small", spec.describe());
  const auto graphs = enumerate(spec, options.policy);
  check.sweep(
      graphs,
      [](const SimpleGraph& g) -> std::optional<Counterexample> {
        const bool condition = net_condition_holds(g);
        const bool hg = is_hamiltonian(g);
        const SimpleGraph cl = closure(g);
        const bool hc = is_hamiltonian(cl);
        const RootResult root = root_graph(cl);
        const bool dct = has_dct(root.root).has_value();
        if ((condition && !hg) || hg != hc || hc != dct)
          return counterexample(g, {{"net_condition", condition},
                                    {"hamiltonian", hg},
                                    {"closure_hamiltonian", hc},
                                    {"root_dct", dct}});
        return std::nullopt;
      },
      options.policy);
  long long with_condition = 0;
  for (const auto& g : graphs) with_condition += net_condition_holds(g) ? 1 : 0;
  check.result().notes.push_back("net condition holds on " + std::to_string(with_condition) + " instances");
  return check.finish();
}

CheckResult check_main_dichotomy(const CheckOptions& options) {
  const int max_n = order_bound(options, 10);
  const FamilySpec spec = claw_free_2_connected(max_n);
  const int slack = options.heavy_slack;
  Check check("main_dichotomy", spec.describe() + ", net condition");
  auto graphs = enumerate(spec, options.policy);
  std::erase_if(graphs, [](const SimpleGraph& g) { return !net_condition_holds(g); });
  check.result().notes.push_back("conditional on the heaviness definition 3*ed(e) >= |E(H)|-2+3*slack, slack=" +
                                 std::to_string(slack));
  check.sweep(
      graphs,
      [slack](const SimpleGraph& g) -> std::optional<Counterexample> {
        const SimpleGraph h = root_graph(closure(g)).root;
        if (has_dct(h) || find_heavy_matching(h, 4, slack)) return std::nullopt;
        return counterexample(g, {{"root", write_graph6(h)}, {"failed", "no DCT and no heavy 4-matching"}});
      },
      options.policy);
  return check.finish();
}

CheckResult check_jisuukeisan(const CheckOptions& options) {
  const int max_n = order_bound(options, 8);
  FamilySpec spec;
  spec.n_min = 2;
  spec.n_max = max_n;
  spec.connected = true;
  spec.triangle_free = true;
  spec.essentially_2_edge_connected = true;
  Check check("jisuukeisan", spec.describe() + ", no DCT");
  const auto graphs = enumerate(spec, options.policy);
  long long without_dct = 0;
  auto flags = indexed_map<char>(
      graphs.size(), [&](std::size_t i) -> char { return has_dct(graphs[i]) ? 0 : 1; }, options.policy);
  std::vector<SimpleGraph> hs;
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (flags[i]) hs.push_back(graphs[i]), ++without_dct;
  check.sweep(
      hs,
      [](const SimpleGraph& h) -> std::optional<Counterexample> {
        const auto edges = h.edges();
        const int m = static_cast<int>(edges.size());
        std::vector<int> ed(m);
        for (int e = 0; e < m; ++e) ed[e] = edge_degree(h, edges[e].first, edges[e].second);
        auto disjoint = [&](int a, int b) {
          return edges[a].first != edges[b].first && edges[a].first != edges[b].second &&
                 edges[a].second != edges[b].first && edges[a].second != edges[b].second;
        };
        for (int a = 0; a < m; ++a)
          for (int b = a + 1; b < m; ++b) {
            if (!disjoint(a, b)) continue;
            for (int c = b + 1; c < m; ++c)
              if (disjoint(a, c) && disjoint(b, c) && ed[a] + ed[b] + ed[c] > m + 1)
                return counterexample(h, {{"matching", json::array({edges[a], edges[b], edges[c]})},
                                          {"sum", ed[a] + ed[b] + ed[c]},
                                          {"bound", m + 1}});
          }
        return std::nullopt;
      },
      options.policy);
  check.result().notes.push_back(std::to_string(graphs.size()) + " graphs in family, " +
                                 std::to_string(without_dct) + " without DCT examined");
  return check.finish();
}

CheckResult check_nokorisanhen(const CheckOptions& options) {
  const int max_n = order_bound(options, 8);
  FamilySpec spec;
  spec.n_min = 1;
  spec.n_max = max_n;
  spec.connected = true;
  spec.essentially_2_edge_connected = true;
  Check check("nokorisanhen", spec.describe() + ", collapsible induced Xi with |E(H-Xi)|<=3");
  check.sweep(
      enumerate(spec, options.policy),
      [](const SimpleGraph& g) -> std::optional<Counterexample> {
        const Multigraph h = as_multigraph(g);
        if (has_dct(h)) return std::nullopt;
        // Only graphs without a DCT can contradict the lemma.
        for (std::uint64_t x = 1; x < (std::uint64_t{1} << h.order()); ++x) {
          const VertexSet xi(x);
          if (h.edges_avoiding(xi) > 3) continue;
          if (!is_connected_within(h, xi)) continue;
          if (is_collapsible(h.induced(xi)))
            return counterexample(g, {{"xi", xi.members()}, {"failed", "no DCT"}});
        }
        return std::nullopt;
      },
      options.policy);
  return check.finish();
}

CheckResult check_endmove_weak(const CheckOptions& options) {
  const int max_n = order_bound(options, 9);
  const FamilySpec spec = claw_free_2_connected(max_n);
  const int slack = options.heavy_slack;
  Check check("endmove_weak", spec.describe() + ", net condition, subdivided claw in the root");
  const auto graphs = enumerate(spec, options.policy);
  // 0: no subdivided claw in the root, 1: claw but net condition fails, 2: qualifying.
  const auto kind = indexed_map<char>(
      graphs.size(),
      [&](std::size_t i) -> char {
        if (find_subdivided_claws(root_graph(closure(graphs[i])).root).empty()) return 0;
        return net_condition_holds(graphs[i]) ? 2 : 1;
      },
      options.policy);
  std::vector<SimpleGraph> qualifying;
  long long without_claw = 0, condition_fails = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (kind[i] == 2) qualifying.push_back(graphs[i]);
    without_claw += kind[i] == 0 ? 1 : 0;
    condition_fails += kind[i] == 1 ? 1 : 0;
  }
  check.result().notes.push_back(std::to_string(without_claw) +
                                 " graphs without a subdivided claw in the root pass vacuously");
  check.result().notes.push_back(std::to_string(condition_fails) +
                                 " graphs have a subdivided claw in the root but fail the net condition");
  check.sweep(
      qualifying,
      [slack](const SimpleGraph& g) -> std::optional<Counterexample> {
        const int n = g.order();
        const SimpleGraph cl = closure(g);
        const int root_edges = n;  // |E(H)| = |V(cl(G))|
        for (const auto& net : find_nets(g)) {
          bool good = true;
          for (int y : net.ends)
            good = good && 3 * g.degree(y) >= n - 2 && 3 * cl.degree(y) >= root_edges - 2 + 3 * slack;
          if (good) return std::nullopt;
        }
        return counterexample(g, {{"failed", "no induced net with heavy endvertices"}});
      },
      options.policy);
  return check.finish();
}

CheckResult check_lai(const CheckOptions& options) {
  const int max_n = order_bound(options, 8);
  FamilySpec spec;
  spec.n_min = 4;
  spec.n_max = max_n;
  spec.two_connected = true;
  spec.min_degree = 3;
  Check check("lai", spec.describe() + ", every edge on a cycle of length <= 4");
  std::vector<SimpleGraph> graphs;
  if (max_n >= spec.n_min) graphs = enumerate(spec, options.policy);
  std::erase_if(graphs, [](const SimpleGraph& g) { return !lai_hypothesis(g); });
  check.sweep(
      graphs,
      [](const SimpleGraph& g) -> std::optional<Counterexample> {
        if (is_collapsible(g)) return std::nullopt;
        return counterexample(g, {{"failed", "not collapsible"}});
      },
      options.policy);
  return check.finish();
}

namespace {

Multigraph xi_star() {
  // u1..u5 = 0..4, w1 = 5, w2 = 6, w3 = 7.
  return Multigraph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 6}, {5, 0}, {5, 2}, {6, 1}, {7, 2},
                                    {7, 4}});
}

}  // namespace

CheckResult fixture_xi_star(const CheckOptions&) {
  Check check("xi_star", "Xi* gadget: 5-cycle, w1w2, N(w1)={u1,u3}, N(w2)={u2}, N(w3)={u3,u5}");
  const Multigraph g = xi_star();
  const SimpleGraph s = g.to_simple();
  const bool triangle_free = is_triangle_free(s);
  const auto sct = spanning_closed_trail(g);
  const auto dct = has_dct(g);
  json detail{{"triangle_free", triangle_free},
              {"edges", g.size()},
              {"spanning_closed_trail", sct.has_value()},
              {"dct", dct.has_value()}};
  check.result().instances = 1;
  check.result().notes.push_back(detail.dump());
  const bool witnesses_ok = (!sct || valid_trail_with(g, *sct, g.vertices(), false)) &&
                            (!dct || valid_trail_with(g, *dct, VertexSet(), true));
  if (!triangle_free || g.size() != 11 || sct.has_value() != kXiStarHasSpanningClosedTrail ||
      dct.has_value() != kXiStarHasDct || !witnesses_ok)
    check.result().counterexamples.push_back(counterexample(g, detail));
  return check.finish();
}

CheckResult fixture_k33(const CheckOptions&) {
  Check check("k33", "K33 and K33 minus an edge collapsible; C4 not, K3 yes");
  SimpleGraph k33(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.add_edge(a, b);
  SimpleGraph k33_minus = k33;
  k33_minus.remove_edge(0, 3);
  const SimpleGraph c4 = SimpleGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const SimpleGraph k3 = SimpleGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  const std::vector<std::pair<SimpleGraph, bool>> cases{{k33, true}, {k33_minus, true}, {c4, false}, {k3, true}};
  for (const auto& [g, expected] : cases) {
    const bool got = is_collapsible(g);
    if (got != expected) check.result().counterexamples.push_back(counterexample(g, {{"collapsible", got}}));
  }
  check.result().instances = static_cast<long long>(cases.size());
  return check.finish();
}

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> registry{
      {"lemma_5cycle", 0, check_lemma_5cycle},   {"nokori2hen", 8, check_lemma_nokori2hen},
      {"hn", 7, check_hn},                       {"closure", 9, check_closure},
      {"ms", 10, check_ms},                      {"theorem_small", 10, check_theorem_small},
      {"main_dichotomy", 10, check_main_dichotomy}, {"jisuukeisan", 8, check_jisuukeisan},
      {"nokorisanhen", 8, check_nokorisanhen},   {"endmove_weak", 9, check_endmove_weak},
      {"lai", 8, check_lai},                     {"xi_star", 0, fixture_xi_star},
      {"k33", 0, fixture_k33},
  };
  return registry;
}

CheckResult run_check(const std::string& name, const CheckOptions& options) {
  for (const auto& info : check_registry()) {
    if (info.name != name) continue;
    try {
      return info.run(options);
    } catch (const CapExceeded& e) {
      CheckResult r;
      r.name = name;
      r.family = "max_n=" + std::to_string(options.max_n);
      r.verdict = Verdict::kCapExceeded;
      r.notes.push_back(std::string("cap exceeded: ") + e.what());
      return r;
    }
  }
  throw InvalidInput("unknown check: " + name);
}

}  // namespace clawham
