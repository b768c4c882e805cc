#include "clawham/linegraph.hpp"

#include <algorithm>
#include <string>

#include "clawham/canon.hpp"
#include "clawham/clawfree.hpp"
#include "clawham/errors.hpp"
#include "clawham/graph_ops.hpp"

namespace clawham {

LineGraph line_graph(const SimpleGraph& h) {
  LineGraph out;
  out.edge_of_vertex = h.edges();
  const int m = static_cast<int>(out.edge_of_vertex.size());
  if (m > kMaxVertices) throw CapExceeded("line_graph: more than 64 edges");
  out.graph = SimpleGraph(m);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const auto [a, b] = out.edge_of_vertex[i];
      const auto [c, d] = out.edge_of_vertex[j];
      if (a == c || a == d || b == c || b == d) out.graph.add_edge(i, j);
    }
  return out;
}

bool is_valid_krausz_partition(const SimpleGraph& host, const KrauszPartition& partition) {
  const int n = host.order();
  if (static_cast<int>(partition.incidence.size()) != n) return false;
  std::vector<int> count(n, 0);
  for (std::size_t c = 0; c < partition.cliques.size(); ++c) {
    const VertexSet k = partition.cliques[c];
    if (k.empty() || (k - host.vertices()) != VertexSet()) return false;
    for (int v : k.members()) {
      if ((host.neighbors(v) & k.bits()) != (k.bits() & ~(std::uint64_t{1} << v))) return false;
      ++count[v];
      const auto& inc = partition.incidence[v];
      if (std::find(inc.begin(), inc.end(), static_cast<int>(c)) == inc.end()) return false;
    }
    for (std::size_t d = c + 1; d < partition.cliques.size(); ++d)
      if ((k & partition.cliques[d]).size() > 1) return false;
  }
  for (int v = 0; v < n; ++v)
    if (count[v] > 2 || count[v] != static_cast<int>(partition.incidence[v].size())) return false;
  for (const auto& [u, v] : host.edges()) {
    int covering = 0;
    for (const VertexSet k : partition.cliques) covering += (k.contains(u) && k.contains(v)) ? 1 : 0;
    if (covering != 1) return false;
  }
  return true;
}

namespace {

void maximal_cliques(const SimpleGraph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                     std::vector<VertexSet>& out) {
  if (p == 0 && x == 0) {
    out.emplace_back(r);
    return;
  }
  const std::uint64_t px = p | x;
  int pivot = std::countr_zero(px);
  int best = -1;
  for (std::uint64_t s = px; s != 0; s &= s - 1) {
    const int u = std::countr_zero(s);
    const int c = std::popcount(p & g.neighbors(u));
    if (c > best) best = c, pivot = u;
  }
  for (std::uint64_t s = p & ~g.neighbors(pivot); s != 0; s &= s - 1) {
    const int v = std::countr_zero(s);
    const std::uint64_t b = std::uint64_t{1} << v;
    maximal_cliques(g, r | b, p & g.neighbors(v), x & g.neighbors(v), out);
    p &= ~b;
    x |= b;
  }
}

// With a triangle-free root every triangle of the host sits inside one
// clique, so every partition clique of size >= 2 is a maximal clique.
class KrauszSearch {
 public:
  KrauszSearch(const SimpleGraph& g, int limit) : g_(g), limit_(limit), count_(g.order(), 0) {
    maximal_cliques(g, 0, g.vertices().bits(), 0, candidates_);
    std::sort(candidates_.begin(), candidates_.end(),
              [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    edges_ = g.edges();
    covered_.assign(edges_.size(), false);
  }

  void run() { search(); }
  const std::vector<std::vector<VertexSet>>& solutions() const { return solutions_; }

 private:
  int edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    return static_cast<int>(it - edges_.begin());
  }

  bool can_add(VertexSet k) const {
    const auto members = k.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (count_[members[i]] >= 2) return false;
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (covered_[edge_index(members[i], members[j])]) return false;
    }
    // Cliques already met by k; a pair of them that also meet each other
    // closes a triangle in the root.
    std::vector<VertexSet> met;
    for (const VertexSet c : chosen_)
      if (!(c & k).empty()) met.push_back(c);
    for (std::size_t i = 0; i < met.size(); ++i)
      for (std::size_t j = i + 1; j < met.size(); ++j)
        if (!(met[i] & met[j]).empty()) return false;
    return true;
  }

  void apply(VertexSet k, bool on) {
    const auto members = k.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      count_[members[i]] += on ? 1 : -1;
      for (std::size_t j = i + 1; j < members.size(); ++j) covered_[edge_index(members[i], members[j])] = on;
    }
    if (on)
      chosen_.push_back(k);
    else
      chosen_.pop_back();
  }

  void search() {
    if (static_cast<int>(solutions_.size()) >= limit_) return;
    const auto first = std::find(covered_.begin(), covered_.end(), false);
    if (first == covered_.end()) {
      solutions_.push_back(chosen_);
      return;
    }
    const auto [u, v] = edges_[first - covered_.begin()];
    for (const VertexSet k : candidates_) {
      if (!k.contains(u) || !k.contains(v) || !can_add(k)) continue;
      apply(k, true);
      search();
      apply(k, false);
    }
  }

  const SimpleGraph& g_;
  int limit_;
  std::vector<VertexSet> candidates_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<bool> covered_;
  std::vector<int> count_;
  std::vector<VertexSet> chosen_;
  std::vector<std::vector<VertexSet>> solutions_;
};

RootResult build_root(const SimpleGraph& g, std::vector<VertexSet> cliques) {
  const int n = g.order();
  // Isolated host vertices (only K1 is connected with one) become singleton cliques.
  for (int v = 0; v < n; ++v) {
    bool in_any = false;
    for (const VertexSet k : cliques) in_any = in_any || k.contains(v);
    if (!in_any) cliques.push_back(VertexSet::of({v}));
  }
  RootResult out;
  out.certificate.cliques = cliques;
  out.certificate.incidence.assign(n, {});
  for (std::size_t c = 0; c < cliques.size(); ++c)
    for (int v : cliques[c].members()) out.certificate.incidence[v].push_back(static_cast<int>(c));
  int next = static_cast<int>(cliques.size());
  out.correspondence.resize(n);
  std::vector<std::pair<int, int>> root_edges;
  for (int v = 0; v < n; ++v) {
    const auto& inc = out.certificate.incidence[v];
    const std::pair<int, int> e = inc.size() == 2 ? std::make_pair(inc[0], inc[1]) : std::make_pair(inc[0], next++);
    out.correspondence[v] = e;
    root_edges.push_back(e);
  }
  if (next > kMaxVertices) throw CapExceeded("root_graph: root would exceed 64 vertices");
  out.root = SimpleGraph::from_edges(next, root_edges);
  return out;
}

}  // namespace

RootResult root_graph(const SimpleGraph& g) {
  if (g.order() == 0) throw InvalidInput("root_graph: empty graph");
  if (!is_connected(g)) throw InvalidInput("root_graph: disconnected graph");
  const auto claws = find_claws(g);
  if (!claws.empty()) {
    const auto& c = claws.front();
    throw NotALineGraph("root_graph: induced claw", "claw center " + std::to_string(c.center) + " leaves " +
                                                        std::to_string(c.leaves[0]) + "," +
                                                        std::to_string(c.leaves[1]) + "," +
                                                        std::to_string(c.leaves[2]));
  }
  if (!(closure(g) == g)) throw NotClosed("root_graph: graph differs from its closure");

  constexpr int kPartitionLimit = 64;
  KrauszSearch search(g, kPartitionLimit);
  search.run();
  const auto& solutions = search.solutions();
  if (solutions.empty())
    throw NotALineGraph("root_graph: no Krausz partition with a triangle-free root",
                        "partition search exhausted");

  RootResult best = build_root(g, solutions.front());
  if (solutions.size() > 1 && best.root.order() <= kMaxCanonicalOrder) {
    std::string best_form = canonical_form(best.root);
    for (std::size_t i = 1; i < solutions.size(); ++i) {
      RootResult candidate = build_root(g, solutions[i]);
      std::string form = canonical_form(candidate.root);
      if (form < best_form) best = std::move(candidate), best_form = std::move(form);
    }
  }
  best.multiplicity = static_cast<int>(solutions.size());
  return best;
}

bool verify_line_iso(const SimpleGraph& h, const SimpleGraph& g) {
  const SimpleGraph l = line_graph(h).graph;
  if (l.order() != g.order() || l.size() != g.size()) return false;
  return are_isomorphic(l, g);
}

}  // namespace clawham
