#include "clawham/graph_ops.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "clawham/errors.hpp"

namespace clawham {

namespace {

template <class G>
std::uint64_t reach(const G& g, int start, std::uint64_t within) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1) next |= g.neighbors(std::countr_zero(b));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

template <class G>
bool connected_within(const G& g, VertexSet within) {
  const std::uint64_t mask = within.bits() & g.vertices().bits();
  if (mask == 0) return false;
  return reach(g, std::countr_zero(mask), mask) == mask;
}

template <class G>
bool two_connected(const G& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return false;
  const std::uint64_t all = g.vertices().bits();
  for (int v = 0; v < n; ++v)
    if (!connected_within(g, VertexSet(all & ~(std::uint64_t{1} << v)))) return false;
  return true;
}

}  // namespace

bool is_connected(const SimpleGraph& g) { return connected_within(g, g.vertices()); }
bool is_connected(const Multigraph& g) { return connected_within(g, g.vertices()); }
bool is_connected_within(const SimpleGraph& g, VertexSet within) { return connected_within(g, within); }
bool is_connected_within(const Multigraph& g, VertexSet within) { return connected_within(g, within); }

bool is_2_connected(const SimpleGraph& g) { return two_connected(g); }
bool is_2_connected(const Multigraph& g) { return two_connected(g); }

std::vector<EdgeId> bridges(const Multigraph& g) {
  std::vector<EdgeId> out;
  const auto all = g.vertices().bits();
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto& edge = g.edge(e);
    if (g.multiplicity(edge.u, edge.v) > 1) continue;
    // Reachability from u without the single edge uv.
    std::uint64_t seen = std::uint64_t{1} << edge.u;
    std::uint64_t frontier = seen;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1) {
        const int w = std::countr_zero(b);
        std::uint64_t nb = g.neighbors(w);
        if (w == edge.u) nb &= ~(std::uint64_t{1} << edge.v);
        if (w == edge.v) nb &= ~(std::uint64_t{1} << edge.u);
        next |= nb;
      }
      next &= all & ~seen;
      seen |= next;
      frontier = next;
    }
    if (!((seen >> edge.v) & 1U)) out.push_back(e);
  }
  return out;
}

bool is_2_edge_connected(const Multigraph& g) {
  return g.order() >= 2 && is_connected(g) && bridges(g).empty();
}

bool is_2_edge_connected(const SimpleGraph& g) { return is_2_edge_connected(Multigraph::from_simple(g)); }

bool is_essentially_2_edge_connected(const Multigraph& g) {
  if (!is_connected(g)) throw InvalidInput("is_essentially_2_edge_connected: graph is disconnected");
  for (EdgeId e : bridges(g)) {
    const auto& edge = g.edge(e);
    if (g.degree(edge.u) != 1 && g.degree(edge.v) != 1) return false;
  }
  return true;
}

bool is_essentially_2_edge_connected(const SimpleGraph& g) {
  return is_essentially_2_edge_connected(Multigraph::from_simple(g));
}

bool is_triangle_free(const SimpleGraph& g) {
  for (auto [u, v] : g.edges())
    if (g.neighbors(u) & g.neighbors(v)) return false;
  return true;
}

bool is_triangle_free(const Multigraph& g) { return is_triangle_free(g.underlying_simple()); }

int count_triangles(const SimpleGraph& g) {
  int total = 0;
  for (auto [u, v] : g.edges()) {
    const std::uint64_t above = v + 1 < 64 ? ~((std::uint64_t{1} << (v + 1)) - 1) : 0;
    total += std::popcount(g.neighbors(u) & g.neighbors(v) & above);
  }
  return total;
}

int edge_degree(const Multigraph& g, EdgeId e) {
  const auto& edge = g.edge(e);
  return g.degree(edge.u) + g.degree(edge.v) - g.multiplicity(edge.u, edge.v) - 1;
}

int edge_degree(const SimpleGraph& g, int u, int v) {
  if (!g.adjacent(u, v)) throw InvalidInput("edge_degree: not an edge");
  return g.degree(u) + g.degree(v) - 2;
}

ContractionResult contract(const Multigraph& g, VertexSet f) {
  const int n = g.order();
  if (f.empty()) throw InvalidInput("contract: F is empty");
  if ((f - g.vertices()).size() != 0) throw InvalidInput("contract: F outside the vertex range");
  if (!is_connected_within(g, f)) throw InvalidInput("contract: F induces a disconnected subgraph");

  ContractionResult out;
  out.vertex_map.assign(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (f.contains(v)) {
      if (out.contracted_vertex < 0) out.contracted_vertex = next++;
      out.vertex_map[v] = out.contracted_vertex;
    } else {
      out.vertex_map[v] = next++;
    }
  }

  struct Mapped {
    int a, b;
    EdgeId origin;
  };
  std::vector<Mapped> mapped;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto& edge = g.edge(e);
    int a = out.vertex_map[edge.u];
    int b = out.vertex_map[edge.v];
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    mapped.push_back({a, b, e});
  }
  std::stable_sort(mapped.begin(), mapped.end(),
                   [](const Mapped& x, const Mapped& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(mapped.size());
  for (const auto& m : mapped) {
    pairs.emplace_back(m.a, m.b);
    out.edge_origin.push_back(m.origin);
  }
  out.quotient = Multigraph::from_edges(next, pairs);
  return out;
}

}  // namespace clawham
