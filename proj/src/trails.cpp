#include "clawham/trails.hpp"

#include <algorithm>
#include <numeric>

#include "clawham/errors.hpp"

namespace clawham {

namespace {

constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

// Degree of v inside h[within], counting multiplicity.
int degree_within(const Multigraph& h, int v, std::uint64_t within) {
  int d = 0;
  for (std::uint64_t s = h.neighbors(v) & within; s != 0; s &= s - 1) d += h.multiplicity(v, std::countr_zero(s));
  return d;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<int> parent;
};

}  // namespace

VertexSet Trail::vertex_set() const {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

EdgeSet Trail::edge_set(const Multigraph& g) const {
  EdgeSet s(static_cast<std::size_t>(g.size()));
  for (EdgeId e : edges) s.insert(e);
  return s;
}

bool is_closed_trail(const Multigraph& g, const Trail& t) {
  if (t.vertices.empty() || t.vertices.size() != t.edges.size() + 1) return false;
  if (t.vertices.front() != t.vertices.back()) return false;
  for (int v : t.vertices)
    if (v < 0 || v >= g.order()) return false;
  std::vector<bool> seen(g.size(), false);
  for (std::size_t i = 0; i < t.edges.size(); ++i) {
    const EdgeId e = t.edges[i];
    if (e < 0 || e >= g.size() || seen[e]) return false;
    seen[e] = true;
    const Edge& ed = g.edge(e);
    const int a = t.vertices[i], b = t.vertices[i + 1];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
  }
  return true;
}

bool dominates(const Multigraph& g, const Trail& t) {
  const VertexSet on = t.vertex_set();
  for (const Edge& e : g.edges())
    if (!on.contains(e.u) && !on.contains(e.v)) return false;
  return true;
}

Trail euler_circuit(const Multigraph& g, const EdgeSet& edges, int start) {
  const auto members = edges.members();
  if (members.empty()) return Trail{{start}, {}};
  std::vector<std::vector<EdgeId>> incident(g.order());
  for (EdgeId e : members) {
    incident[g.edge(e).u].push_back(e);
    incident[g.edge(e).v].push_back(e);
  }
  int s = g.order();
  for (EdgeId e : members) s = std::min(s, g.edge(e).u);
  std::vector<bool> used(g.size(), false);
  std::vector<std::size_t> next(g.order(), 0);
  std::vector<std::pair<int, EdgeId>> stack{{s, -1}}, popped;
  while (!stack.empty()) {
    const int v = stack.back().first;
    auto& i = next[v];
    while (i < incident[v].size() && used[incident[v][i]]) ++i;
    if (i == incident[v].size()) {
      popped.push_back(stack.back());
      stack.pop_back();
      continue;
    }
    const EdgeId e = incident[v][i];
    used[e] = true;
    stack.emplace_back(g.edge(e).other(v), e);
  }
  std::reverse(popped.begin(), popped.end());
  Trail t;
  for (const auto& [v, e] : popped) {
    t.vertices.push_back(v);
    if (e >= 0) t.edges.push_back(e);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Hamiltonicity

namespace {

class HamiltonSearch {
 public:
  HamiltonSearch(const SimpleGraph& g, long budget) : g_(g), n_(g.order()), budget_(budget) {}

  // nullopt in the outer optional: budget exhausted.
  std::optional<std::optional<std::vector<int>>> run() {
    path_.assign(1, 0);
    const bool found = extend(0, bit(0));
    if (exhausted_) return std::nullopt;
    if (!found) return std::optional<std::vector<int>>{};
    return std::optional<std::vector<int>>{path_};
  }

 private:
  bool extend(int v, std::uint64_t visited) {
    if (budget_ >= 0 && ++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (static_cast<int>(path_.size()) == n_) return g_.adjacent(v, 0);
    const std::uint64_t all = (n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1);
    const std::uint64_t open = all & ~visited;
    const std::uint64_t usable = open | bit(v) | bit(0);
    for (std::uint64_t s = open; s != 0; s &= s - 1) {
      const int w = std::countr_zero(s);
      if (std::popcount(g_.neighbors(w) & usable) < 2) return false;
    }
    for (std::uint64_t s = g_.neighbors(v) & open; s != 0; s &= s - 1) {
      const int w = std::countr_zero(s);
      path_.push_back(w);
      if (extend(w, visited | bit(w))) return true;
      path_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  const SimpleGraph& g_;
  int n_;
  long budget_;
  long nodes_ = 0;
  bool exhausted_ = false;
  std::vector<int> path_;
};

// reach[S] over S subset of {1..n-1} (bit i-1 for vertex i): end vertices of
// paths that start at 0 and visit exactly S.
std::optional<std::vector<int>> hamilton_dp(const SimpleGraph& g) {
  const int n = g.order();
  const int k = n - 1;
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<std::uint32_t> nbr(k);
  for (int v = 1; v < n; ++v) nbr[v - 1] = static_cast<std::uint32_t>(g.neighbors(v) >> 1);
  const auto start = static_cast<std::uint32_t>(g.neighbors(0) >> 1);
  std::vector<std::uint32_t> reach(full + 1, 0);
  for (std::size_t s = 1; s <= full; ++s) {
    if ((s & (s - 1)) == 0) {
      reach[s] = static_cast<std::uint32_t>(s) & start;
      continue;
    }
    std::uint32_t ends = 0;
    for (std::size_t r = s; r != 0; r &= r - 1) {
      const int i = std::countr_zero(r);
      if (nbr[i] & reach[s & ~(std::size_t{1} << i)]) ends |= std::uint32_t{1} << i;
    }
    reach[s] = ends;
  }
  const std::uint32_t closing = reach[full] & start;
  if (closing == 0) return std::nullopt;
  std::vector<int> back;
  std::size_t s = full;
  int cur = std::countr_zero(closing);
  while (true) {
    back.push_back(cur + 1);
    const std::size_t rest = s & ~(std::size_t{1} << cur);
    if (rest == 0) break;
    cur = std::countr_zero(nbr[cur] & reach[rest]);
    s = rest;
  }
  std::vector<int> cycle{0};
  cycle.insert(cycle.end(), back.rbegin(), back.rend());
  return cycle;
}

}  // namespace

std::optional<std::vector<int>> hamiltonian_cycle(const SimpleGraph& g, HamiltonMethod method,
                                                  const TrailLimits& limits) {
  const int n = g.order();
  if (n < 3) throw InvalidInput("hamiltonian_cycle: needs at least 3 vertices");
  if (n > std::min(limits.max_hamilton_order, 24)) throw CapExceeded("hamiltonian_cycle: order above cap");
  if (method != HamiltonMethod::kSubsetDp) {
    if (g.min_degree() < 2 || !is_2_connected(g)) return std::nullopt;
  }
  switch (method) {
    case HamiltonMethod::kSearch:
      return *HamiltonSearch(g, -1).run();
    case HamiltonMethod::kSubsetDp:
      return hamilton_dp(g);
    case HamiltonMethod::kAuto:
      break;
  }
  constexpr long kSearchBudget = 20000;
  if (auto quick = HamiltonSearch(g, kSearchBudget).run()) return *quick;
  return hamilton_dp(g);
}

// ---------------------------------------------------------------------------
// Parity search

ParitySearch::ParitySearch(const Multigraph& h, VertexSet within, const EdgeSet* forced)
    : h_(h), within_(within), forced_(static_cast<std::size_t>(h.size())), forced_root_(h.order()) {
  if (within.empty() || (within - h.vertices()) != VertexSet())
    throw InvalidInput("ParitySearch: vertex set empty or out of range");
  const std::uint64_t w = within.bits();
  for (EdgeId e = 0; e < h.size(); ++e) {
    const Edge& ed = h.edge(e);
    if ((w >> ed.u & 1U) && (w >> ed.v & 1U)) inside_.push_back(e);
  }
  UnionFind uf(h.order());
  if (forced != nullptr && forced->universe() != 0) {
    if (forced->universe() != static_cast<std::size_t>(h.size()))
      throw InvalidInput("ParitySearch: forced edges on another carrier");
    for (EdgeId e : forced->members()) {
      const Edge& ed = h.edge(e);
      if (!within.contains(ed.u) || !within.contains(ed.v))
        throw InvalidInput("ParitySearch: forced edge leaves the vertex set");
      forced_.insert(e);
      uf.unite(ed.u, ed.v);
    }
  }
  for (int v = 0; v < h.order(); ++v) forced_root_[v] = uf.find(v);
  for (EdgeId e : inside_) {
    const Edge& ed = h.edge(e);
    if (ed.slot == 0 && forced_root_[ed.u] != forced_root_[ed.v]) candidates_.push_back(e);
  }
}

template <class Visit>
void ParitySearch::for_each_tree(Visit&& visit) const {
  // Components of the forced subgraph, as vertex masks.
  std::vector<std::uint64_t> start;
  for (int v : within_.members()) {
    const int r = forced_root_[v];
    auto it = std::find_if(start.begin(), start.end(), [&](std::uint64_t m) { return (m >> r) & 1U; });
    if (it == start.end())
      start.push_back(bit(v) | bit(r));
    else
      *it |= bit(v);
  }
  std::vector<EdgeId> tree;
  std::vector<bool> in_tree(h_.size(), false);

  auto view_of = [&]() {
    TreeView view;
    std::uint64_t odd = 0;
    for (EdgeId e : inside_)
      if (forced_.contains(e) || in_tree[e]) odd ^= bit(h_.edge(e).u) ^ bit(h_.edge(e).v);
    view.odd = VertexSet(odd);
    UnionFind uf(h_.order());
    for (EdgeId e : inside_)
      if (!forced_.contains(e) && !in_tree[e]) uf.unite(h_.edge(e).u, h_.edge(e).v);
    for (int v : within_.members()) {
      const int r = uf.find(v);
      auto it = std::find_if(view.rest_components.begin(), view.rest_components.end(),
                             [&](std::uint64_t m) { return (m >> r) & 1U; });
      if (it == view.rest_components.end())
        view.rest_components.push_back(bit(v) | bit(r));
      else
        *it |= bit(v);
    }
    return view;
  };

  auto index_of = [](const std::vector<std::uint64_t>& comps, int v) {
    for (std::size_t i = 0; i < comps.size(); ++i)
      if ((comps[i] >> v) & 1U) return i;
    return comps.size();
  };

  auto connectable = [&](const std::vector<std::uint64_t>& comps, std::size_t from) {
    std::vector<std::uint64_t> c = comps;
    for (std::size_t i = from; i < candidates_.size() && c.size() > 1; ++i) {
      const Edge& ed = h_.edge(candidates_[i]);
      const std::size_t a = index_of(c, ed.u), b = index_of(c, ed.v);
      if (a == b) continue;
      c[std::min(a, b)] |= c[std::max(a, b)];
      c.erase(c.begin() + static_cast<long>(std::max(a, b)));
    }
    return c.size() == 1;
  };

  auto rec = [&](auto&& self, std::size_t i, const std::vector<std::uint64_t>& comps) -> bool {
    if (comps.size() == 1) return visit(tree, view_of());
    if (i == candidates_.size() || !connectable(comps, i)) return false;
    const EdgeId e = candidates_[i];
    const Edge& ed = h_.edge(e);
    const std::size_t a = index_of(comps, ed.u), b = index_of(comps, ed.v);
    if (a != b) {
      std::vector<std::uint64_t> merged = comps;
      merged[std::min(a, b)] |= merged[std::max(a, b)];
      merged.erase(merged.begin() + static_cast<long>(std::max(a, b)));
      tree.push_back(e);
      in_tree[e] = true;
      const bool stop = self(self, i + 1, merged);
      in_tree[e] = false;
      tree.pop_back();
      if (stop) return true;
    }
    return self(self, i + 1, comps);
  };
  rec(rec, 0, start);
}

bool ParitySearch::reachable(const TreeView& view, VertexSet odd) const {
  const std::uint64_t d = (odd ^ view.odd).bits();
  for (std::uint64_t c : view.rest_components)
    if (std::popcount(d & c) % 2 != 0) return false;
  return true;
}

EdgeSet ParitySearch::witness(const std::vector<EdgeId>& tree, VertexSet odd) const {
  EdgeSet s = forced_;
  std::vector<bool> in_tree(h_.size(), false);
  for (EdgeId e : tree) s.insert(e), in_tree[e] = true;
  std::uint64_t need = odd.bits();
  for (EdgeId e : s.members()) need ^= bit(h_.edge(e).u) ^ bit(h_.edge(e).v);

  // Spanning forest of the leftover edges, then peel leaves towards roots.
  std::vector<std::vector<EdgeId>> incident(h_.order());
  for (EdgeId e : inside_)
    if (!forced_.contains(e) && !in_tree[e]) {
      incident[h_.edge(e).u].push_back(e);
      incident[h_.edge(e).v].push_back(e);
    }
  std::vector<EdgeId> parent_edge(h_.order(), -1);
  std::vector<int> order;
  std::uint64_t seen = 0;
  for (int root : within_.members()) {
    if (seen & bit(root)) continue;
    seen |= bit(root);
    std::size_t head = order.size();
    order.push_back(root);
    while (head < order.size()) {
      const int v = order[head++];
      for (EdgeId e : incident[v]) {
        const int w = h_.edge(e).other(v);
        if (seen & bit(w)) continue;
        seen |= bit(w);
        parent_edge[w] = e;
        order.push_back(w);
      }
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    if (!((need >> v) & 1U) || parent_edge[v] < 0) continue;
    const EdgeId e = parent_edge[v];
    s.insert(e);
    need ^= bit(v) ^ bit(h_.edge(e).other(v));
  }
  return s;
}

std::optional<EdgeSet> ParitySearch::find(VertexSet odd) const {
  if (odd.size() % 2 != 0 || (odd - within_) != VertexSet()) return std::nullopt;
  std::optional<EdgeSet> out;
  for_each_tree([&](const std::vector<EdgeId>& tree, const TreeView& view) {
    if (!reachable(view, odd)) return false;
    out = witness(tree, odd);
    return true;
  });
  return out;
}

std::optional<VertexSet> ParitySearch::first_unreachable() const {
  const std::vector<int> members = within_.members();
  const int k = static_cast<int>(members.size());
  std::vector<std::uint64_t> open;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << k); ++c) {
    if (std::popcount(c) % 2 != 0) continue;
    std::uint64_t r = 0;
    for (int i = 0; i < k; ++i)
      if ((c >> i) & 1U) r |= bit(members[i]);
    open.push_back(r);
  }
  std::sort(open.begin(), open.end());
  for_each_tree([&](const std::vector<EdgeId>&, const TreeView& view) {
    if (view.rest_components.size() == 1) {
      open.clear();
      return true;
    }
    std::erase_if(open, [&](std::uint64_t r) { return reachable(view, VertexSet(r)); });
    return open.empty();
  });
  if (open.empty()) return std::nullopt;
  return VertexSet(open.front());
}

bool ParitySearch::all_even_sets_reachable() const { return !first_unreachable().has_value(); }

std::optional<EdgeSet> spanning_connected_with_odd_set(const Multigraph& h, VertexSet odd) {
  if (h.order() == 0) return std::nullopt;
  return ParitySearch(h, h.vertices()).find(odd);
}

bool is_collapsible(const Multigraph& h, const TrailLimits& limits) {
  if (h.order() > limits.max_collapsible_order) throw CapExceeded("is_collapsible: order above cap");
  if (h.size() > limits.max_trail_edges) throw CapExceeded("is_collapsible: edge count above cap");
  if (!is_connected(h)) return false;
  return ParitySearch(h, h.vertices()).all_even_sets_reachable();
}

bool is_collapsible(const SimpleGraph& h, const TrailLimits& limits) {
  return is_collapsible(Multigraph::from_simple(h), limits);
}

// ---------------------------------------------------------------------------
// Closed trails

namespace {

// Calls visit(mask) for every superset of `base` inside `universe` with
// exactly `extra` additional vertices, in increasing mask order.
template <class Visit>
bool for_each_extension(std::uint64_t base, std::uint64_t universe, int extra, Visit&& visit) {
  std::vector<int> free;
  for (std::uint64_t s = universe & ~base; s != 0; s &= s - 1) free.push_back(std::countr_zero(s));
  const int f = static_cast<int>(free.size());
  if (extra < 0 || extra > f) return false;
  if (extra == 0) return visit(base);
  std::uint64_t c = (std::uint64_t{1} << extra) - 1;
  const std::uint64_t limit = std::uint64_t{1} << f;
  while (c < limit) {
    std::uint64_t m = base;
    for (std::uint64_t s = c; s != 0; s &= s - 1) m |= bit(free[std::countr_zero(s)]);
    if (visit(m)) return true;
    const std::uint64_t low = c & (~c + 1);
    const std::uint64_t ripple = c + low;
    c = (((ripple ^ c) >> 2) / low) | ripple;
  }
  return false;
}

}  // namespace

std::optional<Trail> closed_trail_exists(const Multigraph& h, VertexSet required_vertices,
                                         const EdgeSet& required_edges, TrailMode mode, const TrailLimits& limits) {
  const int n = h.order();
  if (n == 0 || !is_connected(h)) throw InvalidInput("closed_trail_exists: graph must be connected");
  if (n > limits.max_trail_order) throw CapExceeded("closed_trail_exists: order above cap");
  if (h.size() > limits.max_trail_edges) throw CapExceeded("closed_trail_exists: edge count above cap");
  if ((required_vertices - h.vertices()) != VertexSet())
    throw InvalidInput("closed_trail_exists: required vertex out of range");
  EdgeSet required(static_cast<std::size_t>(h.size()));
  if (required_edges.universe() != 0) {
    if (required_edges.universe() != static_cast<std::size_t>(h.size()))
      throw InvalidInput("closed_trail_exists: required edges on another carrier");
    required = required_edges;
  }

  const std::uint64_t all = h.vertices().bits();
  std::uint64_t mandatory = (required_vertices | endpoints(h, required)).bits();
  if (mode == TrailMode::kSpanning) mandatory = all;

  std::optional<Trail> found;
  auto try_set = [&](std::uint64_t x) {
    if (mode == TrailMode::kDominating) {
      for (std::uint64_t s = all & ~x; s != 0; s &= s - 1)
        if (h.neighbors(std::countr_zero(s)) & ~x) return false;
    }
    if (std::popcount(x) == 1) {
      if (!required.empty()) return false;
      found = Trail{{std::countr_zero(x)}, {}};
      return true;
    }
    for (std::uint64_t s = x; s != 0; s &= s - 1)
      if (degree_within(h, std::countr_zero(s), x) < 2) return false;
    if (!is_connected_within(h, VertexSet(x))) return false;
    auto edges = ParitySearch(h, VertexSet(x), &required).find(VertexSet());
    if (!edges) return false;
    found = euler_circuit(h, *edges, std::countr_zero(x));
    return true;
  };

  const int base = std::max(1, std::popcount(mandatory));
  for (int k = base; k <= n; ++k)
    if (for_each_extension(mandatory, all, k - std::popcount(mandatory), try_set)) break;
  return found;
}

std::optional<Trail> has_dct(const Multigraph& h, const TrailLimits& limits) {
  return closed_trail_exists(h, VertexSet(), EdgeSet(), TrailMode::kDominating, limits);
}

std::optional<Trail> has_dct(const SimpleGraph& h, const TrailLimits& limits) {
  return has_dct(Multigraph::from_simple(h), limits);
}

std::optional<Trail> spanning_closed_trail(const Multigraph& h, const TrailLimits& limits) {
  return closed_trail_exists(h, VertexSet(), EdgeSet(), TrailMode::kSpanning, limits);
}

bool lai_hypothesis(const Multigraph& h) {
  if (!is_2_connected(h)) return false;
  for (int v = 0; v < h.order(); ++v)
    if (h.degree(v) < 3) return false;
  for (const Edge& e : h.edges()) {
    const int u = e.u, v = e.v;
    if (h.multiplicity(u, v) >= 2) continue;
    if (h.neighbors(u) & h.neighbors(v)) continue;
    bool square = false;
    for (std::uint64_t s = h.neighbors(u) & ~bit(v); s != 0 && !square; s &= s - 1) {
      const int a = std::countr_zero(s);
      if (h.neighbors(a) & h.neighbors(v) & ~bit(u) & ~bit(a)) square = true;
    }
    if (!square) return false;
  }
  return true;
}

bool lai_hypothesis(const SimpleGraph& h) { return lai_hypothesis(Multigraph::from_simple(h)); }

// ---------------------------------------------------------------------------
// Lifting

Lifter::Lifter(const Multigraph& h, VertexSet f, const TrailLimits& limits)
    : h_(h), f_(f), contraction_(contract(h, f)), parity_(h, f), collapsible_(false) {
  if (f.size() > limits.max_collapsible_order) throw CapExceeded("Lifter: contracted set above cap");
  collapsible_ = parity_.all_even_sets_reachable();
}

Trail Lifter::lift(const Trail& t) {
  const Multigraph& q = contraction_.quotient;
  if (!is_closed_trail(q, t)) throw LiftError(LiftError::Kind::kInvalidTrail, "lift: not a closed trail of H/F");
  if (std::find(t.vertices.begin(), t.vertices.end(), contraction_.contracted_vertex) == t.vertices.end())
    throw LiftError(LiftError::Kind::kMissingContractedVertex, "lift: trail misses the contracted vertex");
  if (!collapsible_) throw LiftError(LiftError::Kind::kNotCollapsible, "lift: H[F] is not collapsible");

  EdgeSet edges(static_cast<std::size_t>(h_.size()));
  std::uint64_t odd = 0;
  for (EdgeId e : t.edges) {
    const EdgeId orig = contraction_.edge_origin[e];
    edges.insert(orig);
    const Edge& ed = h_.edge(orig);
    if (f_.contains(ed.u)) odd ^= bit(ed.u);
    if (f_.contains(ed.v)) odd ^= bit(ed.v);
  }
  auto it = memo_.find(odd);
  if (it == memo_.end()) it = memo_.emplace(odd, parity_.find(VertexSet(odd))).first;
  if (!it->second)
    throw LiftError(LiftError::Kind::kParityWitnessMissing, "lift: no parity witness inside F");
  for (EdgeId e : it->second->members()) edges.insert(e);
  return euler_circuit(h_, edges, f_.front());
}

Trail lift_dct(const Multigraph& h, VertexSet f, const Trail& t) {
  Lifter lifter(h, f);
  return lifter.lift(t);
}

}  // namespace clawham
