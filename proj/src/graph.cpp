#include "clawham/graph.hpp"

#include <algorithm>
#include <string>

#include "clawham/errors.hpp"

namespace clawham {

VertexSet VertexSet::of(std::initializer_list<int> vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) throw InvalidInput("vertex out of range: " + std::to_string(v));
    s.insert(v);
  }
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

void EdgeSet::check(EdgeId e) const {
  if (e < 0 || static_cast<std::size_t>(e) >= universe_)
    throw InvalidInput("edge id " + std::to_string(e) + " outside carrier of size " + std::to_string(universe_));
}

bool EdgeSet::contains(EdgeId e) const {
  check(e);
  return (words_[e / 64] >> (e % 64)) & 1U;
}

void EdgeSet::insert(EdgeId e) {
  check(e);
  words_[e / 64] |= std::uint64_t{1} << (e % 64);
}

void EdgeSet::erase(EdgeId e) {
  check(e);
  words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
}

void EdgeSet::toggle(EdgeId e) {
  check(e);
  words_[e / 64] ^= std::uint64_t{1} << (e % 64);
}

std::size_t EdgeSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

std::vector<EdgeId> EdgeSet::members() const {
  std::vector<EdgeId> out;
  for (std::size_t i = 0; i < words_.size(); ++i)
    for (std::uint64_t b = words_[i]; b != 0; b &= b - 1)
      out.push_back(static_cast<EdgeId>(i * 64 + std::countr_zero(b)));
  return out;
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  if (a.universe() != b.universe()) throw InvalidInput("symmetric_difference: mismatched carriers");
  EdgeSet out = a;
  for (EdgeId e : b.members()) out.toggle(e);
  return out;
}

// ---------------------------------------------------------------------------

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw CapExceeded("graph order " + std::to_string(n) + " exceeds 64");
  rows_.assign(n, 0);
}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

SimpleGraph SimpleGraph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

void SimpleGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
}

int SimpleGraph::size() const noexcept {
  int twice = 0;
  for (auto r : rows_) twice += std::popcount(r);
  return twice / 2;
}

int SimpleGraph::min_degree() const noexcept {
  int best = n_ == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

void SimpleGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidInput("loops are not allowed");
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

void SimpleGraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[u] &= ~(std::uint64_t{1} << v);
  rows_[v] &= ~(std::uint64_t{1} << u);
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (std::uint64_t b = u + 1 < 64 ? rows_[u] >> (u + 1) << (u + 1) : 0; b != 0; b &= b - 1)
      out.emplace_back(u, std::countr_zero(b));
  return out;
}

SimpleGraph SimpleGraph::induced(VertexSet keep) const {
  auto members = (keep & vertices()).members();
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = static_cast<int>(i);
  SimpleGraph h(static_cast<int>(members.size()));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (adjacent(members[i], members[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

SimpleGraph SimpleGraph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InvalidInput("relabeled: permutation size mismatch");
  SimpleGraph h(n_);
  for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

SimpleGraph SimpleGraph::complement() const {
  SimpleGraph h(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) h.add_edge(u, v);
  return h;
}

// ---------------------------------------------------------------------------

Multigraph::Multigraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw CapExceeded("graph order " + std::to_string(n) + " exceeds 64");
  mult_.assign(static_cast<std::size_t>(n) * n, 0);
  nbr_.assign(n, 0);
  pair_first_.assign(static_cast<std::size_t>(n) * n, -1);
}

Multigraph Multigraph::from_matrix(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  Multigraph g(n);
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(adj[u].size()) != n) throw InvalidInput("adjacency matrix is not square");
    if (adj[u][u] != 0) throw InvalidInput("loops are not allowed");
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (adj[u][v] != adj[v][u]) throw InvalidInput("adjacency matrix is not symmetric");
      if (adj[u][v] < 0 || adj[u][v] > 255) throw InvalidInput("multiplicity out of range");
    }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const int m = adj[u][v];
      g.mult_[u * n + v] = g.mult_[v * n + u] = static_cast<std::uint8_t>(m);
      if (m > 0) {
        g.nbr_[u] |= std::uint64_t{1} << v;
        g.nbr_[v] |= std::uint64_t{1} << u;
      }
    }
  g.rebuild_edges();
  return g;
}

Multigraph Multigraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Multigraph g(n);
  for (auto [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw InvalidInput("loops are not allowed");
    ++g.mult_[u * n + v];
    ++g.mult_[v * n + u];
    g.nbr_[u] |= std::uint64_t{1} << v;
    g.nbr_[v] |= std::uint64_t{1} << u;
  }
  g.rebuild_edges();
  return g;
}

Multigraph Multigraph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Multigraph Multigraph::from_simple(const SimpleGraph& g) {
  auto e = g.edges();
  return from_edges(g.order(), e);
}

void Multigraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
}

void Multigraph::add_edge(int u, int v, int count) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidInput("loops are not allowed");
  const int m = mult_[u * n_ + v] + count;
  if (m < 0 || m > 255) throw InvalidInput("multiplicity out of range");
  mult_[u * n_ + v] = mult_[v * n_ + u] = static_cast<std::uint8_t>(m);
  if (m > 0) {
    nbr_[u] |= std::uint64_t{1} << v;
    nbr_[v] |= std::uint64_t{1} << u;
  } else {
    nbr_[u] &= ~(std::uint64_t{1} << v);
    nbr_[v] &= ~(std::uint64_t{1} << u);
  }
  rebuild_edges();
}

void Multigraph::rebuild_edges() {
  edges_.clear();
  std::fill(pair_first_.begin(), pair_first_.end(), -1);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v) {
      const int m = mult_[u * n_ + v];
      if (m == 0) continue;
      pair_first_[u * n_ + v] = pair_first_[v * n_ + u] = static_cast<EdgeId>(edges_.size());
      for (int s = 0; s < m; ++s) edges_.push_back(Edge{u, v, s});
    }
}

int Multigraph::degree(int v) const noexcept {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += mult_[v * n_ + u];
  return d;
}

const Edge& Multigraph::edge(EdgeId e) const {
  if (e < 0 || e >= size()) throw InvalidInput("invalid edge id " + std::to_string(e));
  return edges_[e];
}

std::vector<EdgeId> Multigraph::incident(int v) const {
  check_vertex(v);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < size(); ++e)
    if (edges_[e].u == v || edges_[e].v == v) out.push_back(e);
  return out;
}

EdgeId Multigraph::first_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return pair_first_[u * n_ + v];
}

bool Multigraph::is_simple() const noexcept {
  for (auto m : mult_)
    if (m > 1) return false;
  return true;
}

SimpleGraph Multigraph::to_simple() const {
  if (!is_simple()) throw InvalidInput("multigraph has parallel edges");
  return underlying_simple();
}

SimpleGraph Multigraph::underlying_simple() const {
  SimpleGraph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (mult_[u * n_ + v] > 0) g.add_edge(u, v);
  return g;
}

int Multigraph::edges_avoiding(VertexSet removed) const {
  int count = 0;
  for (const auto& e : edges_)
    if (!removed.contains(e.u) && !removed.contains(e.v)) ++count;
  return count;
}

Multigraph Multigraph::induced(VertexSet keep) const {
  auto members = (keep & vertices()).members();
  const int k = static_cast<int>(members.size());
  Multigraph h(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const int m = multiplicity(members[i], members[j]);
      h.mult_[i * k + j] = h.mult_[j * k + i] = static_cast<std::uint8_t>(m);
      if (m > 0) {
        h.nbr_[i] |= std::uint64_t{1} << j;
        h.nbr_[j] |= std::uint64_t{1} << i;
      }
    }
  h.rebuild_edges();
  return h;
}

VertexSet endpoints(const Multigraph& g, const EdgeSet& edges) {
  VertexSet s;
  for (EdgeId e : edges.members()) {
    s.insert(g.edge(e).u);
    s.insert(g.edge(e).v);
  }
  return s;
}

}  // namespace clawham
