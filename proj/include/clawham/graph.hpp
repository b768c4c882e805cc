#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace clawham {

inline constexpr int kMaxVertices = 64;

using EdgeId = int;

/// Bitmask over the vertices 0..63 of some carrier graph.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<int> vertices);
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) noexcept { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) noexcept { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int front() const noexcept { return std::countr_zero(bits_); }
  std::vector<int> members() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Bitmask over the edge ids 0..universe-1 of some carrier graph.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }
  bool contains(EdgeId e) const;
  void insert(EdgeId e);
  void erase(EdgeId e);
  void toggle(EdgeId e);
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }
  std::vector<EdgeId> members() const;

  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

 private:
  void check(EdgeId e) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Throws InvalidInput if the two sets live on different carriers.
EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b);

/// Loop-free simple graph on at most 64 vertices, stored as bitset rows.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n);
  static SimpleGraph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static SimpleGraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept;

  bool adjacent(int u, int v) const noexcept { return (rows_[u] >> v) & 1U; }
  std::uint64_t neighbors(int v) const noexcept { return rows_[v]; }
  int degree(int v) const noexcept { return std::popcount(rows_[v]); }
  int min_degree() const noexcept;
  VertexSet vertices() const noexcept { return VertexSet::range(n_); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// Edges (u, v) with u < v in lexicographic order; index = EdgeId.
  std::vector<std::pair<int, int>> edges() const;

  /// Subgraph induced by `keep`, relabelled 0..|keep|-1 in increasing order.
  SimpleGraph induced(VertexSet keep) const;
  /// `perm[old] = new`.
  SimpleGraph relabeled(std::span<const int> perm) const;
  SimpleGraph complement() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// One parallel copy of an edge; `slot` numbers the copies of the pair (u, v).
struct Edge {
  int u = 0;
  int v = 0;
  int slot = 0;

  int other(int w) const noexcept { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Loop-free multigraph with a symmetric multiplicity matrix.
///
/// Edge ids enumerate the pairs u < v lexicographically and, within a pair,
/// the parallel copies by slot. Any mutation renumbers edges.
class Multigraph {
 public:
  Multigraph() = default;
  explicit Multigraph(int n);
  static Multigraph from_matrix(const std::vector<std::vector<int>>& adj);
  static Multigraph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Multigraph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
  static Multigraph from_simple(const SimpleGraph& g);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  int multiplicity(int u, int v) const noexcept { return mult_[u * n_ + v]; }
  int degree(int v) const noexcept;
  std::uint64_t neighbors(int v) const noexcept { return nbr_[v]; }
  VertexSet vertices() const noexcept { return VertexSet::range(n_); }

  void add_edge(int u, int v, int count = 1);

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const;
  /// Edge ids incident to v, ascending.
  std::vector<EdgeId> incident(int v) const;
  /// Edge id of the first copy of (u, v), or -1.
  EdgeId first_edge(int u, int v) const;

  bool is_simple() const noexcept;
  /// Throws InvalidInput when some multiplicity exceeds one.
  SimpleGraph to_simple() const;
  SimpleGraph underlying_simple() const;
  /// Edges with both endpoints outside `removed`.
  int edges_avoiding(VertexSet removed) const;
  Multigraph induced(VertexSet keep) const;

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.mult_ == b.mult_;
  }

 private:
  void rebuild_edges();
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint8_t> mult_;
  std::vector<std::uint64_t> nbr_;
  std::vector<Edge> edges_;
  std::vector<EdgeId> pair_first_;  // n*n, first edge id of pair or -1
};

/// Vertex mask of the endpoints of the edges in `edges`.
VertexSet endpoints(const Multigraph& g, const EdgeSet& edges);

}  // namespace clawham
