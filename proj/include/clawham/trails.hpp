#pragma once

#include <map>
#include <optional>
#include <vector>

#include "clawham/graph.hpp"
#include "clawham/graph_ops.hpp"

namespace clawham {

/// Closed trail v0 e1 v1 ... ek vk with vk = v0. The trivial trail has one
/// vertex and no edges.
struct Trail {
  std::vector<int> vertices;
  std::vector<EdgeId> edges;

  bool trivial() const noexcept { return edges.empty(); }
  VertexSet vertex_set() const;
  EdgeSet edge_set(const Multigraph& g) const;
  friend bool operator==(const Trail&, const Trail&) = default;
};

/// Alternation, edge distinctness and closure, checked against g.
bool is_closed_trail(const Multigraph& g, const Trail& t);
/// Every edge of g has an endpoint on t.
bool dominates(const Multigraph& g, const Trail& t);

/// Euler circuit of the connected even edge set `edges`, started at the
/// smallest vertex it touches (or at `start` when `edges` is empty).
Trail euler_circuit(const Multigraph& g, const EdgeSet& edges, int start);

/// Search limits. Exceeding any of them raises CapExceeded.
struct TrailLimits {
  int max_hamilton_order = 24;
  int max_trail_order = 20;
  int max_trail_edges = 40;
  int max_collapsible_order = 16;
};

/// Hamiltonian cycle as a vertex order (the closing edge is implied), or
/// nullopt. Requires n >= 3.
enum class HamiltonMethod { kAuto, kSearch, kSubsetDp };
std::optional<std::vector<int>> hamiltonian_cycle(const SimpleGraph& g, HamiltonMethod method = HamiltonMethod::kAuto,
                                                  const TrailLimits& limits = {});
inline bool is_hamiltonian(const SimpleGraph& g) { return hamiltonian_cycle(g).has_value(); }

/// Spanning connected subgraphs of h[within] that contain `forced`, indexed
/// by their odd-degree vertex set.
///
/// Every such subgraph is a spanning tree T of h[within] plus a set A of
/// other edges. For fixed T the reachable odd sets are those R for which
/// R + odd(T) has even intersection with every component of the graph left
/// after removing T. The search enumerates spanning trees only.
class ParitySearch {
 public:
  ParitySearch(const Multigraph& h, VertexSet within, const EdgeSet* forced = nullptr);

  /// Witness with odd-degree set exactly `odd`, or nullopt.
  std::optional<EdgeSet> find(VertexSet odd) const;
  /// Every even subset of `within` is reachable.
  bool all_even_sets_reachable() const;
  /// Smallest unreachable even set in mask order, if any.
  std::optional<VertexSet> first_unreachable() const;

 private:
  struct TreeView {
    VertexSet odd;  // odd(forced) + odd(T)
    std::vector<std::uint64_t> rest_components;
  };
  template <class Visit>
  void for_each_tree(Visit&& visit) const;
  bool reachable(const TreeView& view, VertexSet odd) const;
  EdgeSet witness(const std::vector<EdgeId>& tree, VertexSet odd) const;

  const Multigraph& h_;
  VertexSet within_;
  EdgeSet forced_;
  std::vector<EdgeId> inside_;      // edges of h[within]
  std::vector<EdgeId> candidates_;  // one edge per vertex pair joining two forced components
  std::vector<int> forced_root_;    // forced component representative per vertex
};

/// Spanning connected subgraph of h with odd-degree set `odd`.
std::optional<EdgeSet> spanning_connected_with_odd_set(const Multigraph& h, VertexSet odd);

bool is_collapsible(const Multigraph& h, const TrailLimits& limits = {});
bool is_collapsible(const SimpleGraph& h, const TrailLimits& limits = {});

enum class TrailMode { kSpanning, kDominating, kNone };

/// Closed trail through `required_vertices` using all `required_edges`, per
/// mode. Candidate vertex sets are tried by size, then by mask. Throws
/// InvalidInput on a disconnected graph, CapExceeded past the limits.
std::optional<Trail> closed_trail_exists(const Multigraph& h, VertexSet required_vertices,
                                         const EdgeSet& required_edges, TrailMode mode,
                                         const TrailLimits& limits = {});

std::optional<Trail> has_dct(const Multigraph& h, const TrailLimits& limits = {});
std::optional<Trail> has_dct(const SimpleGraph& h, const TrailLimits& limits = {});
std::optional<Trail> spanning_closed_trail(const Multigraph& h, const TrailLimits& limits = {});

/// 2-connected, minimum degree >= 3, every edge on a cycle of length <= 4
/// (a parallel pair counts as a 2-cycle).
bool lai_hypothesis(const Multigraph& h);
bool lai_hypothesis(const SimpleGraph& h);

/// Lifts closed trails of h/F back to h. Parity witnesses inside h[F] are
/// memoised per odd set.
class Lifter {
 public:
  Lifter(const Multigraph& h, VertexSet f, const TrailLimits& limits = {});

  const ContractionResult& contraction() const noexcept { return contraction_; }
  bool collapsible() const noexcept { return collapsible_; }

  /// Closed trail of h through all of F using the preimages of t's edges.
  /// Dominates h whenever t dominates the quotient.
  Trail lift(const Trail& t);

 private:
  const Multigraph& h_;
  VertexSet f_;
  ContractionResult contraction_;
  ParitySearch parity_;
  bool collapsible_;
  std::map<std::uint64_t, std::optional<EdgeSet>> memo_;
};

Trail lift_dct(const Multigraph& h, VertexSet f, const Trail& t);

}  // namespace clawham
