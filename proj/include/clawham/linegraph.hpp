#pragma once

#include <utility>
#include <vector>

#include "clawham/graph.hpp"

namespace clawham {

struct LineGraph {
  SimpleGraph graph;
  /// Vertex i of `graph` is edge i of the source graph, as (u, v) with u < v.
  std::vector<std::pair<int, int>> edge_of_vertex;
};

LineGraph line_graph(const SimpleGraph& h);

/// Edge clique cover of a host graph with every vertex in at most two cliques.
struct KrauszPartition {
  std::vector<VertexSet> cliques;
  /// Host vertex -> indices of the cliques containing it (size 0, 1 or 2).
  std::vector<std::vector<int>> incidence;
};

/// Checks the partition invariants against `host` from scratch.
bool is_valid_krausz_partition(const SimpleGraph& host, const KrauszPartition& partition);

struct RootResult {
  SimpleGraph root;
  /// Host vertex -> edge of the root, as (a, b) with a < b.
  std::vector<std::pair<int, int>> correspondence;
  KrauszPartition certificate;
  /// Number of distinct Krausz partitions with a triangle-free root found.
  int multiplicity = 1;
};

/// Triangle-free root H with L(H) isomorphic to g. Root vertices are the
/// cliques in order, then one pendant per host vertex lying in a single
/// clique. Among several valid partitions the one with the least canonical
/// root is returned.
///
/// Throws InvalidInput (empty or disconnected g), NotALineGraph (claw, or no
/// partition with a triangle-free root) or NotClosed (g != closure(g)).
RootResult root_graph(const SimpleGraph& g);

/// True iff L(h) is isomorphic to g.
bool verify_line_iso(const SimpleGraph& h, const SimpleGraph& g);

}  // namespace clawham
