#pragma once

#include <vector>

#include "clawham/graph.hpp"

namespace clawham {

// Connectivity. Graphs on 0 vertices count as disconnected.

bool is_connected(const SimpleGraph& g);
bool is_connected(const Multigraph& g);
/// Connectivity of the subgraph induced by `within`.
bool is_connected_within(const SimpleGraph& g, VertexSet within);
bool is_connected_within(const Multigraph& g, VertexSet within);

/// Requires n >= 3 and no cutvertex.
bool is_2_connected(const SimpleGraph& g);
bool is_2_connected(const Multigraph& g);
bool is_2_edge_connected(const SimpleGraph& g);
bool is_2_edge_connected(const Multigraph& g);

/// Edge ids whose removal disconnects g. A parallel copy is never a bridge.
std::vector<EdgeId> bridges(const Multigraph& g);

/// No bridge leaves an edge on both sides; equivalently every bridge has an
/// endpoint of degree one. Throws InvalidInput on a disconnected graph.
bool is_essentially_2_edge_connected(const Multigraph& g);
bool is_essentially_2_edge_connected(const SimpleGraph& g);

bool is_triangle_free(const SimpleGraph& g);
bool is_triangle_free(const Multigraph& g);
int count_triangles(const SimpleGraph& g);

/// Number of edges other than e that share an endpoint with e, parallel
/// copies included: d(u) + d(v) - mult(u, v) - 1.
int edge_degree(const Multigraph& g, EdgeId e);
int edge_degree(const SimpleGraph& g, int u, int v);

struct ContractionResult {
  Multigraph quotient;
  std::vector<int> vertex_map;      ///< original vertex -> quotient vertex
  int contracted_vertex = -1;       ///< v_F
  std::vector<EdgeId> edge_origin;  ///< quotient edge -> original edge
};

/// Deletes the edges inside F and identifies F to one vertex, keeping
/// parallel edges. v_F takes the position of min(F); the other vertices keep
/// their relative order. Throws InvalidInput if F is empty, out of range or
/// induces a disconnected subgraph.
ContractionResult contract(const Multigraph& g, VertexSet f);

}  // namespace clawham
