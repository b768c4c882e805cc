#pragma once

#include <array>
#include <string>
#include <vector>

#include "clawham/graph.hpp"
#include "clawham/parallel.hpp"

namespace clawham {

inline constexpr int kMaxEnumerationOrder = 12;

/// Family of simple graphs on n_min..n_max vertices. Triangle-free,
/// claw-free and max_edges are hereditary and prune the augmentation tree;
/// the remaining flags filter finished graphs.
struct FamilySpec {
  int n_min = 1;
  int n_max = 1;
  bool connected = false;
  bool two_connected = false;
  bool triangle_free = false;
  bool claw_free = false;
  bool essentially_2_edge_connected = false;
  int min_degree = 0;
  int max_edges = -1;  ///< negative: unbounded

  static FamilySpec exactly(int n) {
    FamilySpec s;
    s.n_min = s.n_max = n;
    return s;
  }
  bool accepts(const SimpleGraph& g) const;
  std::string describe() const;
};

/// One representative per isomorphism class, canonically labelled, ordered by
/// order, then by parent and neighbourhood mask of the added vertex. The
/// output does not depend on the policy. Throws CapExceeded above
/// kMaxEnumerationOrder.
std::vector<SimpleGraph> enumerate(const FamilySpec& spec, ExecutionPolicy policy = ExecutionPolicy::kParallel);

/// Pattern instance on a 5-cycle C = 0 1 2 3 4 with extra vertices w1 = 5,
/// w2 = 6, each joined to two non-adjacent cycle vertices.
struct Lemma5Instance {
  SimpleGraph graph;
  std::array<int, 5> cycle{0, 1, 2, 3, 4};
  int w1 = 5;
  int w2 = 6;
  bool w1w2 = false;
};

/// All instances up to isomorphism of the marked structure.
std::vector<Lemma5Instance> enumerate_lemma5_instances();

/// Marked edge xy with x = 0, y = 1.
struct Lemma6Instance {
  Multigraph graph;
  int x = 0;
  int y = 1;
};

/// Essentially 2-edge-connected multigraphs on 2..max_n vertices with
/// multiplicities <= max_multiplicity, d(x), d(y) >= 2 and at most two edges
/// (with multiplicity) avoiding {x, y}; one per isomorphism class of the
/// graph with {x, y} marked. Requires max_n <= 9, max_multiplicity <= 3.
std::vector<Lemma6Instance> enumerate_lemma6_instances(int max_n, int max_multiplicity = 2);

}  // namespace clawham
