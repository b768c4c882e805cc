#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "clawham/graph.hpp"

namespace clawham {

/// Induced K_{1,3}; leaves sorted ascending.
struct ClawOccurrence {
  int center = 0;
  std::array<int, 3> leaves{};
  friend bool operator==(const ClawOccurrence&, const ClawOccurrence&) = default;
};

/// Induced net: triangle (x1, x2, x3) with pendant y_i at x_i. Legs sorted by
/// triangle vertex.
struct NetOccurrence {
  std::array<int, 3> triangle{};
  std::array<int, 3> ends{};
  friend bool operator==(const NetOccurrence&, const NetOccurrence&) = default;
};

/// Induced subdivided claw: hub, spokes R_i adjacent to the hub, tips R_i+
/// adjacent to R_i. Legs sorted by spoke.
struct SubdividedClawOccurrence {
  int hub = 0;
  std::array<int, 3> spokes{};
  std::array<int, 3> tips{};
  friend bool operator==(const SubdividedClawOccurrence&, const SubdividedClawOccurrence&) = default;
};

std::vector<ClawOccurrence> find_claws(const SimpleGraph& g);
bool is_claw_free(const SimpleGraph& g);

std::vector<NetOccurrence> find_nets(const SimpleGraph& g);

/// Every endvertex y of every induced net satisfies 3 deg(y) >= n - 2.
bool net_condition_holds(const SimpleGraph& g);

/// Neighbourhood of v induces a connected, non-complete graph.
bool is_closure_eligible(const SimpleGraph& g, int v);

/// Fixpoint of completing eligible neighbourhoods, lowest index first.
/// Throws InvalidInput when g has an induced claw.
SimpleGraph closure(const SimpleGraph& g);

/// Same fixpoint with the eligible vertex drawn at random at every step.
SimpleGraph closure_with_random_schedule(const SimpleGraph& g, std::uint64_t seed);

/// Requires a triangle-free simple graph (InvalidInput otherwise).
std::vector<SubdividedClawOccurrence> find_subdivided_claws(const SimpleGraph& h);

/// Edge e is heavy iff ed(e) >= (|E| - 2)/3 + slack, compared as
/// 3 ed(e) >= |E| - 2 + 3 slack. Edge ids follow SimpleGraph::edges().
EdgeSet heavy_edges(const SimpleGraph& h, int slack = 0);

/// k pairwise disjoint heavy edges (edge ids), by exact search.
std::optional<std::vector<EdgeId>> find_heavy_matching(const SimpleGraph& h, int k, int slack = 0);

}  // namespace clawham
