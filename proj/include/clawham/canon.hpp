#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "clawham/graph.hpp"

namespace clawham {

/// Exact canonical labelling is available up to this order.
inline constexpr int kMaxCanonicalOrder = 16;

struct CanonicalLabeling {
  std::vector<int> order;     ///< canonical position -> original vertex
  std::vector<int> position;  ///< original vertex -> canonical position
};

/// Individualisation-refinement search with automorphism pruning. The result
/// is the labelling whose relabelled adjacency code is lexicographically
/// least. Throws CapExceeded above kMaxCanonicalOrder.
CanonicalLabeling canonical_labeling(const SimpleGraph& g);

/// Multiplicity-aware variant. `colors` (optional, one per vertex) is an
/// ordered vertex colouring that isomorphisms must preserve.
CanonicalLabeling canonical_labeling(const Multigraph& g, std::span<const int> colors = {});

/// graph6 string of the canonically relabelled graph.
std::string canonical_form(const SimpleGraph& g);

/// Byte string: order, colour sequence, upper-triangle multiplicities.
std::string canonical_form(const Multigraph& g, std::span<const int> colors = {});

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);
bool are_isomorphic(const Multigraph& a, const Multigraph& b);

/// Isomorphism-invariant hash for any order <= 64. Equal graphs hash
/// equally; unequal hashes prove non-isomorphism. Pre-filter only.
std::uint64_t invariant_hash(const SimpleGraph& g);

}  // namespace clawham
