#pragma once

#include <json.hpp>
#include <vector>

#include "clawham/clawfree.hpp"
#include "clawham/enumeration.hpp"
#include "clawham/graph.hpp"
#include "clawham/linegraph.hpp"
#include "clawham/trails.hpp"
#include "clawham/verify.hpp"

namespace clawham {

/// {"n": int, "adj": [[int]]}
nlohmann::json to_json(const Multigraph& g);
/// Validates shape, symmetry, zero diagonal and entry range; InvalidInput otherwise.
Multigraph multigraph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Trail& t);
nlohmann::json to_json(const std::vector<ClawOccurrence>& claws);
nlohmann::json to_json(const std::vector<NetOccurrence>& nets);
nlohmann::json to_json(const std::vector<SubdividedClawOccurrence>& claws);
/// {"root": graph6, "cliques": [[v...]], "correspondence": [[a, b]...], "multiplicity": k}
nlohmann::json to_json(const RootResult& r);

/// Keys: n or n_min/n_max, connected, two_connected, triangle_free,
/// claw_free, essentially_2_edge_connected, min_degree, max_edges.
FamilySpec family_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FamilySpec& spec);

/// The elapsed field is left out unless include_timing is set, so reports
/// of repeated runs compare byte for byte.
nlohmann::json to_json(const CheckResult& r, bool include_timing = true);

}  // namespace clawham
