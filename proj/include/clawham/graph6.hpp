#pragma once

#include <string>
#include <string_view>

#include "clawham/graph.hpp"

namespace clawham {

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and trailing
/// whitespace are accepted. Throws Graph6Error with a distinct kind for a
/// malformed size header, a truncated bit vector, a byte outside 63..126,
/// an order above 64, and surplus bytes.
SimpleGraph parse_graph6(std::string_view text);

/// Encodes without header or newline.
std::string write_graph6(const SimpleGraph& g);

}  // namespace clawham
