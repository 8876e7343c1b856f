#pragma once

#include <string>

#include "svc/merge.hpp"

namespace svc {

// Graphviz rendering of the merged ecosystem: institutions are boxes,
// individuals ellipses; node width grows with frequency; parallel edges
// collapse into one arrow whose penwidth is the edge count and whose label
// abbreviates the merged labels (R, S, $, D, P). Deterministic.
std::string to_dot(const EcosystemGraph& graph);

// GraphML rendering preserving the full multigraph (one element per edge).
// Deterministic.
std::string to_graphml(const EcosystemGraph& graph);

} // namespace svc
