#pragma once

#include <string>

#include "gca/graph.hpp"

namespace gca {

// Head-flags v.  Idempotent: flagging twice equals flagging once.
PresentedGraph add_head(const PresentedGraph& g, const std::string& v);

// Heads on every base vertex.  The result has no sources, every vertex is
// left infinite, and the result is always stable.
PresentedGraph stabilize_graph(const PresentedGraph& g);

// Heads on exactly the base vertices that are left finite in g (computed
// against the input in one pass, not iteratively).  Every vertex of the
// result is left infinite, hence the result is stable.
PresentedGraph stabilize_minimal(const PresentedGraph& g);

}  // namespace gca
