#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "gca/graph.hpp"
#include "gca/vertex_set.hpp"

namespace gca {

// H is hereditary when everything reachable from a vertex of H stays in H.
bool is_hereditary(const PresentedGraph& g, const VertexSet& h);

// Smallest hereditary superset.
VertexSet hereditary_closure(const PresentedGraph& g, const VertexSet& h);

// H (assumed or not hereditary alike) is saturated when every non-singular
// vertex all of whose targets lie in H lies in H itself.  On head chains this
// forces each portion to be empty or the full chain.
bool is_saturated(const PresentedGraph& g, const VertexSet& h);

// Smallest saturated superset of a hereditary set.  Requires h hereditary.
VertexSet saturate(const PresentedGraph& g, const VertexSet& h);

// Breaking vertices of a saturated hereditary H: infinite emitters outside H
// that send finitely many (and at least one) edges outside H.  Requires H
// hereditary and saturated.
std::set<std::string> breaking_vertices(const PresentedGraph& g,
                                        const VertexSet& h);

// Quotient by an admissible pair (H, S) with H saturated hereditary and
// S a subset of the breaking vertices.  Vertices of H disappear; each w in S
// acquires a primed twin w' (a sink) receiving the edges w sent into H.
// Breaking vertices outside S keep only their finitely many edges missing H,
// so they stop being infinite emitters.
PresentedGraph quotient_graph(const PresentedGraph& g, const VertexSet& h,
                              const std::set<std::string>& s);

// All saturated hereditary subsets, smallest first.  Throws when the base has
// more than max_base_size vertices (the enumeration is exponential).
std::vector<VertexSet> enumerate_saturated_hereditary(
    const PresentedGraph& g, std::size_t max_base_size = 12);

}  // namespace gca
