#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gca/graph.hpp"
#include "gca/rational.hpp"
#include "gca/vertex_set.hpp"

namespace gca {

// A graph trace is determined by its values on base vertices: each chain
// vertex emits exactly one edge, so its value equals the attach value.
struct GraphTrace {
  std::map<std::string, Rational> values;

  const Rational& at(const std::string& v) const;
  bool operator==(const GraphTrace&) const = default;
};

struct TraceNorm {
  bool infinite = false;
  Rational value;  // meaningful when finite

  static TraceNorm inf() { return TraceNorm{true, Rational(0)}; }
  static TraceNorm of(Rational v) { return TraceNorm{false, std::move(v)}; }
  bool operator==(const TraceNorm&) const = default;
};

// One step of the forcing chain pinning a vertex to zero.
struct ZeroForcingStep {
  std::string vertex;
  std::string rule;    // short machine-readable tag
  std::string reason;  // human-readable justification
};

struct TraceVerdict {
  bool nonzero = false;
  GraphTrace witness;                      // norm exactly 1 when nonzero
  std::vector<ZeroForcingStep> certificate;  // covers the base when not
};

// Checks both trace conditions: exact balance at non-singular vertices, and
// for infinite emitters the forced zeros on OMEGA targets plus the residual
// inequality over the finite-multiplicity targets.  Boundedness is not
// checked here.
bool is_graph_trace(const PresentedGraph& g, const GraphTrace& t);

// Sum over all vertices; infinite as soon as a head-flagged vertex carries a
// positive value (its chain repeats that value forever).
TraceNorm trace_norm(const PresentedGraph& g, const GraphTrace& t);

// Decides whether a graph trace with finite positive norm exists, by exact
// linear programming over the nonnegative cone.  The NONZERO witness is
// normalized to norm 1; the ONLY_ZERO certificate lists a forcing step for
// every base vertex.
TraceVerdict nonzero_bounded_trace(const PresentedGraph& g);

// Dimension of the solution space of the bounded-trace system: coordinates
// not forced to zero, equalities at non-singular vertices, and one slack per
// surviving infinite emitter.  Zero iff only the zero trace is bounded.
std::size_t trace_space_dimension(const PresentedGraph& g);

// Where t vanishes; head portions are ALL at head-flagged vertices with
// value 0.  Requires is_graph_trace.
VertexSet zero_set(const PresentedGraph& g, const GraphTrace& t);

// Quotient by (zero_set(t), {}) together with the induced trace: surviving
// non-breaking vertices keep their value, a breaking vertex w takes the sum
// of its edge values into the complement, and its primed twin w' absorbs the
// remainder t(w) - sum.  Preserves the norm exactly.
std::pair<PresentedGraph, GraphTrace> pushforward_trace(
    const PresentedGraph& g, const GraphTrace& t);

}  // namespace gca
