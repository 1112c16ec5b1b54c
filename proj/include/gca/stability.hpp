#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "gca/graph.hpp"
#include "gca/trace.hpp"

namespace gca {

// Did every vertex that lies on a loop turn out to be left infinite?
struct LoopCheck {
  bool pass = true;
  std::optional<std::string> witness;  // a left-finite loop vertex
};

// Did the graph admit no nonzero bounded trace?
struct TraceCheck {
  bool pass = true;
  std::optional<GraphTrace> witness;  // a norm-one trace when it fails
};

struct StabilityReport {
  bool stable = false;
  LoopCheck loop_check;
  TraceCheck trace_check;
  bool fast_path_used = false;  // source-free criterion was applicable
};

struct ConditionKReport {
  bool holds = false;
  // Per base vertex: number of simple loops based there, capped at 2.
  std::map<std::string, std::uint64_t> loop_counts;
};

// Source-free criterion: with no sources, stability is equivalent to every
// vertex being left infinite; and regardless of sources, all-left-infinite
// implies stable.
struct LeftInfiniteCriterion {
  bool applies = false;            // sources(g) empty
  bool all_left_infinite = false;  // over base vertices
};

// Counts simple loops per base vertex: each vertex-cycle through pairwise
// distinct vertices contributes the product of its edge multiplicities
// (OMEGA counts as at least 2), capped at 2.  Holds iff no count equals 1.
ConditionKReport condition_k(const PresentedGraph& g);

// Stability decision: loop vertices all left infinite, and no nonzero
// bounded graph trace (decided by the optimization route).
StabilityReport is_stable(const PresentedGraph& g);

// Same decision through the norm-one trace space: feasibility of the trace
// cone intersected with { sum = 1 }.  Agrees with is_stable on every input.
StabilityReport is_stable_via_T(const PresentedGraph& g);

LeftInfiniteCriterion left_infinite_criterion(const PresentedGraph& g);

}  // namespace gca
