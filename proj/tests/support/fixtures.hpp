#pragma once

// The shared example graphs, mirrored by tests/fixtures/g*.json.

#include "gca/graph.hpp"

namespace fixtures {

using gca::Multiplicity;
using gca::PresentedGraph;

// single sink
inline PresentedGraph g1() { return PresentedGraph::make({"u"}, {}, {}); }

// one vertex, infinite self-loop
inline PresentedGraph g2() {
  return PresentedGraph::make({"u"}, {{"u", "u", Multiplicity::omega()}}, {});
}

// g2 with a head
inline PresentedGraph g3() {
  return PresentedGraph::make({"u"}, {{"u", "u", Multiplicity::omega()}},
                              {"u"});
}

// one edge v -> w
inline PresentedGraph g4() {
  return PresentedGraph::make({"v", "w"}, {{"v", "w"}}, {});
}

// g4 with a head at w
inline PresentedGraph g5() {
  return PresentedGraph::make({"v", "w"}, {{"v", "w"}}, {"w"});
}

// 2-cycle
inline PresentedGraph g6() {
  return PresentedGraph::make({"v", "w"}, {{"v", "w"}, {"w", "v"}}, {});
}

// infinite emitter: omega edges into h, two edges into w
inline PresentedGraph g7() {
  return PresentedGraph::make(
      {"h", "u", "w"},
      {{"u", "h", Multiplicity::omega()}, {"u", "w", Multiplicity::finite(2)}},
      {});
}

// path into a single self-loop
inline PresentedGraph g8() {
  return PresentedGraph::make({"v", "w"}, {{"v", "w"}, {"w", "w"}}, {});
}

// double self-loop
inline PresentedGraph g9() {
  return PresentedGraph::make({"w"}, {{"w", "w", Multiplicity::finite(2)}},
                              {});
}

}  // namespace fixtures
