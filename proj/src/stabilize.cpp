#include "gca/stabilize.hpp"

#include "gca/error.hpp"

namespace gca {

namespace {

PresentedGraph with_heads(const PresentedGraph& g,
                          const std::set<std::string>& extra) {
  std::vector<std::string> heads(g.heads().begin(), g.heads().end());
  for (const auto& v : extra) {
    if (g.heads().count(v) == 0) heads.push_back(v);
  }
  return PresentedGraph::make(g.vertex_ids(), g.edge_specs(), heads,
                              /*reject_markers=*/false);
}

}  // namespace

PresentedGraph add_head(const PresentedGraph& g, const std::string& v) {
  if (!g.has_vertex(v)) throw Error("unknown vertex \"" + v + "\"");
  return with_heads(g, {v});
}

PresentedGraph stabilize_graph(const PresentedGraph& g) {
  return with_heads(g, {g.vertex_ids().begin(), g.vertex_ids().end()});
}

PresentedGraph stabilize_minimal(const PresentedGraph& g) {
  std::set<std::string> finite;
  for (const auto& v : g.vertex_ids()) {
    if (!is_left_infinite(g, Vertex{v})) finite.insert(v);
  }
  return with_heads(g, finite);
}

}  // namespace gca
