#include "gca/vertex_set.hpp"

#include "gca/error.hpp"

namespace gca {

VertexSet::VertexSet(std::set<std::string> base,
                     std::map<std::string, HeadPortion> portions)
    : base_(std::move(base)) {
  for (auto& [v, p] : portions) {
    if (!p.is_none()) portions_.emplace(v, p);
  }
}

void VertexSet::require_valid(const PresentedGraph& g) const {
  for (const auto& v : base_) {
    if (!g.has_vertex(v)) throw Error("unknown vertex \"" + v + "\" in set");
  }
  for (const auto& [v, p] : portions_) {
    if (!g.has_vertex(v)) throw Error("unknown vertex \"" + v + "\" in set");
    if (!g.has_head(v))
      throw Error("set names chain vertices of \"" + v +
                  "\", which carries no head");
  }
}

HeadPortion VertexSet::portion(const std::string& head_vertex) const {
  auto it = portions_.find(head_vertex);
  return it == portions_.end() ? HeadPortion::none() : it->second;
}

bool VertexSet::contains(const Vertex& v) const {
  if (!v.is_head()) return base_.count(v.base) > 0;
  return portion(v.base).covers(v.index);
}

void VertexSet::set_portion(const std::string& head_vertex, HeadPortion p) {
  if (p.is_none()) {
    portions_.erase(head_vertex);
  } else {
    portions_.insert_or_assign(head_vertex, p);
  }
}

}  // namespace gca
