#include "gca/hereditary.hpp"

#include <algorithm>
#include <deque>

#include "gca/error.hpp"

namespace gca {

namespace {

void require_hereditary(const PresentedGraph& g, const VertexSet& h,
                        const char* who) {
  if (!is_hereditary(g, h))
    throw Error(std::string(who) + ": set is not hereditary");
}

void require_saturated_hereditary(const PresentedGraph& g, const VertexSet& h,
                                  const char* who) {
  require_hereditary(g, h, who);
  if (!is_saturated(g, h))
    throw Error(std::string(who) + ": set is not saturated");
}

// True when v emits at least one edge, finitely many in total, and every
// target lies in `base`.
bool swallowed(const PresentedGraph& g, const std::string& v,
               const std::set<std::string>& base) {
  const auto& row = g.out(v);
  if (row.empty()) return false;
  for (const auto& [w, m] : row) {
    if (m.is_omega() || base.count(w) == 0) return false;
  }
  return true;
}

// Total multiplicity of edges from v into the complement of base: 0, a
// finite positive count, or omega.
Degree escape_degree(const PresentedGraph& g, const std::string& v,
                     const std::set<std::string>& base) {
  std::uint64_t total = 0;
  for (const auto& [w, m] : g.out(v)) {
    if (base.count(w)) continue;
    if (m.is_omega()) return Degree::omega();
    total += m.count();
  }
  return Degree::of(total);
}

}  // namespace

bool is_hereditary(const PresentedGraph& g, const VertexSet& h) {
  h.require_valid(g);
  for (const auto& v : h.base()) {
    for (const auto& [w, m] : g.out(v)) {
      if (h.base().count(w) == 0) return false;
    }
  }
  // A chain vertex reaches its attach vertex, so any portion forces it in.
  for (const auto& [u, p] : h.portions()) {
    if (h.base().count(u) == 0) return false;
  }
  return true;
}

VertexSet hereditary_closure(const PresentedGraph& g, const VertexSet& h) {
  h.require_valid(g);
  std::set<std::string> base = h.base();
  std::deque<std::string> queue(base.begin(), base.end());
  for (const auto& [u, p] : h.portions()) {
    if (base.insert(u).second) queue.push_back(u);
  }
  while (!queue.empty()) {
    const std::string v = queue.front();
    queue.pop_front();
    for (const auto& [w, m] : g.out(v)) {
      if (base.insert(w).second) queue.push_back(w);
    }
  }
  return VertexSet(std::move(base), h.portions());
}

bool is_saturated(const PresentedGraph& g, const VertexSet& h) {
  require_hereditary(g, h, "is_saturated");
  for (const auto& v : g.vertex_ids()) {
    if (h.base().count(v)) continue;
    if (swallowed(g, v, h.base())) return false;
  }
  // Chain vertices emit one edge each, so along a chain whose attach vertex
  // lies in H, saturation climbs all the way up: ALL or nothing.
  for (const auto& u : g.vertex_ids()) {
    if (!g.has_head(u)) continue;
    const bool in = h.base().count(u) > 0;
    const HeadPortion p = h.portion(u);
    if (in && !p.is_all()) return false;
    if (!in && !p.is_none()) return false;
  }
  return true;
}

VertexSet saturate(const PresentedGraph& g, const VertexSet& h) {
  require_hereditary(g, h, "saturate");
  std::set<std::string> base = h.base();
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& v : g.vertex_ids()) {
      if (base.count(v)) continue;
      if (swallowed(g, v, base)) {
        base.insert(v);
        grew = true;
      }
    }
  }
  std::map<std::string, HeadPortion> portions;
  for (const auto& u : base) {
    if (g.has_head(u)) portions.emplace(u, HeadPortion::all());
  }
  return VertexSet(std::move(base), std::move(portions));
}

std::set<std::string> breaking_vertices(const PresentedGraph& g,
                                        const VertexSet& h) {
  require_saturated_hereditary(g, h, "breaking_vertices");
  std::set<std::string> result;
  for (const auto& v : g.vertex_ids()) {
    if (h.base().count(v)) continue;
    if (!out_degree(g, Vertex{v}).is_omega()) continue;
    if (escape_degree(g, v, h.base()).is_finite_nonzero()) result.insert(v);
  }
  return result;
}

PresentedGraph quotient_graph(const PresentedGraph& g, const VertexSet& h,
                              const std::set<std::string>& s) {
  require_saturated_hereditary(g, h, "quotient_graph");
  const std::set<std::string> breaking = breaking_vertices(g, h);
  for (const auto& v : s) {
    if (breaking.count(v) == 0)
      throw Error("quotient_graph: \"" + v + "\" is not a breaking vertex");
  }
  std::set<std::string> primed;  // breaking vertices acquiring a twin
  for (const auto& v : breaking) {
    if (s.count(v) == 0) primed.insert(v);
  }

  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<std::string> heads;
  for (const auto& v : g.vertex_ids()) {
    if (h.base().count(v)) continue;
    vertices.push_back(v);
    if (g.has_head(v) && primed.count(v) == 0) heads.push_back(v);
    for (const auto& [w, m] : g.out(v)) {
      if (h.base().count(w)) continue;
      edges.push_back({v, w, m});
      if (primed.count(w)) edges.push_back({v, w + "'", m});
    }
  }
  for (const auto& v : primed) {
    vertices.push_back(v + "'");
    if (g.has_head(v)) {
      // The chain vertex feeding v also feeds v', so it can no longer live
      // inside a head flag (those emit exactly one edge).  Materialize it as
      // a fresh base vertex carrying the rest of the chain as its own head.
      const std::string peeled = v + "'1";
      vertices.push_back(peeled);
      heads.push_back(peeled);
      edges.push_back({peeled, v, Multiplicity::finite(1)});
      edges.push_back({peeled, v + "'", Multiplicity::finite(1)});
    }
  }
  return PresentedGraph::make(vertices, edges, heads,
                              /*reject_markers=*/false);
}

std::vector<VertexSet> enumerate_saturated_hereditary(const PresentedGraph& g,
                                                      std::size_t max_base_size) {
  const auto& ids = g.vertex_ids();
  if (ids.size() > max_base_size)
    throw Error("enumerate_saturated_hereditary: base has " +
                std::to_string(ids.size()) + " vertices, bound is " +
                std::to_string(max_base_size));
  std::vector<VertexSet> result;
  const std::size_t n = ids.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::set<std::string> base;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) base.insert(ids[i]);
    }
    bool ok = true;
    for (const auto& v : base) {
      for (const auto& [w, m] : g.out(v)) {
        if (base.count(w) == 0) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (!ok) continue;
    for (const auto& v : ids) {
      if (base.count(v) == 0 && swallowed(g, v, base)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::map<std::string, HeadPortion> portions;
    for (const auto& u : base) {
      if (g.has_head(u)) portions.emplace(u, HeadPortion::all());
    }
    result.emplace_back(std::move(base), std::move(portions));
  }
  std::sort(result.begin(), result.end(),
            [](const VertexSet& a, const VertexSet& b) {
              if (a.base().size() != b.base().size())
                return a.base().size() < b.base().size();
              return a.base() < b.base();
            });
  return result;
}

}  // namespace gca
