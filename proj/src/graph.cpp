#include "gca/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace gca {

namespace {

bool id_has_marker(const std::string& id) {
  return id.find('\'') != std::string::npos || id.find('#') != std::string::npos;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error("degree overflow");
  return r;
}

// Base-graph BFS over the given adjacency support, starting at `from`.
std::set<std::string> support_bfs(const PresentedGraph::Adjacency& adj,
                                  const std::string& from) {
  std::set<std::string> seen{from};
  std::deque<std::string> queue{from};
  while (!queue.empty()) {
    const std::string v = queue.front();
    queue.pop_front();
    auto it = adj.find(v);
    if (it == adj.end()) continue;
    for (const auto& [w, m] : it->second) {
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen;
}

}  // namespace

std::vector<std::string> PresentedGraph::check(
    const std::vector<std::string>& vertices,
    const std::vector<EdgeSpec>& edges, const std::vector<std::string>& heads,
    bool reject_markers) {
  std::vector<std::string> errors;
  std::set<std::string> ids;
  for (const auto& id : vertices) {
    if (id.empty()) errors.push_back("empty vertex id");
    if (reject_markers && id_has_marker(id))
      errors.push_back("vertex id \"" + id +
                       "\" uses a reserved character (' or #)");
    if (!ids.insert(id).second)
      errors.push_back("duplicate vertex id \"" + id + "\"");
  }
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& e : edges) {
    if (ids.count(e.src) == 0)
      errors.push_back("dangling endpoint: edge source \"" + e.src +
                       "\" is not a listed vertex");
    if (ids.count(e.dst) == 0)
      errors.push_back("dangling endpoint: edge target \"" + e.dst +
                       "\" is not a listed vertex");
    if (!pairs.insert({e.src, e.dst}).second)
      errors.push_back("duplicate edge entry for (\"" + e.src + "\", \"" +
                       e.dst + "\"); parallel edges are one entry with a "
                       "multiplicity");
  }
  for (const auto& h : heads) {
    if (ids.count(h) == 0)
      errors.push_back("head flag on unknown vertex \"" + h + "\"");
  }
  return errors;
}

PresentedGraph PresentedGraph::make(const std::vector<std::string>& vertices,
                                    const std::vector<EdgeSpec>& edges,
                                    const std::vector<std::string>& heads,
                                    bool reject_markers) {
  auto errors = check(vertices, edges, heads, reject_markers);
  if (!errors.empty()) {
    std::string what = "invalid graph:";
    for (const auto& e : errors) what += "\n  " + e;
    throw Error(what);
  }
  PresentedGraph g;
  g.vertices_ = vertices;
  std::sort(g.vertices_.begin(), g.vertices_.end());
  for (const auto& v : g.vertices_) {
    g.out_[v];
    g.in_[v];
  }
  for (const auto& e : edges) {
    g.out_[e.src].emplace(e.dst, e.mult);
    g.in_[e.dst].emplace(e.src, e.mult);
  }
  g.heads_.insert(heads.begin(), heads.end());
  return g;
}

bool PresentedGraph::has_vertex(const std::string& id) const {
  return out_.count(id) > 0;
}

const std::map<std::string, Multiplicity>& PresentedGraph::out(
    const std::string& src) const {
  auto it = out_.find(src);
  if (it == out_.end()) throw Error("unknown vertex \"" + src + "\"");
  return it->second;
}

const std::map<std::string, Multiplicity>& PresentedGraph::in(
    const std::string& dst) const {
  auto it = in_.find(dst);
  if (it == in_.end()) throw Error("unknown vertex \"" + dst + "\"");
  return it->second;
}

std::optional<Multiplicity> PresentedGraph::mult(const std::string& src,
                                                 const std::string& dst) const {
  const auto& row = out(src);
  auto it = row.find(dst);
  if (it == row.end()) return std::nullopt;
  return it->second;
}

std::vector<EdgeSpec> PresentedGraph::edge_specs() const {
  std::vector<EdgeSpec> result;
  for (const auto& [src, row] : out_) {
    for (const auto& [dst, m] : row) result.push_back({src, dst, m});
  }
  return result;
}

void PresentedGraph::require_vertex(const Vertex& v) const {
  if (!has_vertex(v.base)) throw Error("unknown vertex \"" + v.base + "\"");
  if (v.is_head() && !has_head(v.base))
    throw Error("vertex \"" + v.base +
                "\" carries no head; chain vertex " + v.to_string() +
                " does not exist");
}

Degree out_degree(const PresentedGraph& g, const Vertex& v) {
  g.require_vertex(v);
  if (v.is_head()) return Degree::of(1);
  std::uint64_t total = 0;
  for (const auto& [w, m] : g.out(v.base)) {
    if (m.is_omega()) return Degree::omega();
    total = checked_add(total, m.count());
  }
  return Degree::of(total);
}

Degree in_degree(const PresentedGraph& g, const Vertex& v) {
  g.require_vertex(v);
  if (v.is_head()) return Degree::of(1);
  std::uint64_t total = g.has_head(v.base) ? 1 : 0;
  for (const auto& [w, m] : g.in(v.base)) {
    if (m.is_omega()) return Degree::omega();
    total = checked_add(total, m.count());
  }
  return Degree::of(total);
}

bool is_singular(const PresentedGraph& g, const Vertex& v) {
  const Degree d = out_degree(g, v);
  return d.is_zero() || d.is_omega();
}

std::set<std::string> reachable_base_set(const PresentedGraph& g,
                                         const std::string& from) {
  if (!g.has_vertex(from)) throw Error("unknown vertex \"" + from + "\"");
  PresentedGraph::Adjacency adj;
  for (const auto& v : g.vertex_ids()) adj[v] = g.out(v);
  return support_bfs(adj, from);
}

bool reaches(const PresentedGraph& g, const Vertex& from, const Vertex& to) {
  g.require_vertex(from);
  g.require_vertex(to);
  if (to.is_head()) {
    // Chains receive edges only from their own upper chain.
    return from.base == to.base && from.index >= to.index;
  }
  if (from.is_head()) {
    // Down the chain to the attach vertex, then anywhere it goes.
    return reachable_base_set(g, from.base).count(to.base) > 0;
  }
  return reachable_base_set(g, from.base).count(to.base) > 0;
}

std::set<std::string> vertices_on_loops(const PresentedGraph& g) {
  // Tarjan over the base support graph.
  const auto& ids = g.vertex_ids();
  std::map<std::string, int> index, low, comp;
  std::vector<std::string> stack;
  std::set<std::string> on_stack;
  std::map<int, std::vector<std::string>> members;
  int next_index = 0, next_comp = 0;

  std::function<void(const std::string&)> strongconnect =
      [&](const std::string& v) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack.insert(v);
        for (const auto& [w, m] : g.out(v)) {
          if (index.find(w) == index.end()) {
            strongconnect(w);
            low[v] = std::min(low[v], low[w]);
          } else if (on_stack.count(w)) {
            low[v] = std::min(low[v], index[w]);
          }
        }
        if (low[v] == index[v]) {
          for (;;) {
            std::string w = stack.back();
            stack.pop_back();
            on_stack.erase(w);
            comp[w] = next_comp;
            members[next_comp].push_back(w);
            if (w == v) break;
          }
          ++next_comp;
        }
      };

  for (const auto& v : ids) {
    if (index.find(v) == index.end()) strongconnect(v);
  }

  std::set<std::string> result;
  for (const auto& [c, vs] : members) {
    if (vs.size() > 1) {
      result.insert(vs.begin(), vs.end());
    } else {
      const std::string& v = vs.front();
      if (g.mult(v, v)) result.insert(v);
    }
  }
  return result;
}

std::set<std::string> sources(const PresentedGraph& g) {
  std::set<std::string> result;
  for (const auto& v : g.vertex_ids()) {
    if (!g.has_head(v) && g.in(v).empty()) result.insert(v);
  }
  return result;
}

LeftSetDescription left_set_description(const PresentedGraph& g,
                                        const Vertex& v) {
  g.require_vertex(v);
  if (v.is_head()) {
    // The chain above v is infinite and nothing else reaches into a chain.
    return LeftSetDescription{v.base, {}};
  }
  // {w : w >= v} is the backward reachability set of v in the base graph.
  PresentedGraph::Adjacency rev;
  for (const auto& u : g.vertex_ids()) rev[u] = g.in(u);
  const std::set<std::string> upstream = support_bfs(rev, v.base);
  for (const auto& u : upstream) {  // sorted, so the first flag is smallest
    if (g.has_head(u)) return LeftSetDescription{u, {}};
  }
  return LeftSetDescription{std::nullopt, upstream};
}

bool is_left_infinite(const PresentedGraph& g, const Vertex& v) {
  return left_set_description(g, v).infinite();
}

}  // namespace gca
