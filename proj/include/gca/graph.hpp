#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gca/error.hpp"
#include "gca/multiplicity.hpp"

namespace gca {

// Address of a vertex in the countable graph a presentation denotes.
// index == 0 names the base vertex `base` itself; index == k >= 1 names the
// k-th vertex of the infinite chain attached at `base` (1 is nearest the
// base), which only exists when `base` carries a head flag.
struct Vertex {
  std::string base;
  std::uint64_t index = 0;

  Vertex() = default;
  Vertex(std::string base_id, std::uint64_t chain_index = 0)
      : base(std::move(base_id)), index(chain_index) {}

  bool is_head() const { return index > 0; }

  auto operator<=>(const Vertex&) const = default;

  std::string to_string() const {
    return is_head() ? base + "#" + std::to_string(index) : base;
  }
};

struct EdgeSpec {
  std::string src;
  std::string dst;
  Multiplicity mult = Multiplicity::finite(1);
};

// Finite presentation of a countable directed graph: a finite base multigraph
// with multiplicities in {1, 2, ...} ∪ {omega}, plus a per-vertex flag that
// attaches one infinite chain  ... -> v#2 -> v#1 -> v  feeding into the
// vertex. Instances are immutable once constructed and safe to share across
// threads; every operation on them is a pure function.
//
// Vertex ids are case-sensitive strings. Construction sorts the vertex list,
// so equality is canonical and serialization is deterministic.
class PresentedGraph {
 public:
  using Adjacency = std::map<std::string, std::map<std::string, Multiplicity>>;

  PresentedGraph() = default;  // the empty graph

  // Checks every presentation invariant and returns all violations (empty
  // means valid). `reject_markers` additionally bans the reserved characters
  // "'" and "#" in ids, which ingestion uses so that quotient primes and
  // chain addresses can never collide with user ids.
  static std::vector<std::string> check(
      const std::vector<std::string>& vertices,
      const std::vector<EdgeSpec>& edges,
      const std::vector<std::string>& heads, bool reject_markers = true);

  // Builds a graph or throws Error with every violation listed.
  static PresentedGraph make(const std::vector<std::string>& vertices,
                             const std::vector<EdgeSpec>& edges,
                             const std::vector<std::string>& heads = {},
                             bool reject_markers = true);

  const std::vector<std::string>& vertex_ids() const { return vertices_; }
  std::size_t base_size() const { return vertices_.size(); }
  bool has_vertex(const std::string& id) const;
  bool has_head(const std::string& id) const { return heads_.count(id) > 0; }
  const std::set<std::string>& heads() const { return heads_; }

  // Outgoing base edges of `src`, keyed by target. Empty map for sinks.
  const std::map<std::string, Multiplicity>& out(const std::string& src) const;
  // Incoming base edges of `dst`, keyed by source (head chain edge excluded).
  const std::map<std::string, Multiplicity>& in(const std::string& dst) const;
  std::optional<Multiplicity> mult(const std::string& src,
                                   const std::string& dst) const;
  // All base edges as specs, ordered by (src, dst).
  std::vector<EdgeSpec> edge_specs() const;

  // Throws Error unless v names a vertex of the denoted countable graph.
  void require_vertex(const Vertex& v) const;

  friend bool operator==(const PresentedGraph&, const PresentedGraph&) = default;

 private:
  std::vector<std::string> vertices_;  // sorted, distinct
  Adjacency out_;
  Adjacency in_;
  std::set<std::string> heads_;
};

// |s^{-1}(v)|: total outgoing multiplicity. Head chain vertices emit exactly
// one edge.
Degree out_degree(const PresentedGraph& g, const Vertex& v);

// |r^{-1}(v)|: total incoming multiplicity; a head flag contributes the one
// chain edge v#1 -> v. Head chain vertices receive exactly one edge.
Degree in_degree(const PresentedGraph& g, const Vertex& v);

// Singular = sink or infinite emitter.
bool is_singular(const PresentedGraph& g, const Vertex& v);

// Path relation `from >= to` in the denoted countable graph. Reflexive:
// vertices are paths of length zero.
bool reaches(const PresentedGraph& g, const Vertex& from, const Vertex& to);

// Base vertices reachable from `from` (including `from`), in sorted order.
std::set<std::string> reachable_base_set(const PresentedGraph& g,
                                         const std::string& from);

// Base vertices lying on some cycle. Chain vertices never lie on cycles, so
// the result is a set of base ids. Computed via strongly connected
// components; a singleton component counts only with a self-loop entry.
std::set<std::string> vertices_on_loops(const PresentedGraph& g);

// Base vertices receiving no edge at all. Head-flagged vertices and chain
// vertices always receive one, so neither can be a source.
std::set<std::string> sources(const PresentedGraph& g);

// L(v) = { w : w >= v }. The base is finite, so L(v) is infinite exactly when
// some head-flagged vertex reaches v; in that case `head_witness` holds the
// lexicographically smallest such flag and `base_vertices` is not populated.
// When finite, L(v) consists of base vertices only (any chain vertex in L(v)
// would bring its whole upper chain along) and is listed explicitly.
struct LeftSetDescription {
  std::optional<std::string> head_witness;
  std::set<std::string> base_vertices;

  bool infinite() const { return head_witness.has_value(); }
};

LeftSetDescription left_set_description(const PresentedGraph& g,
                                        const Vertex& v);

bool is_left_infinite(const PresentedGraph& g, const Vertex& v);

}  // namespace gca
