#include "gca/certificate.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "gca/error.hpp"
#include "gca/hereditary.hpp"

namespace gca {

namespace {

// The left-infinite vertex set (hereditary: left sets only grow along edges).
VertexSet left_infinite_set(const PresentedGraph& g) {
  std::set<std::string> base;
  std::map<std::string, HeadPortion> portions;
  for (const auto& v : g.vertex_ids()) {
    if (is_left_infinite(g, Vertex{v})) base.insert(v);
    if (g.has_head(v)) portions.emplace(v, HeadPortion::all());
  }
  return VertexSet(std::move(base), std::move(portions));
}

// Saturation rank: 0 on the left-infinite set itself, n+1 for vertices all of
// whose targets have rank <= n.  Chain vertices always have rank 0.
std::map<std::string, std::size_t> saturation_ranks(const PresentedGraph& g,
                                                    const VertexSet& h0) {
  std::map<std::string, std::size_t> rank;
  for (const auto& v : h0.base()) rank[v] = 0;
  bool grew = true;
  std::size_t n = 0;
  while (grew) {
    grew = false;
    ++n;
    std::vector<std::string> added;
    for (const auto& v : g.vertex_ids()) {
      if (rank.count(v)) continue;
      const auto& row = g.out(v);
      if (row.empty()) continue;
      bool ok = true;
      for (const auto& [w, m] : row) {
        if (m.is_omega() || rank.count(w) == 0) {
          ok = false;
          break;
        }
      }
      if (ok) added.push_back(v);
    }
    for (const auto& v : added) {
      rank[v] = n;
      grew = true;
    }
  }
  return rank;
}

// Shortest base path from `from` to `to`, lexicographically smallest among
// the shortest.  Assumes reachability.
std::vector<std::string> shortest_base_path(const PresentedGraph& g,
                                            const std::string& from,
                                            const std::string& to) {
  std::map<std::string, std::size_t> dist;  // distance TO `to`
  dist[to] = 0;
  std::deque<std::string> queue{to};
  while (!queue.empty()) {
    const std::string v = queue.front();
    queue.pop_front();
    for (const auto& [u, m] : g.in(v)) {
      if (dist.count(u)) continue;
      dist[u] = dist[v] + 1;
      queue.push_back(u);
    }
  }
  std::vector<std::string> path{from};
  std::string cur = from;
  while (cur != to) {
    const std::size_t d = dist.at(cur);
    for (const auto& [w, m] : g.out(cur)) {  // sorted: first hit is smallest
      auto it = dist.find(w);
      if (it != dist.end() && it->second + 1 == d) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

class WitnessBuilder {
 public:
  explicit WitnessBuilder(const PresentedGraph& g)
      : g_(g),
        h0_(left_infinite_set(g)),
        rank_(saturation_ranks(g, h0_)) {}

  bool in_scope(const Vertex& v) const {
    if (v.is_head()) return true;  // chain vertices are left infinite
    return rank_.count(v.base) > 0;
  }

  // Builds the subtree dominating v; `avoid` accumulates every vertex that
  // must stay fresh and is extended with the leaf sources used here.
  CertNode build(const Vertex& v, std::set<Vertex>& avoid) {
    if (!v.is_head() && rank_.at(v.base) > 0) {
      CertNode node;
      node.kind = CertNode::Kind::SPLIT;
      node.vertex = v;
      for (const auto& [w, m] : g_.out(v.base)) {
        for (std::uint64_t i = 0; i < m.count(); ++i)
          node.children.push_back(build(Vertex{w}, avoid));
      }
      return node;
    }
    return leaf(v, avoid);
  }

 private:
  // Base case: v is left infinite.  Pick the head vertex (u, i) with u the
  // lexicographically smallest flagged vertex reaching v and i the smallest
  // index past every avoided index at u (and far enough up the chain when v
  // itself is a chain vertex).
  CertNode leaf(const Vertex& v, std::set<Vertex>& avoid) {
    std::string u;
    std::uint64_t min_index = 1;
    if (v.is_head()) {
      u = v.base;
      min_index = v.index;
    } else {
      const auto desc = left_set_description(g_, v);
      if (!desc.infinite())
        throw Error("witness leaf requested at a left-finite vertex");
      u = *desc.head_witness;
    }
    std::uint64_t index = min_index;
    for (const auto& a : avoid) {
      if (a.base == u && a.index >= index) index = a.index + 1;
    }
    const Vertex source{u, index};
    avoid.insert(source);

    CertNode node;
    node.kind = CertNode::Kind::REACH;
    node.vertex = v;
    node.source = source;
    if (v.is_head()) {
      for (std::uint64_t i = index; i >= v.index; --i)
        node.path.push_back(Vertex{u, i});
    } else {
      for (std::uint64_t i = index; i >= 1; --i)
        node.path.push_back(Vertex{u, i});
      for (const auto& b : shortest_base_path(g_, u, v.base))
        node.path.push_back(Vertex{b});
    }
    return node;
  }

  const PresentedGraph& g_;
  VertexSet h0_;
  std::map<std::string, std::size_t> rank_;
};

void collect_leaf_sources(const CertNode& node, std::vector<Vertex>& out) {
  if (node.kind == CertNode::Kind::REACH) {
    out.push_back(node.source);
  } else {
    for (const auto& c : node.children) collect_leaf_sources(c, out);
  }
}

}  // namespace

ComparisonCertificate find_witness_single(const PresentedGraph& g,
                                          const Vertex& v,
                                          const std::set<Vertex>& avoid) {
  g.require_vertex(v);
  for (const auto& a : avoid) g.require_vertex(a);
  WitnessBuilder builder(g);
  if (!builder.in_scope(v))
    throw WitnessUnavailableError(
        "vertex " + v.to_string() +
        " lies outside the saturation of the left-infinite set; no "
        "constructive witness recursion exists there");
  ComparisonCertificate cert;
  cert.dominated = {v};
  cert.avoid = avoid;
  std::set<Vertex> working = avoid;
  cert.trees.push_back(builder.build(v, working));
  collect_leaf_sources(cert.trees.back(), cert.dominating);
  return cert;
}

ComparisonCertificate find_witness_set(const PresentedGraph& g,
                                       const std::vector<Vertex>& v) {
  for (const auto& x : v) g.require_vertex(x);
  WitnessBuilder builder(g);
  for (const auto& x : v) {
    if (!builder.in_scope(x))
      throw WitnessUnavailableError(
          "vertex " + x.to_string() +
          " lies outside the saturation of the left-infinite set; no "
          "constructive witness recursion exists there");
  }
  ComparisonCertificate cert;
  cert.dominated = v;
  cert.avoid.insert(v.begin(), v.end());
  std::set<Vertex> working = cert.avoid;
  for (const auto& x : v) {
    cert.trees.push_back(builder.build(x, working));
    collect_leaf_sources(cert.trees.back(), cert.dominating);
  }
  return cert;
}

namespace {

class Verifier {
 public:
  Verifier(const PresentedGraph& g, const ComparisonCertificate& c)
      : g_(g), c_(c) {}

  VerifyResult run() {
    if (c_.trees.size() != c_.dominated.size())
      fail("certificate has " + std::to_string(c_.trees.size()) +
           " trees for " + std::to_string(c_.dominated.size()) +
           " dominated vertices");
    for (std::size_t i = 0; i < c_.trees.size() && i < c_.dominated.size();
         ++i) {
      if (!(c_.trees[i].vertex == c_.dominated[i]))
        fail("tree " + std::to_string(i) + " roots at " +
             c_.trees[i].vertex.to_string() + ", not at dominated vertex " +
             c_.dominated[i].to_string());
      check_node(c_.trees[i]);
    }
    check_leaves();
    result_.ok = result_.reasons.empty();
    return result_;
  }

 private:
  void fail(std::string reason) { result_.reasons.push_back(std::move(reason)); }

  bool known(const Vertex& v) {
    try {
      g_.require_vertex(v);
      return true;
    } catch (const Error& e) {
      fail(e.what());
      return false;
    }
  }

  void check_node(const CertNode& node) {
    if (!known(node.vertex)) return;
    if (node.kind == CertNode::Kind::REACH) {
      check_reach(node);
    } else {
      check_split(node);
    }
  }

  void check_reach(const CertNode& node) {
    leaf_sources_.push_back(node.source);
    if (!known(node.source)) return;
    if (node.path.empty()) {
      fail("empty path in REACH(" + node.vertex.to_string() + ")");
      return;
    }
    if (!(node.path.front() == node.source))
      fail("REACH path starts at " + node.path.front().to_string() +
           ", not at source " + node.source.to_string());
    if (!(node.path.back() == node.vertex))
      fail("REACH path ends at " + node.path.back().to_string() +
           ", not at target " + node.vertex.to_string());
    for (std::size_t i = 0; i + 1 < node.path.size(); ++i) {
      const Vertex& a = node.path[i];
      const Vertex& b = node.path[i + 1];
      if (!known(a) || !known(b)) return;
      if (!has_edge(a, b))
        fail("REACH path uses nonexistent edge " + a.to_string() + " -> " +
             b.to_string());
    }
  }

  bool has_edge(const Vertex& a, const Vertex& b) {
    if (a.is_head())
      return a.base == b.base && b.index + 1 == a.index;
    if (b.is_head()) return false;
    return g_.mult(a.base, b.base).has_value();
  }

  void check_split(const CertNode& node) {
    const Degree d = out_degree(g_, node.vertex);
    if (!d.is_finite_nonzero()) {
      fail("SPLIT at singular vertex " + node.vertex.to_string());
      return;
    }
    if (node.children.size() != d.count()) {
      fail("SPLIT at " + node.vertex.to_string() + " has " +
           std::to_string(node.children.size()) + " children, out-degree is " +
           d.to_string());
      return;
    }
    // children targets must match the emitted edge multiset
    std::map<Vertex, std::uint64_t> want;
    if (node.vertex.is_head()) {
      want[Vertex{node.vertex.base, node.vertex.index - 1}] = 1;
    } else {
      for (const auto& [w, m] : g_.out(node.vertex.base))
        want[Vertex{w}] = m.count();
    }
    std::map<Vertex, std::uint64_t> got;
    for (const auto& c : node.children) ++got[c.vertex];
    if (got != want) {
      fail("SPLIT children at " + node.vertex.to_string() +
           " do not match the emitted edges");
      return;
    }
    for (const auto& c : node.children) check_node(c);
  }

  void check_leaves() {
    std::set<Vertex> seen;
    for (const auto& s : leaf_sources_) {
      if (!seen.insert(s).second)
        fail("leaf source " + s.to_string() + " used twice");
      if (c_.avoid.count(s))
        fail("leaf source " + s.to_string() + " lies in the avoid set");
    }
    auto sorted_claim = c_.dominating;
    std::sort(sorted_claim.begin(), sorted_claim.end());
    auto sorted_got = leaf_sources_;
    std::sort(sorted_got.begin(), sorted_got.end());
    if (sorted_claim != sorted_got)
      fail("claimed dominating set does not match the leaf sources");
  }

  const PresentedGraph& g_;
  const ComparisonCertificate& c_;
  std::vector<Vertex> leaf_sources_;
  VerifyResult result_;
};

}  // namespace

VerifyResult verify_certificate(const PresentedGraph& g,
                                const ComparisonCertificate& c) {
  return Verifier(g, c).run();
}

}  // namespace gca
