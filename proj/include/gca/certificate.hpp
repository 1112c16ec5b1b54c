#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "gca/graph.hpp"

namespace gca {

// Proof tree for a projection comparison p_v <~ sum_{w in W} p_w.
//
//   REACH(target, source, path): source >= target via the listed directed
//     path, so p_target is dominated by p_source.
//   SPLIT(vertex, children): a non-singular vertex's projection equals the
//     sum over its emitted edge instances, one child per instance (an edge of
//     multiplicity m contributes m children with the same child target).
struct CertNode {
  enum class Kind { REACH, SPLIT };
  Kind kind = Kind::REACH;
  Vertex vertex;  // the dominated vertex this node accounts for

  // REACH only:
  Vertex source;
  std::vector<Vertex> path;  // source first, vertex last

  // SPLIT only:
  std::vector<CertNode> children;
};

struct ComparisonCertificate {
  std::vector<Vertex> dominated;   // the claimed set V, one tree per entry
  std::vector<Vertex> dominating;  // the claimed set W = all leaf sources
  std::set<Vertex> avoid;          // W must be disjoint from this
  std::vector<CertNode> trees;
};

struct VerifyResult {
  bool ok = false;
  std::vector<std::string> reasons;  // first failure(s) when !ok
  explicit operator bool() const { return ok; }
};

// Builds a certificate dominating {v} with W disjoint from `avoid`, following
// the saturation recursion over the left-infinite region.  Throws
// WitnessUnavailableError when v lies outside the saturation of the
// left-infinite vertex set (no constructive recursion exists there), and
// Error when v is not a vertex of g.
ComparisonCertificate find_witness_single(const PresentedGraph& g,
                                          const Vertex& v,
                                          const std::set<Vertex>& avoid);

// Iterates find_witness_single with cumulative avoid sets so that W is
// disjoint from V and the per-vertex witness sets are pairwise disjoint.
ComparisonCertificate find_witness_set(const PresentedGraph& g,
                                       const std::vector<Vertex>& v);

// Structural re-verification that never trusts the producer: SPLIT vertices
// must be non-singular with children matching the emitted edge multiset,
// REACH paths must be genuine directed paths, leaf sources must be pairwise
// distinct, outside avoid, and collectively equal to the claimed W.
VerifyResult verify_certificate(const PresentedGraph& g,
                                const ComparisonCertificate& c);

}  // namespace gca
