#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gca/graph.hpp"

namespace gca {

// Portion of one head chain contained in a vertex set: nothing, the first k
// chain vertices, or the whole chain.
class HeadPortion {
 public:
  static HeadPortion none() { return HeadPortion{false, 0}; }
  static HeadPortion prefix(std::uint64_t k) {
    if (k == 0) return none();
    return HeadPortion{false, k};
  }
  static HeadPortion all() { return HeadPortion{true, 0}; }

  bool is_none() const { return !all_ && k_ == 0; }
  bool is_all() const { return all_; }
  bool is_prefix() const { return !all_ && k_ > 0; }
  std::uint64_t prefix_length() const { return k_; }

  bool covers(std::uint64_t index) const {
    return all_ || (index >= 1 && index <= k_);
  }

  bool operator==(const HeadPortion&) const = default;

 private:
  HeadPortion(bool all, std::uint64_t k) : all_(all), k_(k) {}
  bool all_;
  std::uint64_t k_;
};

// A subset of the vertices of a presented graph: base vertices plus a portion
// of each head chain.  Portions equal to none() are normalized away, so
// structural equality is set equality.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::set<std::string> base,
            std::map<std::string, HeadPortion> portions);

  // Validates membership of all named vertices (and that portion keys carry
  // heads) against g; throws Error otherwise.
  void require_valid(const PresentedGraph& g) const;

  const std::set<std::string>& base() const { return base_; }
  const std::map<std::string, HeadPortion>& portions() const {
    return portions_;
  }

  HeadPortion portion(const std::string& head_vertex) const;
  bool contains(const Vertex& v) const;
  bool empty() const { return base_.empty() && portions_.empty(); }

  void insert_base(const std::string& id) { base_.insert(id); }
  void set_portion(const std::string& head_vertex, HeadPortion p);

  bool operator==(const VertexSet&) const = default;

 private:
  std::set<std::string> base_;
  std::map<std::string, HeadPortion> portions_;  // none() entries elided
};

}  // namespace gca
