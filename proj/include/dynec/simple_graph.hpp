#pragma once

#include <set>
#include <utility>
#include <vector>

#include "dynec/types.hpp"

namespace dynec {

// Static undirected simple graph with stable edge ids (insertion order).
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  // Throws std::invalid_argument on self-loops, range errors, duplicates.
  EdgeId add_edge(VertexId u, VertexId v);

  bool has_edge(VertexId u, VertexId v) const;
  int degree(VertexId v) const;

  const std::vector<std::pair<VertexId, VertexId>>& edges() const {
    return edges_;
  }
  // (neighbour, edge id) pairs in insertion order.
  const std::vector<std::pair<VertexId, EdgeId>>& adj(VertexId v) const;

 private:
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
  std::set<std::pair<VertexId, VertexId>> present_;

  VertexId check_vertex(VertexId v) const;
};

}  // namespace dynec
