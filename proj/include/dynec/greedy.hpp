#pragma once

#include <unordered_map>
#include <vector>

#include "dynec/palette.hpp"
#include "dynec/simple_graph.hpp"
#include "dynec/types.hpp"

namespace dynec {

// Baseline colourer: each new edge takes the smallest colour free around
// both endpoints (so within the first deg(u)+deg(v)-1 <= 2*max(deg)-1
// colours) and keeps it until deleted.  No recolouring ever, which is what
// the levelled engines are measured against after deletions.
class GreedyColourer {
 public:
  explicit GreedyColourer(int n);

  void insert(VertexId u, VertexId v);
  void remove(VertexId u, VertexId v);
  bool has_edge(VertexId u, VertexId v) const;
  Colour colour_between(VertexId u, VertexId v) const;

  int64_t edge_count() const { return static_cast<int64_t>(live_.size()); }
  int degree(VertexId v) const { return degree_[v]; }
  Colour max_colour_in_use() const;
  Colour max_colour_assigned() const { return max_assigned_; }
  int64_t palette_searches() const { return searches_; }

  std::pair<SimpleGraph, std::vector<Colour>> snapshot() const;
  const Palette& vertex_palette(VertexId v) const { return pal_[v]; }

 private:
  std::vector<Palette> pal_;
  std::vector<int> degree_;
  std::unordered_map<uint64_t, Colour> live_;
  std::unordered_map<Colour, int64_t> in_use_;
  Colour max_assigned_ = 0;
  int64_t searches_ = 0;

  VertexId check_vertex(VertexId v) const;
  static uint64_t key(VertexId u, VertexId v);
};

}  // namespace dynec
