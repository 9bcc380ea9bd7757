#include "dynec/simple_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynec {

SimpleGraph::SimpleGraph(int n) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  adj_.resize(static_cast<size_t>(n));
}

VertexId SimpleGraph::check_vertex(VertexId v) const {
  if (v < 0 || v >= n())
    throw std::invalid_argument("graph: vertex id out of range");
  return v;
}

EdgeId SimpleGraph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("graph: self-loop");
  auto key = std::minmax(u, v);
  if (!present_.insert({key.first, key.second}).second)
    throw std::invalid_argument("graph: duplicate edge");
  EdgeId e = static_cast<EdgeId>(edges_.size());
  edges_.emplace_back(u, v);
  adj_[u].emplace_back(v, e);
  adj_[v].emplace_back(u, e);
  return e;
}

bool SimpleGraph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  auto key = std::minmax(u, v);
  return present_.count({key.first, key.second}) != 0;
}

int SimpleGraph::degree(VertexId v) const {
  return static_cast<int>(adj_[check_vertex(v)].size());
}

const std::vector<std::pair<VertexId, EdgeId>>& SimpleGraph::adj(
    VertexId v) const {
  return adj_[check_vertex(v)];
}

}  // namespace dynec
