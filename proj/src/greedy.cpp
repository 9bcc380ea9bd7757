#include "dynec/greedy.hpp"

#include <algorithm>
#include <stdexcept>

namespace dynec {

GreedyColourer::GreedyColourer(int n) {
  if (n < 0) throw std::invalid_argument("greedy: negative vertex count");
  pal_.resize(static_cast<size_t>(n));
  degree_.assign(static_cast<size_t>(n), 0);
}

VertexId GreedyColourer::check_vertex(VertexId v) const {
  if (v < 0 || v >= static_cast<VertexId>(pal_.size()))
    throw std::invalid_argument("greedy: vertex id out of range");
  return v;
}

uint64_t GreedyColourer::key(VertexId u, VertexId v) {
  uint64_t a = static_cast<uint32_t>(u < v ? u : v);
  uint64_t b = static_cast<uint32_t>(u < v ? v : u);
  return (a << 32) | b;
}

void GreedyColourer::insert(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("greedy: self-loop");
  if (live_.count(key(u, v)))
    throw std::invalid_argument("greedy: duplicate edge");
  align_palettes(pal_[u], pal_[v]);
  Colour c = find_joint_free(pal_[u], pal_[v]);
  ++searches_;
  // Owner ids are unused here; palettes only gate colour reuse.
  pal_[u].mark(c, 0);
  pal_[v].mark(c, 0);
  ++degree_[u];
  ++degree_[v];
  live_[key(u, v)] = c;
  ++in_use_[c];
  max_assigned_ = std::max(max_assigned_, c);
}

void GreedyColourer::remove(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  auto it = live_.find(key(u, v));
  if (it == live_.end()) throw std::invalid_argument("greedy: no such edge");
  Colour c = it->second;
  pal_[u].unmark(c);
  pal_[v].unmark(c);
  pal_[u].ensure_capacity(--degree_[u]);
  pal_[v].ensure_capacity(--degree_[v]);
  auto use = in_use_.find(c);
  if (--use->second == 0) in_use_.erase(use);
  live_.erase(it);
}

bool GreedyColourer::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return live_.count(key(u, v)) != 0;
}

Colour GreedyColourer::colour_between(VertexId u, VertexId v) const {
  auto it = live_.find(key(u, v));
  if (it == live_.end()) throw std::invalid_argument("greedy: no such edge");
  return it->second;
}

Colour GreedyColourer::max_colour_in_use() const {
  Colour best = 0;
  for (const auto& [c, cnt] : in_use_)
    if (cnt > 0) best = std::max(best, c);
  return best;
}

std::pair<SimpleGraph, std::vector<Colour>> GreedyColourer::snapshot() const {
  SimpleGraph g(static_cast<int>(pal_.size()));
  std::vector<Colour> colour;
  for (const auto& [k, c] : live_) {
    g.add_edge(static_cast<VertexId>(k >> 32),
               static_cast<VertexId>(k & 0xffffffffu));
    colour.push_back(c);
  }
  return {std::move(g), std::move(colour)};
}

}  // namespace dynec
