#include "dynec/static_colouring.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "dynec/palette.hpp"

namespace dynec {

DegeneracyOrder degeneracy_order(const SimpleGraph& g) {
  int n = g.n();
  DegeneracyOrder res;
  res.order.reserve(static_cast<size_t>(n));
  std::vector<int> deg(static_cast<size_t>(n));
  std::set<std::pair<int, VertexId>> heap;  // (degree, id): min picks lowest id on ties
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    heap.insert({deg[v], v});
  }
  std::vector<char> removed(static_cast<size_t>(n), 0);
  while (!heap.empty()) {
    auto [d, v] = *heap.begin();
    heap.erase(heap.begin());
    removed[v] = 1;
    res.order.push_back(v);
    res.degeneracy = std::max(res.degeneracy, d);
    for (auto [w, e] : g.adj(v)) {
      (void)e;
      if (removed[w]) continue;
      heap.erase({deg[w], w});
      --deg[w];
      heap.insert({deg[w], w});
    }
  }
  return res;
}

namespace {

void assign_joint_min(std::vector<Palette>& pal, VertexId u, VertexId w,
                      EdgeId e, EdgeColouring& out) {
  align_palettes(pal[u], pal[w]);
  Colour c = find_joint_free(pal[u], pal[w]);
  pal[u].mark(c, e);
  pal[w].mark(c, e);
  out.colour[e] = c;
  out.max_colour = std::max(out.max_colour, c);
}

}  // namespace

EdgeColouring colour_by_order(const SimpleGraph& g,
                              const DegeneracyOrder& ord) {
  int n = g.n();
  if (static_cast<int>(ord.order.size()) != n)
    throw std::invalid_argument("colouring: order size mismatch");
  std::vector<int> pos(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    VertexId v = ord.order[i];
    if (v < 0 || v >= n || pos[v] != -1)
      throw std::invalid_argument("colouring: order is not a permutation");
    pos[v] = i;
  }

  EdgeColouring res;
  res.colour.assign(static_cast<size_t>(g.m()), kNoColour);
  std::vector<Palette> pal(static_cast<size_t>(n));
  // Right-to-left: when v's turn comes every coloured edge at v leads to a
  // later vertex, so its single palette doubles as the out-palette.
  for (int i = n - 1; i >= 0; --i) {
    VertexId u = ord.order[i];
    std::vector<std::pair<VertexId, EdgeId>> fwd;
    for (auto [w, e] : g.adj(u))
      if (pos[w] > i) fwd.emplace_back(w, e);
    std::sort(fwd.begin(), fwd.end());
    for (auto [w, e] : fwd) assign_joint_min(pal, u, w, e, res);
  }
  return res;
}

StaticHPartition build_hpartition(const SimpleGraph& g, int alpha,
                                  std::optional<double> epsilon) {
  if (alpha < 1) throw std::invalid_argument("hpartition: alpha must be >= 1");
  int d = epsilon ? static_cast<int>(std::ceil((2.0 + *epsilon) * alpha))
                  : 4 * alpha;
  if (epsilon && *epsilon <= 0)
    throw std::invalid_argument("hpartition: epsilon must be > 0");

  int n = g.n();
  StaticHPartition part;
  part.level.assign(static_cast<size_t>(n), 0);
  part.threshold = d;
  std::vector<int> deg(static_cast<size_t>(n));
  std::vector<VertexId> active;
  active.reserve(static_cast<size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    active.push_back(v);
  }
  while (!active.empty()) {
    ++part.level_count;
    std::vector<VertexId> taken, kept;
    for (VertexId v : active)
      (deg[v] <= d ? taken : kept).push_back(v);
    if (taken.empty())
      throw std::invalid_argument(
          "hpartition: no vertex at or below threshold; alpha too small");
    for (VertexId v : taken) part.level[v] = part.level_count;
    for (VertexId v : taken)
      for (auto [w, e] : g.adj(v)) {
        (void)e;
        if (part.level[w] == 0) --deg[w];
      }
    active = std::move(kept);
  }
  return part;
}

EdgeColouring colour_by_partition(const SimpleGraph& g,
                                  const StaticHPartition& part) {
  int n = g.n();
  if (static_cast<int>(part.level.size()) != n)
    throw std::invalid_argument("colouring: partition size mismatch");
  for (VertexId v = 0; v < n; ++v) {
    if (part.level[v] < 1 || part.level[v] > part.level_count)
      throw std::invalid_argument("colouring: level out of range");
    int out_deg = 0;
    for (auto [w, e] : g.adj(v)) {
      (void)e;
      if (part.level[w] >= part.level[v]) ++out_deg;
    }
    if (out_deg > part.threshold)
      throw std::invalid_argument("colouring: partition violates out-degree bound");
  }

  std::vector<std::vector<VertexId>> by_level(
      static_cast<size_t>(part.level_count) + 1);
  for (VertexId v = 0; v < n; ++v) by_level[part.level[v]].push_back(v);

  EdgeColouring res;
  res.colour.assign(static_cast<size_t>(g.m()), kNoColour);
  std::vector<Palette> pal(static_cast<size_t>(n));
  for (int lvl = part.level_count; lvl >= 1; --lvl) {
    for (VertexId u : by_level[lvl]) {  // ascending: filled in id order
      std::vector<std::pair<VertexId, EdgeId>> fwd;
      for (auto [w, e] : g.adj(u))
        if (part.level[w] >= lvl && res.colour[e] == kNoColour)
          fwd.emplace_back(w, e);
      std::sort(fwd.begin(), fwd.end());
      for (auto [w, e] : fwd) assign_joint_min(pal, u, w, e, res);
    }
  }
  return res;
}

}  // namespace dynec
