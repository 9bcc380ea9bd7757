#include "dynec/oracle.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "dynec/engine.hpp"
#include "dynec/static_colouring.hpp"

namespace dynec {
namespace oracle {

std::string AuditReport::to_string() const {
  std::ostringstream os;
  if (violations.empty()) {
    os << "clean";
  } else {
    os << violations.size() << " violation(s):";
    for (const auto& v : violations) os << "\n  [" << v.kind << "] " << v.detail;
  }
  return os.str();
}

namespace {

void pass(AuditReport& rep, const std::string& kind) {
  ++rep.checks_passed[kind];
}

void flag(AuditReport& rep, const std::string& kind, std::string detail) {
  rep.violations.push_back({kind, std::move(detail)});
}

}  // namespace

AuditReport verify_proper(const SimpleGraph& g,
                          const std::vector<Colour>& colour) {
  AuditReport rep;
  if (static_cast<int>(colour.size()) < g.m()) {
    flag(rep, "proper", "colour table shorter than edge list");
    return rep;
  }
  for (EdgeId e = 0; e < g.m(); ++e) {
    if (colour[e] < 1)
      flag(rep, "proper", "edge " + std::to_string(e) + " uncoloured");
    else
      pass(rep, "proper");
  }
  for (VertexId v = 0; v < g.n(); ++v) {
    std::vector<Colour> around;
    for (auto [w, e] : g.adj(v)) {
      (void)w;
      if (colour[e] >= 1) around.push_back(colour[e]);
    }
    std::sort(around.begin(), around.end());
    bool dup = std::adjacent_find(around.begin(), around.end()) != around.end();
    if (dup)
      flag(rep, "proper",
           "repeated colour around vertex " + std::to_string(v));
    else
      pass(rep, "proper");
  }
  return rep;
}

int exact_arboricity(const SimpleGraph& g) {
  if (g.n() > 16)
    throw std::invalid_argument("exact arboricity limited to n <= 16");
  int n = g.n();
  std::vector<uint32_t> edge_mask;
  edge_mask.reserve(static_cast<size_t>(g.m()));
  for (auto [u, v] : g.edges())
    edge_mask.push_back((1u << u) | (1u << v));
  int best = 0;
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    int verts = __builtin_popcount(mask);
    if (verts < 2) continue;
    int inside = 0;
    for (uint32_t em : edge_mask)
      if ((em & mask) == em) ++inside;
    if (inside == 0) continue;
    int dens = (inside + verts - 2) / (verts - 1);  // ceil
    best = std::max(best, dens);
  }
  return best;
}

int degeneracy_bound(const SimpleGraph& g) {
  return degeneracy_order(g).degeneracy;
}

Colour min_free_colour(std::span<const Colour> a, std::span<const Colour> b) {
  size_t limit = a.size() + b.size() + 2;
  std::vector<char> used(limit, 0);
  for (Colour c : a)
    if (c >= 1 && static_cast<size_t>(c) < limit) used[c] = 1;
  for (Colour c : b)
    if (c >= 1 && static_cast<size_t>(c) < limit) used[c] = 1;
  for (Colour c = 1;; ++c)
    if (static_cast<size_t>(c) >= limit || !used[c]) return c;
}

std::pair<SimpleGraph, std::vector<Colour>> snapshot(const LevelEngine& eng) {
  const auto& adj = eng.adjacency();
  SimpleGraph g(adj.capacity());
  std::vector<Colour> colour;
  adj.for_each_edge([&](EdgeId e, VertexId u, VertexId v) {
    g.add_edge(u, v);
    colour.push_back(eng.colour_of(e));
  });
  return {std::move(g), std::move(colour)};
}

AuditReport audit_engine(const LevelEngine& eng) {
  AuditReport rep;
  const auto& adj = eng.adjacency();
  std::string why;
  if (!adj.validate(&why))
    flag(rep, "adjacency", why);
  else
    pass(rep, "adjacency");

  // Collect incident / outgoing colour sets straight from the edges.
  int n = adj.capacity();
  std::vector<std::vector<std::pair<Colour, EdgeId>>> incident(
      static_cast<size_t>(n)),
      outgoing(static_cast<size_t>(n));
  adj.for_each_edge([&](EdgeId e, VertexId u, VertexId v) {
    Colour c = eng.colour_of(e);
    if (c < 1) {
      flag(rep, "proper", "edge " + std::to_string(e) + " uncoloured");
      return;
    }
    pass(rep, "proper");
    incident[u].emplace_back(c, e);
    incident[v].emplace_back(c, e);
    int lu = adj.level(u), lv = adj.level(v);
    if (lu <= lv) outgoing[u].emplace_back(c, e);
    if (lv <= lu) outgoing[v].emplace_back(c, e);
    if (eng.mode() == LevelEngine::Mode::Adaptive) {
      if (c > eng.colour_budget(e))
        flag(rep, "inv3",
             "edge " + std::to_string(e) + " colour " + std::to_string(c) +
                 " above budget " + std::to_string(eng.colour_budget(e)));
      else
        pass(rep, "inv3");
    }
  });

  auto palette_matches = [&](const Palette& pal,
                             std::vector<std::pair<Colour, EdgeId>>& want,
                             VertexId v, const char* which) {
    std::sort(want.begin(), want.end());
    for (size_t i = 1; i < want.size(); ++i)
      if (want[i].first == want[i - 1].first) {
        flag(rep, "proper", std::string("repeated colour around vertex ") +
                                std::to_string(v));
        return;
      }
    std::vector<Colour> have = pal.used_colours();
    bool ok = have.size() == want.size();
    if (ok)
      for (size_t i = 0; i < have.size(); ++i)
        ok = ok && have[i] == want[i].first &&
             pal.owner_of(have[i]) == want[i].second;
    if (!ok)
      flag(rep, "palette-mismatch",
           std::string(which) + " palette of vertex " + std::to_string(v) +
               " disagrees with edge colours");
    else
      pass(rep, "palette-mismatch");
    if (!pal.check_tree())
      flag(rep, "palette-tree",
           std::string(which) + " palette tree of vertex " +
               std::to_string(v) + " has bad sums");
    else
      pass(rep, "palette-tree");
  };

  for (VertexId v = 0; v < n; ++v) {
    palette_matches(eng.vertex_palette(v), incident[v], v, "full");
    palette_matches(eng.out_palette(v), outgoing[v], v, "out");

    if (adj.out_degree(v) > eng.out_cap(v))
      flag(rep, "inv1",
           "vertex " + std::to_string(v) + " out-degree " +
               std::to_string(adj.out_degree(v)) + " above cap " +
               std::to_string(eng.out_cap(v)));
    else
      pass(rep, "inv1");
    if (adj.level(v) > 1 &&
        adj.lower_shell_degree(v) < eng.down_threshold(v))
      flag(rep, "inv2",
           "vertex " + std::to_string(v) + " shell " +
               std::to_string(adj.lower_shell_degree(v)) +
               " below threshold " + std::to_string(eng.down_threshold(v)));
    else
      pass(rep, "inv2");
  }

  if (eng.has_pending_dirty())
    flag(rep, "dirty", "dirty queue not empty after operation");
  else
    pass(rep, "dirty");
  return rep;
}

}  // namespace oracle
}  // namespace dynec
