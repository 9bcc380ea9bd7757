#include "dynec/engine.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace dynec {

LevelEngine::LevelEngine(int n, Mode mode, PartitionConfig cfg)
    : mode_(mode), cfg_(std::move(cfg)), adj_(n) {
  full_pal_.resize(static_cast<size_t>(n));
  out_pal_.resize(static_cast<size_t>(n));
  in_dirty_.assign(static_cast<size_t>(n), 0);
}

Colour LevelEngine::colour_of(EdgeId e) const {
  if (!adj_.edge_alive(e)) throw std::invalid_argument("engine: dead edge id");
  return colour_[e];
}

Colour LevelEngine::colour_between(VertexId u, VertexId v) const {
  auto e = adj_.edge_between(u, v);
  if (!e) throw std::invalid_argument("engine: no such edge");
  return colour_[*e];
}

Colour LevelEngine::colour_budget(EdgeId e) const {
  EdgeKey k = adj_.endpoints(e);
  VertexId lo = adj_.level(k.a) <= adj_.level(k.b) ? k.a : k.b;
  int delta = std::max(adj_.degree(k.a), adj_.degree(k.b));
  return delta + out_cap(lo);
}

Colour LevelEngine::max_colour_in_use() const {
  Colour best = 0;
  adj_.for_each_edge([&](EdgeId e, VertexId, VertexId) {
    best = std::max(best, colour_[e]);
  });
  return best;
}

bool LevelEngine::is_dirty(VertexId v) const {
  if (adj_.out_degree(v) > out_cap(v)) return true;
  return adj_.level(v) > 1 && adj_.lower_shell_degree(v) < down_threshold(v);
}

void LevelEngine::queue_if_dirty(VertexId v) {
  if (!in_dirty_[v] && is_dirty(v)) {
    in_dirty_[v] = 1;
    dirty_.push_back(v);
  }
}

void LevelEngine::uncolour_edge(EdgeId e) {
  Colour c = colour_[e];
  assert(c != kNoColour);
  EdgeKey k = adj_.endpoints(e);
  full_pal_[k.a].unmark(c);
  full_pal_[k.b].unmark(c);
  int la = adj_.level(k.a), lb = adj_.level(k.b);
  if (la <= lb) out_pal_[k.a].unmark(c);
  if (lb <= la) out_pal_[k.b].unmark(c);
  colour_[e] = kNoColour;
}

void LevelEngine::set_colour(EdgeId e, Colour c) {
  assert(colour_[e] == kNoColour);
  EdgeKey k = adj_.endpoints(e);
  full_pal_[k.a].ensure_colour(c);
  full_pal_[k.a].mark(c, e);
  full_pal_[k.b].ensure_colour(c);
  full_pal_[k.b].mark(c, e);
  int la = adj_.level(k.a), lb = adj_.level(k.b);
  if (la <= lb) {
    out_pal_[k.a].ensure_colour(c);
    out_pal_[k.a].mark(c, e);
  }
  if (lb <= la) {
    out_pal_[k.b].ensure_colour(c);
    out_pal_[k.b].mark(c, e);
  }
  colour_[e] = c;
  stats_.max_colour_assigned = std::max(stats_.max_colour_assigned, c);
}

void LevelEngine::recolour_edge(EdgeId e) {
  EdgeId current = e;
  int hops = 0;
  while (true) {
    EdgeKey k = adj_.endpoints(current);
    VertexId lo = k.a, hi = k.b;
    if (adj_.level(lo) > adj_.level(hi)) std::swap(lo, hi);
    align_palettes(out_pal_[lo], full_pal_[hi]);
    Colour c = find_joint_free(out_pal_[lo], full_pal_[hi]);
    ++stats_.palette_searches;
    // c dodges everything around hi and every out-edge of lo, so the only
    // possible holder is an edge strictly below lo; it yields its colour and
    // the walk continues one level further down.
    EdgeId clash = full_pal_[lo].owner_of(c);
    if (clash != kNoEdge) {
      assert([&] {
        EdgeKey ck = adj_.endpoints(clash);
        VertexId other = ck.a == lo ? ck.b : ck.a;
        return adj_.level(other) < adj_.level(lo);
      }());
      ++stats_.cascade_conflicts;
      uncolour_edge(clash);
    }
    set_colour(current, c);
    ++stats_.recolour_steps;
    if (clash == kNoEdge) break;
    current = clash;
    // Each hop lands strictly below the previous lower endpoint, so the hop
    // count is bounded by the level of the starting edge; a generous constant
    // turns a would-be infinite loop into a diagnosable failure.
    if (++hops > 1000000)
      throw std::logic_error("engine: recolour cascade failed to terminate");
  }
}

void LevelEngine::rebuild_out_palette(VertexId v) {
  out_pal_[v] = Palette();
  for (const auto& en : adj_.out_list(v)) {
    Colour c = colour_[en.edge];
    if (c != kNoColour) {
      out_pal_[v].ensure_colour(c);
      out_pal_[v].mark(c, en.edge);
    }
  }
}

void LevelEngine::increment_level(VertexId v) {
  int moved = adj_.out_degree(v);
  adj_.split_out_list(v);
  int li = adj_.level(v);
  rebuild_out_palette(v);
  // Neighbours that were one level above v now match it: the shared edge
  // became an out-edge on their side too.
  for (const auto& en : adj_.out_list(v)) {
    Colour c = colour_[en.edge];
    if (c != kNoColour && adj_.level(en.neighbour) == li) {
      out_pal_[en.neighbour].ensure_colour(c);
      out_pal_[en.neighbour].mark(c, en.edge);
    }
  }
  ++stats_.level_moves;
  ++stats_.increments;
  stats_.level_move_entries += moved;
  queue_if_dirty(v);
  for (const auto& en : adj_.out_list(v)) queue_if_dirty(en.neighbour);
}

void LevelEngine::decrement_level(VertexId v) {
  int i = adj_.level(v);
  assert(i > 1);
  int moved = adj_.lower_shell_degree(v);
  std::vector<LevelledAdjacency::Entry> old_out(adj_.out_list(v).begin(),
                                                adj_.out_list(v).end());
  adj_.merge_down(v);
  rebuild_out_palette(v);
  // Former same-level neighbours keep the edge but it is no longer an
  // out-edge on their side.
  for (const auto& en : old_out) {
    Colour c = colour_[en.edge];
    if (c != kNoColour && adj_.level(en.neighbour) == i)
      out_pal_[en.neighbour].unmark(c);
  }
  ++stats_.level_moves;
  ++stats_.decrements;
  stats_.level_move_entries += moved;
  if (mode_ == Mode::Adaptive) {
    // The vertex's budget may have shrunk with its level; refresh every
    // out-edge colour so each fits the new bound.
    for (const auto& en : old_out) {
      if (colour_[en.edge] != kNoColour) {
        uncolour_edge(en.edge);
        recolour_edge(en.edge);
      }
    }
  }
  queue_if_dirty(v);
  for (const auto& en : old_out) queue_if_dirty(en.neighbour);
}

void LevelEngine::recover() {
  while (!dirty_.empty()) {
    VertexId v = dirty_.back();
    dirty_.pop_back();
    in_dirty_[v] = 0;
    if (adj_.out_degree(v) > out_cap(v)) {
      increment_level(v);
    } else if (adj_.level(v) > 1 &&
               adj_.lower_shell_degree(v) < down_threshold(v)) {
      decrement_level(v);
    }
    // else: went clean while queued; nothing to do.
  }
}

void LevelEngine::adaptation_pass(VertexId w) {
  int degw = adj_.degree(w);
  if (degw == 0) return;
  int top_group = cfg_.group_of(adj_.level(w));
  // After w's degree dropped by one, an edge can exceed its budget only if w
  // is its max-degree endpoint, and then by exactly one colour; per possible
  // lower-endpoint group that pins a single candidate colour to probe.
  for (int g = 1; g <= top_group; ++g) {
    int dv = 1 << g;
    Colour probe =
        degw + static_cast<Colour>(std::floor(2.0 * cfg_.beta * dv)) + 1;
    EdgeId e = full_pal_[w].owner_of(probe);
    if (e == kNoEdge) continue;
    if (colour_[e] > colour_budget(e)) {
      ++stats_.adaptation_recolours;
      uncolour_edge(e);
      recolour_edge(e);
    }
  }
}

void LevelEngine::insert(VertexId u, VertexId v) {
  EdgeId e = adj_.attach_edge(u, v);
  if (static_cast<int>(colour_.size()) <= e)
    colour_.resize(static_cast<size_t>(e) + 1, kNoColour);
  colour_[e] = kNoColour;
  full_pal_[u].ensure_capacity(adj_.degree(u));
  full_pal_[v].ensure_capacity(adj_.degree(v));
  stats_.max_degree_seen = std::max(
      {stats_.max_degree_seen, adj_.degree(u), adj_.degree(v)});
  queue_if_dirty(u);
  queue_if_dirty(v);
  recover();
  recolour_edge(e);
}

void LevelEngine::remove(VertexId u, VertexId v) {
  auto eo = adj_.edge_between(u, v);
  if (!eo) throw std::invalid_argument("engine: no such edge");
  uncolour_edge(*eo);
  adj_.detach_edge(*eo);
  full_pal_[u].ensure_capacity(adj_.degree(u));
  full_pal_[v].ensure_capacity(adj_.degree(v));
  if (mode_ == Mode::Adaptive) {
    adaptation_pass(u);
    adaptation_pass(v);
  }
  queue_if_dirty(u);
  queue_if_dirty(v);
  recover();
}

void LevelEngine::recolour(VertexId u, VertexId v) {
  auto eo = adj_.edge_between(u, v);
  if (!eo) throw std::invalid_argument("engine: no such edge");
  if (colour_[*eo] != kNoColour)
    throw std::logic_error("engine: recolour target already coloured");
  recolour_edge(*eo);
}

void LevelEngine::increment(VertexId v) {
  if (adj_.out_degree(v) <= out_cap(v))
    throw std::logic_error("engine: increment without an out-degree overflow");
  increment_level(v);
}

void LevelEngine::decrement(VertexId v) {
  if (adj_.level(v) <= 1)
    throw std::logic_error("engine: decrement at level 1");
  if (adj_.lower_shell_degree(v) >= down_threshold(v))
    throw std::logic_error("engine: decrement without an underfull shell");
  decrement_level(v);
}

}  // namespace dynec
