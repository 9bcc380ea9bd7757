#include "dynec/adjacency.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dynec {

LevelledAdjacency::LevelledAdjacency(int n) {
  if (n < 0) throw std::invalid_argument("adjacency: negative vertex count");
  level_.assign(static_cast<size_t>(n), 1);
  degree_.assign(static_cast<size_t>(n), 0);
  out_.resize(static_cast<size_t>(n));
  buckets_.resize(static_cast<size_t>(n));
}

VertexId LevelledAdjacency::check_vertex(VertexId v) const {
  if (v < 0 || v >= capacity())
    throw std::invalid_argument("adjacency: vertex id out of range");
  return v;
}

LevelledAdjacency::Handle& LevelledAdjacency::handle_for(EdgeRecord& r,
                                                         VertexId side) {
  assert(r.u == side || r.v == side);
  return r.u == side ? r.at_u : r.at_v;
}

const std::vector<LevelledAdjacency::Entry>* LevelledAdjacency::find_bucket(
    VertexId v, int j) const {
  for (const Bucket& b : buckets_[v])
    if (b.first == j) return &b.second;
  return nullptr;
}

std::vector<LevelledAdjacency::Entry>& LevelledAdjacency::bucket_for_insert(
    VertexId v, int j) {
  for (Bucket& b : buckets_[v])
    if (b.first == j) return b.second;
  buckets_[v].emplace_back(j, std::vector<Entry>{});
  return buckets_[v].back().second;
}

std::vector<LevelledAdjacency::Entry>& LevelledAdjacency::list_for(
    VertexId v, int32_t tag) {
  if (tag == kOutList) return out_[v];
  for (Bucket& b : buckets_[v])
    if (b.first == tag) return b.second;
  throw std::logic_error("adjacency: missing bucket");
}

void LevelledAdjacency::push_entry(VertexId owner, int32_t tag, Entry e) {
  std::vector<Entry>& list =
      tag == kOutList ? out_[owner] : bucket_for_insert(owner, tag);
  list.push_back(e);
  handle_for(records_[e.edge], owner) = {tag,
                                         static_cast<int32_t>(list.size()) - 1};
}

void LevelledAdjacency::remove_entry(VertexId owner, Handle h) {
  std::vector<Entry>& list = list_for(owner, h.list);
  assert(h.pos >= 0 && h.pos < static_cast<int32_t>(list.size()));
  if (h.pos != static_cast<int32_t>(list.size()) - 1) {
    list[h.pos] = list.back();
    handle_for(records_[list[h.pos].edge], owner).pos = h.pos;
  }
  list.pop_back();
  if (h.list != kOutList && list.empty()) prune_bucket_if_empty(owner, h.list);
}

void LevelledAdjacency::prune_bucket_if_empty(VertexId v, int j) {
  auto& bs = buckets_[v];
  for (size_t i = 0; i < bs.size(); ++i) {
    if (bs[i].first == j && bs[i].second.empty()) {
      bs[i] = std::move(bs.back());
      bs.pop_back();
      return;
    }
  }
}

int LevelledAdjacency::down_degree(VertexId v, int j) const {
  const auto* b = find_bucket(check_vertex(v), j);
  return b ? static_cast<int>(b->size()) : 0;
}

int LevelledAdjacency::lower_shell_degree(VertexId v) const {
  check_vertex(v);
  int shell = static_cast<int>(out_[v].size());
  if (level_[v] > 1) shell += down_degree(v, level_[v] - 1);
  return shell;
}

EdgeKey LevelledAdjacency::endpoints(EdgeId e) const {
  if (!edge_alive(e)) throw std::invalid_argument("adjacency: dead edge id");
  return EdgeKey::canonical(records_[e].u, records_[e].v);
}

std::optional<EdgeId> LevelledAdjacency::edge_between(VertexId u,
                                                      VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  auto it = by_pair_.find(pair_key(u, v));
  if (it == by_pair_.end()) return std::nullopt;
  return it->second;
}

EdgeId LevelledAdjacency::attach_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("adjacency: self-loop");
  uint64_t key = pair_key(u, v);
  if (by_pair_.count(key)) throw std::invalid_argument("adjacency: duplicate edge");

  EdgeId e;
  if (!free_slots_.empty()) {
    e = free_slots_.back();
    free_slots_.pop_back();
    records_[e] = EdgeRecord{};
  } else {
    e = static_cast<EdgeId>(records_.size());
    records_.emplace_back();
  }
  records_[e].u = u;
  records_[e].v = v;

  if (level_[u] == level_[v]) {
    push_entry(u, kOutList, {v, e});
    push_entry(v, kOutList, {u, e});
  } else {
    VertexId lo = level_[u] < level_[v] ? u : v;
    VertexId hi = lo == u ? v : u;
    push_entry(lo, kOutList, {hi, e});
    push_entry(hi, level_[lo], {lo, e});
  }
  ++degree_[u];
  ++degree_[v];
  by_pair_[key] = e;
  ++num_edges_;
  return e;
}

void LevelledAdjacency::detach_edge(EdgeId e) {
  if (!edge_alive(e)) throw std::invalid_argument("adjacency: dead edge id");
  EdgeRecord& r = records_[e];
  remove_entry(r.u, r.at_u);
  remove_entry(r.v, r.at_v);
  --degree_[r.u];
  --degree_[r.v];
  by_pair_.erase(pair_key(r.u, r.v));
  r.u = r.v = -1;
  free_slots_.push_back(e);
  --num_edges_;
}

void LevelledAdjacency::split_out_list(VertexId v) {
  check_vertex(v);
  int i = level_[v];
  std::vector<Entry> old_out = std::move(out_[v]);
  out_[v].clear();
  level_[v] = i + 1;

  // Re-file v's own entries: same-level neighbours sink into bucket i.
  for (const Entry& en : old_out) {
    assert(level_[en.neighbour] >= i);
    push_entry(v, level_[en.neighbour] == i ? i : kOutList, en);
  }
  // v moved up past level i, so neighbours still out (level >= i+1) had v in
  // their bucket i; re-file v at its new level on their side.
  for (const Entry& en : out_[v]) {
    VertexId w = en.neighbour;
    remove_entry(w, handle_for(records_[en.edge], w));
    push_entry(w, level_[w] == i + 1 ? kOutList : i + 1, {v, en.edge});
  }
}

void LevelledAdjacency::merge_down(VertexId v) {
  check_vertex(v);
  int i = level_[v];
  if (i <= 1) throw std::logic_error("adjacency: merge below level 1");

  std::vector<Entry> old_out = std::move(out_[v]);
  out_[v].clear();
  std::vector<Entry> dropped;
  if (const auto* b = find_bucket(v, i - 1)) {
    dropped = *b;
    // Clear through remove-free path: just drop the bucket wholesale.
    auto& bs = buckets_[v];
    for (size_t x = 0; x < bs.size(); ++x) {
      if (bs[x].first == i - 1) {
        bs[x] = std::move(bs.back());
        bs.pop_back();
        break;
      }
    }
  }
  level_[v] = i - 1;

  for (const Entry& en : dropped) push_entry(v, kOutList, en);
  for (const Entry& en : old_out) push_entry(v, kOutList, en);
  // Old out-neighbours (level >= i) saw v at level i (their out-list when
  // equal, else bucket i); v now files under bucket i-1 on their side.
  for (const Entry& en : old_out) {
    VertexId w = en.neighbour;
    remove_entry(w, handle_for(records_[en.edge], w));
    push_entry(w, i - 1, {v, en.edge});
  }
}

int LevelledAdjacency::max_level() const {
  int k = 1;
  for (int32_t l : level_) k = std::max(k, static_cast<int>(l));
  return k;
}

bool LevelledAdjacency::validate(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  int64_t live = 0;
  for (EdgeId e = 0; e < arena_size(); ++e) {
    const EdgeRecord& r = records_[e];
    if (r.u < 0) continue;
    ++live;
    if (r.v < 0 || r.u >= capacity() || r.v >= capacity() || r.u == r.v)
      return fail("bad endpoints on edge " + std::to_string(e));
    auto it = by_pair_.find(pair_key(r.u, r.v));
    if (it == by_pair_.end() || it->second != e)
      return fail("pair index mismatch on edge " + std::to_string(e));
    struct SideCheck {
      VertexId at, other;
      Handle h;
    } sides[2] = {{r.u, r.v, r.at_u}, {r.v, r.u, r.at_v}};
    for (const auto& s : sides) {
      const std::vector<Entry>* list = nullptr;
      if (s.h.list == kOutList) {
        list = &out_[s.at];
        if (level_[s.at] > level_[s.other])
          return fail("out entry below own level at vertex " +
                      std::to_string(s.at));
      } else {
        list = find_bucket(s.at, s.h.list);
        if (!list) return fail("missing bucket referenced by edge handle");
        if (s.h.list != level_[s.other] || s.h.list >= level_[s.at])
          return fail("bucket tag inconsistent with neighbour level");
      }
      if (s.h.pos < 0 || s.h.pos >= static_cast<int32_t>(list->size()))
        return fail("handle position out of range");
      const Entry& en = (*list)[s.h.pos];
      if (en.neighbour != s.other || en.edge != e)
        return fail("handle does not resolve to its edge");
    }
  }
  if (live != num_edges_ ||
      static_cast<int64_t>(by_pair_.size()) != num_edges_)
    return fail("edge count caches disagree");

  for (VertexId v = 0; v < capacity(); ++v) {
    int64_t deg = static_cast<int64_t>(out_[v].size());
    std::set<int> seen_levels;
    for (const Bucket& b : buckets_[v]) {
      if (b.second.empty()) return fail("empty bucket retained");
      if (b.first < 1 || b.first >= level_[v])
        return fail("bucket level out of range at vertex " + std::to_string(v));
      if (!seen_levels.insert(b.first).second)
        return fail("duplicate bucket level");
      for (const Entry& en : b.second)
        if (level_[en.neighbour] != b.first)
          return fail("bucket member at wrong level");
      deg += static_cast<int64_t>(b.second.size());
    }
    for (const Entry& en : out_[v])
      if (level_[en.neighbour] < level_[v])
        return fail("out-list member below own level");
    if (deg != degree_[v])
      return fail("degree cache mismatch at vertex " + std::to_string(v));
    if (level_[v] < 1) return fail("level below 1");
  }
  return true;
}

}  // namespace dynec
