#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dynec/types.hpp"

namespace dynec {

// Dynamic graph with a level assigned to every vertex (levels start at 1).
// Each vertex v keeps
//   * an out-list: neighbours at level >= level(v), and
//   * sparse down-buckets: for each level j < level(v) with at least one
//     neighbour there, the list of those neighbours.
// A same-level edge therefore appears in both endpoints' out-lists; an
// uneven edge sits in the lower endpoint's out-list and in the higher
// endpoint's bucket for the lower level.
//
// Every edge stores a positional handle into each endpoint's containing
// list, so detach and the split/merge level moves are O(1) per touched
// entry (removal is swap-with-last plus handle patch, like the rank trick
// in dense adjacency arrays).
class LevelledAdjacency {
 public:
  struct Entry {
    VertexId neighbour;
    EdgeId edge;
  };

  // list == kOutList, or the bucket's level (bucket levels are >= 1).
  struct Handle {
    int32_t list = kOutList;
    int32_t pos = -1;
  };
  static constexpr int32_t kOutList = 0;

  using Bucket = std::pair<int32_t, std::vector<Entry>>;  // (level, entries)

  explicit LevelledAdjacency(int n);

  int capacity() const { return static_cast<int>(level_.size()); }
  int64_t edge_count() const { return num_edges_; }
  // Arena size including freed slots; colour tables index by EdgeId.
  int arena_size() const { return static_cast<int>(records_.size()); }

  int level(VertexId v) const { return level_[check_vertex(v)]; }
  int degree(VertexId v) const { return degree_[check_vertex(v)]; }
  int out_degree(VertexId v) const {
    return static_cast<int>(out_[check_vertex(v)].size());
  }
  // Neighbours in the given bucket (0 when none).
  int down_degree(VertexId v, int j) const;
  // Neighbours at level >= level(v)-1: the quantity the maintenance
  // invariants compare against the down-threshold.
  int lower_shell_degree(VertexId v) const;

  bool edge_alive(EdgeId e) const {
    return e >= 0 && e < arena_size() && records_[e].u >= 0;
  }
  EdgeKey endpoints(EdgeId e) const;
  std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;

  // Throws std::invalid_argument on self-loops, out-of-range ids and
  // duplicates.  Returns the edge id (slots are recycled).
  EdgeId attach_edge(VertexId u, VertexId v);
  void detach_edge(EdgeId e);

  // Raise level(v) by one: same-level out-neighbours drop into a new bucket,
  // the rest stay out; v is re-filed in every remaining out-neighbour's
  // lists to match its new level.
  void split_out_list(VertexId v);

  // Lower level(v) by one, folding bucket level(v)-1 into the out-list.
  // Throws std::logic_error at level 1.
  void merge_down(VertexId v);

  const std::vector<Entry>& out_list(VertexId v) const {
    return out_[check_vertex(v)];
  }
  const std::vector<Bucket>& down_buckets(VertexId v) const {
    return buckets_[check_vertex(v)];
  }

  int max_level() const;

  template <typename F>
  void for_each_edge(F&& f) const {
    for (EdgeId e = 0; e < arena_size(); ++e)
      if (records_[e].u >= 0) f(e, records_[e].u, records_[e].v);
  }

  // Full structural self-check: handles resolve, list placement matches the
  // level rules, cached degrees/counts agree, pair index is exact.
  bool validate(std::string* why = nullptr) const;

 private:
  struct EdgeRecord {
    VertexId u = -1, v = -1;  // u < 0 marks a free slot
    Handle at_u, at_v;        // where the entry naming the other endpoint sits
  };

  std::vector<int32_t> level_;
  std::vector<int32_t> degree_;
  std::vector<std::vector<Entry>> out_;
  std::vector<std::vector<Bucket>> buckets_;  // sparse, unordered, non-empty
  std::vector<EdgeRecord> records_;
  std::vector<EdgeId> free_slots_;
  std::unordered_map<uint64_t, EdgeId> by_pair_;
  int64_t num_edges_ = 0;

  static uint64_t pair_key(VertexId u, VertexId v) {
    uint64_t a = static_cast<uint32_t>(u < v ? u : v);
    uint64_t b = static_cast<uint32_t>(u < v ? v : u);
    return (a << 32) | b;
  }

  VertexId check_vertex(VertexId v) const;
  Handle& handle_for(EdgeRecord& r, VertexId side);
  const std::vector<Entry>* find_bucket(VertexId v, int j) const;
  std::vector<Entry>& bucket_for_insert(VertexId v, int j);
  std::vector<Entry>& list_for(VertexId v, int32_t tag);
  void push_entry(VertexId owner, int32_t tag, Entry e);
  void remove_entry(VertexId owner, Handle h);
  void prune_bucket_if_empty(VertexId v, int j);
};

}  // namespace dynec
