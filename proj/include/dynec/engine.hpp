#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dynec/adjacency.hpp"
#include "dynec/palette.hpp"
#include "dynec/partition_config.hpp"
#include "dynec/types.hpp"

namespace dynec {

struct EngineTestAccess;

struct EngineStats {
  int64_t palette_searches = 0;
  int64_t recolour_steps = 0;      // colour assignments, cascades included
  int64_t cascade_conflicts = 0;   // assignments that displaced another edge
  int64_t level_moves = 0;
  int64_t level_move_entries = 0;  // list entries touched by level moves
  int64_t increments = 0;
  int64_t decrements = 0;
  int64_t adaptation_recolours = 0;
  Colour max_colour_assigned = 0;
  int max_degree_seen = 0;
};

// Fully dynamic proper edge colouring over a levelled vertex partition.
//
// Two invariants are restored after every update by recover():
//   1. out_degree(v) <= out_cap(v)          (split the out-list when broken)
//   2. level(v) > 1 implies lower_shell_degree(v) >= down_threshold(v)
//                                           (merge one level down when broken)
// Colours are assigned by a joint search over the lower endpoint's
// out-palette and the higher endpoint's full palette; a found colour can
// collide with one edge below the lower endpoint, which is displaced and
// recoloured in turn, walking strictly down the levels.
//
// FixedCap mode uses one global threshold pair sized from an arboricity
// bound.  Adaptive mode derives both from the vertex's level group, pays two
// extra probe scans per deletion to catch edges whose budget shrank, and
// recolours every out-edge of a vertex that drops a level, which keeps each
// colour within the current (not historical) degrees.
class LevelEngine {
 public:
  enum class Mode { FixedCap, Adaptive };

  LevelEngine(int n, Mode mode, PartitionConfig cfg);
  virtual ~LevelEngine() = default;

  void insert(VertexId u, VertexId v);
  void remove(VertexId u, VertexId v);
  bool has_edge(VertexId u, VertexId v) const {
    return adj_.edge_between(u, v).has_value();
  }

  // Maintenance steps exposed with their preconditions checked, for drivers
  // that want to replay them one at a time.  insert()/remove() already run
  // them internally.
  void recolour(VertexId u, VertexId v);  // edge must exist and be uncoloured
  void recover();                         // drains the dirty queue; idempotent
  void increment(VertexId v);             // requires invariant 1 broken at v
  void decrement(VertexId v);             // requires invariant 2 broken at v

  Mode mode() const { return mode_; }
  const PartitionConfig& config() const { return cfg_; }
  const LevelledAdjacency& adjacency() const { return adj_; }
  const EngineStats& stats() const { return stats_; }

  Colour colour_of(EdgeId e) const;
  Colour colour_between(VertexId u, VertexId v) const;
  const Palette& vertex_palette(VertexId v) const { return full_pal_[v]; }
  const Palette& out_palette(VertexId v) const { return out_pal_[v]; }

  int out_cap(VertexId v) const {
    return mode_ == Mode::Adaptive ? cfg_.level_out_cap(adj_.level(v))
                                   : cfg_.out_cap;
  }
  int down_threshold(VertexId v) const {
    return mode_ == Mode::Adaptive ? cfg_.level_threshold(adj_.level(v))
                                   : cfg_.d;
  }
  // Invariant-3 budget of an edge in adaptive mode: max endpoint degree plus
  // the lower endpoint's out-cap.
  Colour colour_budget(EdgeId e) const;

  int max_level() const { return adj_.max_level(); }
  bool has_pending_dirty() const { return !dirty_.empty(); }
  Colour max_colour_in_use() const;

 protected:
  friend struct EngineTestAccess;

  Mode mode_;
  PartitionConfig cfg_;
  LevelledAdjacency adj_;
  std::vector<Colour> colour_;  // by edge id
  std::vector<Palette> full_pal_, out_pal_;
  std::vector<VertexId> dirty_;
  std::vector<char> in_dirty_;
  EngineStats stats_;

  bool is_dirty(VertexId v) const;
  void queue_if_dirty(VertexId v);
  void uncolour_edge(EdgeId e);
  void set_colour(EdgeId e, Colour c);
  void recolour_edge(EdgeId e);
  void increment_level(VertexId v);
  void decrement_level(VertexId v);
  void rebuild_out_palette(VertexId v);
  void adaptation_pass(VertexId w);
};

// Fixed global thresholds from worst-case bounds on the stream: the
// down-threshold is 4*alpha_max (or the epsilon preset) and every colour
// stays within delta_max + out_cap.  delta_max is kept as an audit hint;
// palettes grow on demand.
class DynamicMaxEngine : public LevelEngine {
 public:
  DynamicMaxEngine(int n, int alpha_max, int delta_max,
                   std::optional<double> epsilon = std::nullopt,
                   std::optional<double> beta = std::nullopt)
      : LevelEngine(n, Mode::FixedCap,
                    PartitionConfig::fixed(n, alpha_max, epsilon, beta)),
        alpha_max_(alpha_max < 1 ? 1 : alpha_max),
        delta_max_(delta_max) {}
  DynamicMaxEngine(int n, PartitionConfig cfg)
      : LevelEngine(n, Mode::FixedCap, cfg) {}

  int alpha_max() const { return alpha_max_; }
  int delta_max() const { return delta_max_; }

 private:
  int alpha_max_ = 1;
  int delta_max_ = 0;
};

// No arboricity estimate needed up front: per-level budgets double every
// group of levels, so colours track the current degrees and density.
class AdaptiveEngine : public LevelEngine {
 public:
  explicit AdaptiveEngine(int n, std::optional<double> epsilon = std::nullopt,
                          std::optional<double> beta = std::nullopt)
      : LevelEngine(n, Mode::Adaptive,
                    PartitionConfig::grouped(n, epsilon, beta)) {}
  AdaptiveEngine(int n, PartitionConfig cfg)
      : LevelEngine(n, Mode::Adaptive, cfg) {}

  // decrement() already recolours the whole out-list in adaptive mode; alias
  // kept so drivers can name the adaptive step explicitly.
  void adaptive_decrement(VertexId v) { decrement(v); }
};

}  // namespace dynec
