#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynec/stream.hpp"
#include "dynec/types.hpp"

namespace dynec {

enum class Algo {
  StaticDegeneracy,
  StaticHPartition,
  DynamicMax,
  DynamicAdaptive,
  GreedyBaseline,
};

Algo parse_algo(const std::string& name);  // throws on unknown names
std::string algo_name(Algo a);

struct RunOptions {
  Algo algo = Algo::DynamicAdaptive;
  // 0 disables mid-run audits; a final audit runs regardless.
  int64_t verify_every = 0;
  std::optional<int> alpha_max;    // dynamic-max sizing override
  std::optional<int> delta_max;    // audit hint override
  std::optional<double> epsilon;   // slack preset for the level thresholds
  std::optional<double> beta;
  // Constructive bound carried by a generated stream, if any.
  std::optional<int> declared_alpha;
};

struct MetricsRow {
  int64_t step = 0;
  int64_t live_edges = 0;
  int max_degree = 0;
  int alpha_bound = 0;  // declared when known, else measured by peeling
  Colour max_colour = 0;
  int64_t palette_searches = 0;
  int64_t recolour_steps = 0;
  int64_t level_moves = 0;
  double wall_ms = 0.0;
};

struct RunMetrics {
  std::string algo;
  std::vector<MetricsRow> rows;
  int64_t audits_run = 0;
  Colour max_colour_assigned = 0;
  Colour final_max_colour_in_use = 0;
  int64_t total_recolour_steps = 0;
  int64_t total_level_moves = 0;
  int64_t total_level_move_entries = 0;
  int64_t total_palette_searches = 0;
  int64_t adaptation_recolours = 0;
  int max_level = 1;
};

// Raised when a mid-run or final audit reports violations.
struct AuditFailure : std::runtime_error {
  explicit AuditFailure(const std::string& what) : std::runtime_error(what) {}
};
// Raised when options and stream do not fit (e.g. static algo on deletions).
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Replay the stream under the chosen algorithm, auditing every
// `verify_every` events and once at the end.  Static algorithms require an
// insert-only stream and colour the final graph in one pass.
RunMetrics run_stream(const UpdateStream& s, const RunOptions& opt);

// RFC 4180 CSV (CRLF rows, header first).
void write_metrics_csv(std::ostream& os, const RunMetrics& m);

}  // namespace dynec
