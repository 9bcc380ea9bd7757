#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

namespace dynec {

// Tuning knobs for the hierarchical level partition shared by both dynamic
// engines.  The fixed-cap engine uses one global pair of thresholds
// (down-threshold d, out-cap floor(beta*d_real)); the adaptive engine groups
// levels into blocks of L and derives per-level thresholds from the group
// index, so a vertex's budget shrinks as it sinks back to low levels.
struct PartitionConfig {
  double beta = 5.0;
  int d = 4;           // down-threshold for the fixed-cap engine
  int out_cap = 20;    // out-degree cap for the fixed-cap engine
  int k = 1;           // nominal level count (metadata, not a hard cap)
  int L = 0;           // group size; 0 => ungrouped (fixed-cap mode)
  int group_count = 0;
  std::optional<double> epsilon;

  int group_of(int level) const { return (level + L - 1) / L; }
  // Per-level down-threshold in grouped mode: doubles every group.
  int level_threshold(int level) const { return 1 << group_of(level); }
  int level_out_cap(int level) const {
    return static_cast<int>(std::floor(2.0 * beta * level_threshold(level)));
  }

  static int log2_ceil(int n) {
    int r = 0;
    while ((1 << r) < n) ++r;
    return r;
  }
  static int log2_floor(int n) {
    int r = 0;
    while ((2 << r) <= n) ++r;
    return r;
  }

  // Fixed global thresholds sized from a worst-case arboricity bound.
  // Default preset: d = 4*alpha, beta = 5.  With epsilon set the slack
  // preset is d = ceil((2+eps)*alpha), beta = 2+3*eps, and the out-cap
  // floors the real product beta*(2+eps)*alpha (tighter than beta*d).
  static PartitionConfig fixed(int n, int alpha_max,
                               std::optional<double> epsilon = std::nullopt,
                               std::optional<double> beta = std::nullopt) {
    if (alpha_max < 0) throw std::invalid_argument("alpha_max must be >= 0");
    int a = alpha_max < 1 ? 1 : alpha_max;
    PartitionConfig cfg;
    cfg.epsilon = epsilon;
    if (epsilon) {
      if (*epsilon <= 0) throw std::invalid_argument("epsilon must be > 0");
      cfg.beta = 2.0 + 3.0 * *epsilon;
      cfg.d = static_cast<int>(std::ceil((2.0 + *epsilon) * a));
      cfg.out_cap =
          static_cast<int>(std::floor(cfg.beta * (2.0 + *epsilon) * a));
    } else {
      cfg.beta = beta.value_or(5.0);
      if (cfg.beta < 2.0) throw std::invalid_argument("beta must be >= 2");
      cfg.d = 4 * a;
      cfg.out_cap = static_cast<int>(std::floor(cfg.beta * cfg.d));
    }
    cfg.k = log2_floor(n < 2 ? 2 : n) + 1;
    return cfg;
  }

  // Grouped thresholds for the adaptive engine: ceil(log2 n) groups of
  // L = 1 + ceil(log2 n) levels each (L widens with 1 + (2/eps)*log2 n when
  // epsilon is given).
  static PartitionConfig grouped(int n,
                                 std::optional<double> epsilon = std::nullopt,
                                 std::optional<double> beta = std::nullopt) {
    PartitionConfig cfg;
    cfg.epsilon = epsilon;
    int lg = log2_ceil(n < 2 ? 2 : n);
    if (lg < 1) lg = 1;
    if (epsilon) {
      if (*epsilon <= 0) throw std::invalid_argument("epsilon must be > 0");
      cfg.beta = 2.0 + 3.0 * *epsilon;
      cfg.L = 1 + static_cast<int>(std::ceil((2.0 / *epsilon) * lg));
    } else {
      cfg.beta = beta.value_or(5.0);
      if (cfg.beta < 2.0) throw std::invalid_argument("beta must be >= 2");
      cfg.L = 1 + lg;
    }
    cfg.group_count = lg;
    cfg.k = cfg.L * cfg.group_count;
    cfg.d = 2;  // smallest per-level threshold (group 1)
    cfg.out_cap = cfg.level_out_cap(1);
    return cfg;
  }
};

}  // namespace dynec
