#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dynec/simple_graph.hpp"
#include "dynec/types.hpp"

namespace dynec {

class LevelEngine;

namespace oracle {

struct Violation {
  std::string kind;  // "proper", "inv1", "inv2", "inv3", "palette-mismatch", ...
  std::string detail;
};

struct AuditReport {
  std::vector<Violation> violations;
  std::map<std::string, int64_t> checks_passed;  // per kind

  bool clean() const { return violations.empty(); }
  std::string to_string() const;
};

// Every edge coloured (>= 1) and no two edges sharing an endpoint share a
// colour.  `colour` is indexed by edge id.
AuditReport verify_proper(const SimpleGraph& g,
                          const std::vector<Colour>& colour);

// Exact arboricity by subset enumeration: max over vertex sets U, |U| >= 2,
// of ceil(|E(U)| / (|U| - 1)).  Throws std::invalid_argument when n > 16.
int exact_arboricity(const SimpleGraph& g);

// Degeneracy by min-degree peeling; sits in [arboricity, 2*arboricity - 1].
int degeneracy_bound(const SimpleGraph& g);

// Smallest colour >= 1 absent from both lists, by linear scan.
Colour min_free_colour(std::span<const Colour> a, std::span<const Colour> b);

// Deep structural audit of a live engine: adjacency invariants, properness,
// out-degree caps, shell thresholds, palette-vs-colour agreement, per-edge
// colour budgets (adaptive mode), empty dirty queue.
AuditReport audit_engine(const LevelEngine& eng);

// Live edges and their colours as a standalone graph (for oracles).
std::pair<SimpleGraph, std::vector<Colour>> snapshot(const LevelEngine& eng);

}  // namespace oracle
}  // namespace dynec
