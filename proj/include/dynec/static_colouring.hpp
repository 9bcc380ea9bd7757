#pragma once

#include <optional>
#include <vector>

#include "dynec/simple_graph.hpp"
#include "dynec/types.hpp"

namespace dynec {

struct DegeneracyOrder {
  std::vector<VertexId> order;  // removal order, lowest-degree-first peeling
  int degeneracy = 0;           // max degree at time of removal
};

// Partition of the vertices into levels 1..level_count, built by repeatedly
// peeling every vertex whose remaining degree is at most the threshold.
struct StaticHPartition {
  std::vector<int> level;  // per vertex, 1-based
  int level_count = 0;
  int threshold = 0;  // out-degree bound d that held during construction
};

struct EdgeColouring {
  std::vector<Colour> colour;  // indexed by edge id, kNoColour = unassigned
  Colour max_colour = 0;
};

// Min-degree peeling with ties broken towards the lowest vertex id.
DegeneracyOrder degeneracy_order(const SimpleGraph& g);

// Colour edges scanning the order right-to-left; each edge gets the smallest
// colour free around both endpoints.  Throws std::invalid_argument unless
// `ord.order` is a permutation of the vertices.
EdgeColouring colour_by_order(const SimpleGraph& g, const DegeneracyOrder& ord);

// Peel with threshold 4*alpha (or ceil((2+epsilon)*alpha)).  Throws
// std::invalid_argument if alpha < 1 or too small for peeling to make
// progress.
StaticHPartition build_hpartition(const SimpleGraph& g, int alpha,
                                  std::optional<double> epsilon = std::nullopt);

// Colour level-by-level from the top; within a level vertices go in
// ascending id, their uncoloured edges towards levels >= their own in
// ascending neighbour id.  Validates the partition first.
EdgeColouring colour_by_partition(const SimpleGraph& g,
                                  const StaticHPartition& part);

}  // namespace dynec
