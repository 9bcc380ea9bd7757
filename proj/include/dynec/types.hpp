#pragma once

#include <cstdint>

namespace dynec {

using VertexId = int32_t;
using EdgeId = int32_t;

// Colours are 1-based; 0 means "no colour assigned".
using Colour = int32_t;
inline constexpr Colour kNoColour = 0;
inline constexpr EdgeId kNoEdge = -1;

// Unordered endpoint pair, stored canonically (a <= b).
struct EdgeKey {
  VertexId a = -1;
  VertexId b = -1;

  static EdgeKey canonical(VertexId u, VertexId v) {
    return u <= v ? EdgeKey{u, v} : EdgeKey{v, u};
  }
  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
};

}  // namespace dynec
