#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dynec/simple_graph.hpp"
#include "dynec/types.hpp"

namespace dynec {

struct UpdateEvent {
  bool insert = true;
  VertexId u = 0, v = 0;
  friend bool operator==(const UpdateEvent&, const UpdateEvent&) = default;
};

// A replayable edge update sequence over vertices 0..capacity-1.  Text form:
//   # comment
//   n <capacity>
//   + <u> <v>
//   - <u> <v>
struct UpdateStream {
  int capacity = 0;
  std::vector<UpdateEvent> events;

  std::string to_text() const;
  friend bool operator==(const UpdateStream&, const UpdateStream&) = default;
};

struct StreamParseError : std::runtime_error {
  int line, column;
  StreamParseError(int line_, int column_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + msg),
        line(line_),
        column(column_) {}
};

// Parses the text form; throws StreamParseError pointing at the offending
// token.  Semantic stream errors (duplicate insert, delete of an absent
// edge, id out of range, self-loop) are caught here too so a parsed stream
// is always replayable.
UpdateStream parse_stream(std::string_view text);
UpdateStream load_stream(const std::string& path);

struct GeneratedStream {
  UpdateStream stream;
  std::optional<int> alpha_bound;  // worst-case arboricity by construction
};

// Seeded synthetic streams.  `kind` is one of
//   forest              attach/detach tree edges, arboricity 1
//   forests(f)          union of f forests, arboricity <= f
//   grid-planar         churn over a square grid's edges, arboricity <= 3
//   erdos-renyi(p)      churn towards p * n*(n-1)/2 live edges
//   sliding-window(w)   random inserts, deleting everything older than w
// All randomness comes from one mt19937_64; identical arguments give byte
// identical streams.
GeneratedStream generate_stream(const std::string& kind, int n, int64_t steps,
                                uint64_t seed);

// Graph of edges live after replaying the first `prefix` events.
SimpleGraph graph_after(const UpdateStream& s, size_t prefix);
// Graph over every endpoint pair that ever appears.
SimpleGraph union_graph(const UpdateStream& s);

}  // namespace dynec
