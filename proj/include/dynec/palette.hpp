#pragma once

#include <vector>

#include "dynec/types.hpp"

namespace dynec {

// Occupancy set over colours 1..capacity with owner tracking.
//
// Backing store is an implicit complete binary tree of subtree occupancy
// counts (sums_[1] is the root, leaf for colour c sits at capacity + c - 1),
// so membership flips, prefix counts and "first free" style descents are all
// O(log capacity).  Capacity is always a power of two >= 2 and is resized in
// amortized O(1) via the usual doubling / quarter-occupancy halving rules.
class Palette {
 public:
  Palette() { rebuild_empty(2); }

  int capacity() const { return cap_; }
  int used_count() const { return sums_[1]; }

  bool is_used(Colour c) const {
    return c >= 1 && c <= cap_ && sums_[cap_ + c - 1] != 0;
  }

  // Edge that holds colour c, or kNoEdge (colours beyond capacity are free).
  EdgeId owner_of(Colour c) const {
    if (c < 1 || c > cap_ || sums_[cap_ + c - 1] == 0) return kNoEdge;
    return owners_[c - 1];
  }

  void mark(Colour c, EdgeId owner);  // throws std::logic_error if taken
  EdgeId unmark(Colour c);            // returns the former owner

  // Number of used colours in the half-open range [i, j).
  // Requires 1 <= i <= j <= capacity + 1.
  int range_count(Colour i, Colour j) const;

  // Largest used colour, 0 when empty.
  Colour highest_used() const;

  // Resize for a vertex of degree `delta`: grow so capacity >= max(2,
  // 2*delta-1); shrink by halving while the top three quarters are untouched
  // and 2*delta-1 fits in half, never below 2.  Marks always survive.
  void ensure_capacity(int delta);

  // Grow (never shrink) so that colour c is addressable.
  void ensure_colour(Colour c);

  // Used colours in increasing order (O(capacity) walk, for audits/tests).
  std::vector<Colour> used_colours() const;

  // Recompute every internal node from the leaves; false on any mismatch.
  bool check_tree() const;

  // Smallest colour free in both palettes.  Requires equal capacities and
  // p.used + q.used + 1 <= capacity so a free colour exists; see
  // align_palettes.  Result is <= p.used + q.used + 1.
  friend Colour find_joint_free(const Palette& p, const Palette& q);

  // Grow both palettes to a common capacity with room for a joint free
  // colour (>= bit_ceil(p.used + q.used + 1)).
  friend void align_palettes(Palette& p, Palette& q);

 private:
  int cap_ = 0;
  std::vector<int32_t> sums_;   // 2*cap_ entries, index 0 unused
  std::vector<EdgeId> owners_;  // cap_ entries

  void rebuild_empty(int cap);
  void rebuild(int new_cap);
  void grow_to(int cap);
};

Colour find_joint_free(const Palette& p, const Palette& q);
void align_palettes(Palette& p, Palette& q);

}  // namespace dynec
