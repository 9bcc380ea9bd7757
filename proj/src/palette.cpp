#include "dynec/palette.hpp"

#include <bit>
#include <stdexcept>

namespace dynec {

void Palette::rebuild_empty(int cap) {
  cap_ = cap;
  sums_.assign(2 * static_cast<size_t>(cap), 0);
  owners_.assign(static_cast<size_t>(cap), kNoEdge);
}

void Palette::rebuild(int new_cap) {
  // Shrinks are guarded by highest_used() <= new_cap, so no mark is lost.
  std::vector<int32_t> sums(2 * static_cast<size_t>(new_cap), 0);
  std::vector<EdgeId> owners(static_cast<size_t>(new_cap), kNoEdge);
  int keep = new_cap < cap_ ? new_cap : cap_;
  for (int c = 1; c <= keep; ++c) {
    if (sums_[cap_ + c - 1]) {
      sums[new_cap + c - 1] = 1;
      owners[c - 1] = owners_[c - 1];
    }
  }
  for (int i = new_cap - 1; i >= 1; --i) sums[i] = sums[2 * i] + sums[2 * i + 1];
  cap_ = new_cap;
  sums_ = std::move(sums);
  owners_ = std::move(owners);
}

void Palette::grow_to(int cap) {
  if (cap > cap_) rebuild(cap);
}

void Palette::mark(Colour c, EdgeId owner) {
  if (c < 1) throw std::invalid_argument("palette: colour must be >= 1");
  if (c > cap_) throw std::logic_error("palette: colour beyond capacity");
  int i = cap_ + c - 1;
  if (sums_[i]) throw std::logic_error("palette: colour already in use");
  for (; i >= 1; i /= 2) ++sums_[i];
  owners_[c - 1] = owner;
}

EdgeId Palette::unmark(Colour c) {
  if (c < 1 || c > cap_ || sums_[cap_ + c - 1] == 0)
    throw std::logic_error("palette: colour not in use");
  for (int i = cap_ + c - 1; i >= 1; i /= 2) --sums_[i];
  EdgeId owner = owners_[c - 1];
  owners_[c - 1] = kNoEdge;
  return owner;
}

int Palette::range_count(Colour i, Colour j) const {
  if (i < 1 || j < i || j > cap_ + 1)
    throw std::invalid_argument("palette: bad range");
  int lo = cap_ + i - 1, hi = cap_ + j - 1;  // [lo, hi) over leaf slots
  int total = 0;
  while (lo < hi) {
    if (lo & 1) total += sums_[lo++];
    if (hi & 1) total += sums_[--hi];
    lo /= 2;
    hi /= 2;
  }
  return total;
}

Colour Palette::highest_used() const {
  if (sums_[1] == 0) return 0;
  int i = 1;
  while (i < cap_) i = sums_[2 * i + 1] ? 2 * i + 1 : 2 * i;
  return i - cap_ + 1;
}

void Palette::ensure_capacity(int delta) {
  if (delta < 0) throw std::invalid_argument("palette: negative degree");
  int needed = 2 * delta - 1;
  if (needed < 2) needed = 2;
  int target = static_cast<int>(std::bit_ceil(static_cast<unsigned>(needed)));
  if (target > cap_) {
    rebuild(target);
    return;
  }
  Colour top = highest_used();
  int t = cap_;
  while (t > 2 && top <= t / 4 && needed <= t / 2) t /= 2;
  if (t < cap_) rebuild(t);
}

void Palette::ensure_colour(Colour c) {
  if (c > cap_) grow_to(static_cast<int>(std::bit_ceil(static_cast<unsigned>(c))));
}

std::vector<Colour> Palette::used_colours() const {
  std::vector<Colour> out;
  out.reserve(static_cast<size_t>(sums_[1]));
  for (Colour c = 1; c <= cap_; ++c)
    if (sums_[cap_ + c - 1]) out.push_back(c);
  return out;
}

bool Palette::check_tree() const {
  for (int i = cap_ - 1; i >= 1; --i)
    if (sums_[i] != sums_[2 * i] + sums_[2 * i + 1]) return false;
  for (int c = 1; c <= cap_; ++c) {
    int bit = sums_[cap_ + c - 1];
    if (bit != 0 && bit != 1) return false;
    if ((bit == 0) != (owners_[c - 1] == kNoEdge)) return false;
  }
  return true;
}

namespace {

// Leftmost leaf under `node` (width leaves, first colour `lo`) that is zero
// in both trees.  A subtree saturated in either palette cannot contain a
// jointly free colour and is pruned whole.
Colour joint_descend(const Palette& p, const Palette& q,
                     const std::vector<int32_t>& ps,
                     const std::vector<int32_t>& qs, int node, Colour lo,
                     int width) {
  if (ps[node] == width || qs[node] == width) return kNoColour;
  if (ps[node] == 0 && qs[node] == 0) return lo;
  int half = width / 2;
  Colour c = joint_descend(p, q, ps, qs, 2 * node, lo, half);
  if (c != kNoColour) return c;
  return joint_descend(p, q, ps, qs, 2 * node + 1, lo + half, half);
}

}  // namespace

Colour find_joint_free(const Palette& p, const Palette& q) {
  if (p.cap_ != q.cap_)
    throw std::logic_error("find_joint_free: palettes not aligned");
  Colour c = joint_descend(p, q, p.sums_, q.sums_, 1, 1, p.cap_);
  if (c == kNoColour)
    throw std::logic_error("find_joint_free: no free colour within capacity");
  return c;
}

void align_palettes(Palette& p, Palette& q) {
  unsigned needed = static_cast<unsigned>(p.used_count() + q.used_count() + 1);
  int target = static_cast<int>(std::bit_ceil(needed < 2 ? 2u : needed));
  if (p.cap_ > target) target = p.cap_;
  if (q.cap_ > target) target = q.cap_;
  p.grow_to(target);
  q.grow_to(target);
}

}  // namespace dynec
