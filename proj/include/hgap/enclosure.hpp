#pragma once

#include "hgap/rat.hpp"

namespace hgap {

/// Half-open rational interval (lo, hi] holding exactly one distinct root of
/// the polynomial it was isolated from.
struct RootEnclosure {
  Rat lo;
  Rat hi;
  unsigned sign_change_count = 1;

  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo < x && x <= hi; }
};

}  // namespace hgap
