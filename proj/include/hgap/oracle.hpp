#pragma once

#include <span>
#include <vector>

#include "hgap/enclosure.hpp"
#include "hgap/poly.hpp"

// Independent ground truth for tests and diagnostics. Nothing here is on
// the main computation path, and nothing here touches the Hankel code.
namespace hgap::oracle {

std::vector<Poly> sturm_sequence(const Poly& p);

/// Sign changes of the sequence at x, zeros skipped.
unsigned sign_changes(std::span<const Poly> seq, const Rat& x);

/// Distinct roots in (lo, hi] of the square-free head of seq.
unsigned count_roots(std::span<const Poly> seq, const Rat& lo, const Rat& hi);

/// 1 + max_k |c_k / c_lead|; every root is strictly inside (-B, B).
Rat cauchy_bound(const Poly& p);

/// One enclosure per distinct real root, ascending, each no wider than width.
std::vector<RootEnclosure> isolate_real_roots(const Poly& p, const Rat& width);

struct GapInterval {
  Rat lo;
  Rat hi;
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

struct BruteForceGaps {
  GapInterval min_gap;
  GapInterval max_gap;
};

/// Interval bounds on the minimal and maximal root gap from sorted enclosures.
BruteForceGaps brute_force_gaps(std::span<const RootEnclosure> encl);

struct RootMultiplicity {
  RootEnclosure where;
  unsigned multiplicity = 0;
};

/// Multiplicities from the repeated-gcd chain p, gcd(p, p'), ...; the
/// factor of roots with multiplicity exactly k is isolated separately.
std::vector<RootMultiplicity> multiplicities_via_gcd(const Poly& p, const Rat& width);

}  // namespace hgap::oracle
