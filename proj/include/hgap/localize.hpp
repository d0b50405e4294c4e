#pragma once

#include "hgap/gapcore.hpp"
#include "hgap/poly.hpp"

namespace hgap {

/// prod_i (y - (p_i - c)^2) over the roots of p (with multiplicity):
/// C(x) = p(x + c) = E(x^2) + x O(x^2) gives (-1)^m (E(y)^2 - y O(y)^2).
Poly shifted_squares_polynomial(const Poly& p, const Rat& c);

/// Arithmetic mean of the roots, -c_{m-1} / m for monic p of degree m.
Rat root_mean(const Poly& p);

/// Theta(y) = prod_i (y - (p_i - mean)^2).
Poly centered_squares_polynomial(const Poly& p_min);

/// prod_i (y - (p_i - c)^2) for an endpoint c outside the root range.
Poly endpoint_squares_polynomial(const Poly& p_min, const Rat& c);

/// Decreasing recurrence on the centred squares from a dominating seed.
GapSequence iterate_radius(const Poly& theta, const Rat& seed, const IterationOptions& opt = {});

/// Increasing recurrence seeded with 1 / sum_i (p_i - c)^{-2}. If c is itself
/// a root the distance is exactly zero and the trail is [0].
GapSequence iterate_endpoint_min(const Poly& sq, const IterationOptions& opt = {});

/// u >= sqrt(x) with u^2 - x <= rel_prec * x; exact squares come back exact.
Rat rational_sqrt_upper(const Rat& x, const Rat& rel_prec);
/// l <= sqrt(x) with x - l^2 <= rel_prec * x.
Rat rational_sqrt_lower(const Rat& x, const Rat& rel_prec);

struct SegmentOptions {
  IterationOptions radius;
  IterationOptions endpoint;
  Rat sqrt_prec = pow2(-40);
};

/// All roots lie in [refined_lo, refined_hi], itself inside [a, b].
/// a and b use an upward square root of the radius bound; the endpoint
/// refinements use downward roots, so both steps stay sound.
struct Segment {
  Rat mean;
  GapSequence radius;
  Rat a;
  Rat b;
  GapSequence alpha;
  GapSequence beta;
  Rat refined_lo;
  Rat refined_hi;
};

Segment build_segment(const Poly& p_min, const SegmentOptions& opt = {});

}  // namespace hgap
