#include "hgap/localize.hpp"

#include "hgap/error.hpp"

namespace hgap {

Poly shifted_squares_polynomial(const Poly& p, const Rat& c) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "squares polynomial of zero");
  const Poly q = p.monic();
  const auto [e, o] = split_even_odd(taylor_shift(q, c));
  Poly r = e * e - Poly::monomial(1, 1) * o * o;
  if (q.degree() % 2 == 1) r = -r;
  return r;
}

Rat root_mean(const Poly& p) {
  if (p.degree() < 1) throw Error(Errc::BadDegree, "root mean needs degree >= 1");
  const Poly q = p.monic();
  return -q.coeff(static_cast<std::size_t>(q.degree() - 1)) / q.degree();
}

Poly centered_squares_polynomial(const Poly& p_min) {
  return shifted_squares_polynomial(p_min, root_mean(p_min));
}

Poly endpoint_squares_polynomial(const Poly& p_min, const Rat& c) {
  return shifted_squares_polynomial(p_min, c);
}

GapSequence iterate_radius(const Poly& theta, const Rat& seed, const IterationOptions& opt) {
  return run_recurrence(SequenceKind::Radius, theta, seed,
                        static_cast<unsigned>(theta.degree()), opt);
}

GapSequence iterate_endpoint_min(const Poly& sq, const IterationOptions& opt) {
  const auto m = static_cast<unsigned>(sq.degree());
  if (sq(0) == 0) {
    GapSequence seq;
    seq.kind = SequenceKind::EndpointMin;
    seq.m = m;
    seq.iterates = {Rat(0)};
    seq.stop = StopReason::ClosedForm;
    return seq;
  }
  const Rat seed = 1 / root_reciprocal_sum(sq, 0);
  return run_recurrence(SequenceKind::EndpointMin, sq, seed, m, opt);
}

namespace {

void check_radicand(const Rat& x, const Rat& rel_prec) {
  if (x < 0) throw Error(Errc::NegativeRadicand, "square root of " + to_string(x));
  if (rel_prec <= 0) throw Error(Errc::InvalidArgument, "square-root precision must be positive");
}

// floor(sqrt(x) * 2^bits)
Int scaled_isqrt(const Rat& x, unsigned long bits) {
  Int s = floor(x * Rat(Int(1) << (2 * bits)));
  Int r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r;
}

}  // namespace

Rat rational_sqrt_upper(const Rat& x, const Rat& rel_prec) {
  check_radicand(x, rel_prec);
  if (x == 0) return 0;
  if (auto e = exact_sqrt(x)) return *e;
  for (unsigned long bits = 32;; bits *= 2) {
    const Rat u = ratio(scaled_isqrt(x, bits) + 1, Int(1) << bits);
    if (u * u - x <= rel_prec * x) return u;
  }
}

Rat rational_sqrt_lower(const Rat& x, const Rat& rel_prec) {
  check_radicand(x, rel_prec);
  if (x == 0) return 0;
  if (auto e = exact_sqrt(x)) return *e;
  for (unsigned long bits = 32;; bits *= 2) {
    const Rat l = ratio(scaled_isqrt(x, bits), Int(1) << bits);
    if (x - l * l <= rel_prec * x) return l;
  }
}

Segment build_segment(const Poly& p_min, const SegmentOptions& opt) {
  if (p_min.degree() < 1) throw Error(Errc::BadDegree, "segment needs at least one root");
  Segment s;
  s.mean = root_mean(p_min);
  const Poly theta = centered_squares_polynomial(p_min);
  // Any term of the max-gap sequence dominates every centred square; the
  // seed sum_{i<j} (p_i - p_j)^2 is the cheapest one. It is 0 for one root.
  Rat seed = 0;
  if (p_min.degree() >= 2) seed = max_gap_seed(p_min);
  s.radius = iterate_radius(theta, seed, opt.radius);

  const Rat half_width = rational_sqrt_upper(s.radius.last(), opt.sqrt_prec);
  s.a = s.mean - half_width;
  s.b = s.mean + half_width;

  s.alpha = iterate_endpoint_min(endpoint_squares_polynomial(p_min, s.a), opt.endpoint);
  s.beta = iterate_endpoint_min(endpoint_squares_polynomial(p_min, s.b), opt.endpoint);
  s.refined_lo = s.a + rational_sqrt_lower(s.alpha.last(), opt.sqrt_prec);
  s.refined_hi = s.b - rational_sqrt_lower(s.beta.last(), opt.sqrt_prec);
  return s;
}

}  // namespace hgap
