#include "hgap/gapcore.hpp"

#include "hgap/error.hpp"
#include "hgap/hankel.hpp"

namespace hgap {

std::string_view name(SequenceKind k) noexcept {
  switch (k) {
    case SequenceKind::MinGap: return "MinGap";
    case SequenceKind::MaxGap: return "MaxGap";
    case SequenceKind::Radius: return "Radius";
    case SequenceKind::EndpointMin: return "EndpointMin";
  }
  return "Unknown";
}

std::string_view name(StopReason r) noexcept {
  switch (r) {
    case StopReason::ToleranceReached: return "ToleranceReached";
    case StopReason::MaxIterations: return "MaxIterations";
    case StopReason::ClosedForm: return "ClosedForm";
  }
  return "Unknown";
}

GapSequence run_recurrence(SequenceKind kind, const Poly& q, const Rat& seed, unsigned m,
                           const IterationOptions& opt) {
  GapSequence seq;
  seq.kind = kind;
  seq.m = m;
  seq.iterates.push_back(seed);
  const bool up = seq.increasing();
  const Poly dq = derivative(q);

  Rat cur = seed;
  for (std::size_t k = 0;; ++k) {
    const Rat qv = q(cur);
    if (qv == 0) {
      seq.stop = StopReason::ClosedForm;
      break;
    }
    if (k == opt.max_iter) {
      seq.stop = StopReason::MaxIterations;
      break;
    }
    const Rat s = -dq(cur) / qv;
    if (up ? s <= 0 : s >= 0)
      throw Error(Errc::InternalInvariant, std::string(name(kind)) + " iterate " + to_string(cur) +
                                               " is past its limit");
    Rat next = cur + 1 / s;
    if (opt.denom_cap) {
      Rat r = round_to_denominator(next, *opt.denom_cap, up ? Rounding::Down : Rounding::Up);
      if (up ? r > cur : r < cur) next = std::move(r);
    }
    seq.iterates.push_back(next);
    const bool done = abs(next - cur) < opt.tol * abs(cur);
    cur = std::move(next);
    if (done) {
      seq.stop = q(cur) == 0 ? StopReason::ClosedForm : StopReason::ToleranceReached;
      break;
    }
  }
  return seq;
}

GapPolynomial gap_polynomial(const Poly& p_min) {
  if (p_min.is_zero()) throw Error(Errc::ZeroPolynomial, "gap polynomial of zero");
  if (p_min.degree() < 2)
    throw Error(Errc::TooFewRoots, "gap polynomial needs at least two distinct roots");
  GapPolynomial gp{even_substitute(difference_resultant(p_min.monic())),
                   static_cast<unsigned>(p_min.degree())};
  if (gp.delta(0) == 0)
    throw Error(Errc::InternalInvariant, "gap polynomial vanishes at zero");
  return gp;
}

Rat pair_sum(const GapPolynomial& gp, const Rat& t) {
  return root_reciprocal_sum(gp.delta, t);
}

Rat z_function(const GapPolynomial& gp, const Rat& eps) {
  if (eps == 0) throw Error(Errc::ZeroEpsilon, "Z is undefined at eps = 0");
  return Rat(-Rat(gp.m) / (2 * eps)) + eps * pair_sum(gp, eps * eps);
}

Rat mu_seed(const GapPolynomial& gp) {
  if (gp.m < 2) throw Error(Errc::TooFewRoots, "minimal gap needs two distinct roots");
  return 1 / pair_sum(gp, 0);
}

Rat max_gap_seed(const Poly& p_min) {
  if (p_min.degree() < 2)
    throw Error(Errc::TooFewRoots, "maximal gap needs two distinct roots");
  const PowerSums s = power_sums_from_coeffs(p_min, 3);
  return s.t[0] * s.t[2] - s.t[1] * s.t[1];
}

GapSequence iterate_min_gap(const GapPolynomial& gp, const IterationOptions& opt) {
  GapSequence seq = run_recurrence(SequenceKind::MinGap, gp.delta, mu_seed(gp), gp.m, opt);
  if (gp.m >= 3) {
    for (std::size_t k = 0; k + 1 < seq.iterates.size(); ++k)
      if (stop_rule_min(gp.m, seq.iterates[k], seq.iterates[k + 1]).in_regime) {
        seq.regime_step = k;
        break;
      }
  }
  return seq;
}

GapSequence iterate_max_gap(const GapPolynomial& gp, const Poly& p_min,
                            const IterationOptions& opt) {
  return run_recurrence(SequenceKind::MaxGap, gp.delta, max_gap_seed(p_min), gp.m, opt);
}

GrowthDiagnostic stop_rule_min(unsigned m, const Rat& prev, const Rat& next) {
  if (m < 3) throw Error(Errc::TooFewRoots, "growth regime is defined for m >= 3");
  if (prev <= 0) throw Error(Errc::InvalidArgument, "previous iterate must be positive");
  GrowthDiagnostic d;
  d.growth = next / prev - 1;
  d.in_regime = d.growth < ratio(4, 3 * m);
  d.above_floor = d.growth > ratio(4, 3 * m * m);
  return d;
}

std::pair<Rat, Rat> stop_rule_max(unsigned m, const Rat& delta) {
  if (m < 3) throw Error(Errc::TooFewRoots, "stopping bracket is defined for m >= 3");
  if (delta < 0) throw Error(Errc::InvalidArgument, "precision must be non-negative");
  const Rat c = ratio(2, (m + 1) * (m - 2));
  return {c * delta, (1 + c) * delta};
}

}  // namespace hgap
