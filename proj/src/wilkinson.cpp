#include "hgap/wilkinson.hpp"

#include "hgap/error.hpp"
#include "hgap/localize.hpp"

namespace hgap {

Poly wilkinson_poly(unsigned m, const Rat& mu) {
  if (m < 1) throw Error(Errc::BadDegree, "Wilkinson polynomial needs m >= 1");
  if (mu <= 0) throw Error(Errc::InvalidArgument, "root spacing must be positive");
  std::vector<Rat> roots;
  roots.reserve(m);
  for (unsigned l = 0; l < m; ++l) roots.push_back(mu * l);
  return poly_from_roots(roots);
}

Rat harmonic(unsigned n) {
  Rat h = 0;
  for (unsigned l = 1; l <= n; ++l) h += ratio(1, l);
  return h;
}

Rat harmonic2(unsigned n) {
  Rat h = 0;
  for (unsigned l = 1; l <= n; ++l) h += ratio(1, Int(l) * l);
  return h;
}

Rat w0_squared(unsigned m) {
  if (m < 2) throw Error(Errc::TooFewRoots, "w_0 needs m >= 2");
  Rat s = 0;
  for (unsigned l = 1; l < m; ++l) s += ratio(m - l, Int(l) * l);
  return 1 / s;
}

Rat w0_squared_harmonic(unsigned m) {
  if (m < 2) throw Error(Errc::TooFewRoots, "w_0 needs m >= 2");
  return 1 / (m * harmonic2(m - 1) - harmonic(m - 1));
}

Rat w_increment(unsigned m, const Rat& w2) {
  Rat s = 0;
  for (unsigned l = 1; l < m; ++l) s += Rat(m - l) / (Rat(Int(l) * l) - w2);
  return 1 / s;
}

namespace {

void push_eps(WilkinsonSpec& ws, const Rat& w2, const Rat& prec) {
  ws.eps_lower.push_back(1 - rational_sqrt_upper(w2, prec));
  ws.eps_upper.push_back(1 - rational_sqrt_lower(w2, prec));
}

Rat next_w2(unsigned m, const Rat& w2, const WilkinsonOptions& opt) {
  Rat next = w2 + w_increment(m, w2);
  if (opt.denom_cap) {
    Rat r = round_to_denominator(next, *opt.denom_cap, Rounding::Down);
    if (r > w2) next = std::move(r);
  }
  return next;
}

WilkinsonSpec start(unsigned m, const WilkinsonOptions& opt) {
  if (m < 3) throw Error(Errc::TooFewRoots, "the w recurrence is defined for m >= 3");
  WilkinsonSpec ws;
  ws.m = m;
  ws.w_trail.push_back(w0_squared(m));
  push_eps(ws, ws.w_trail.back(), opt.sqrt_prec);
  return ws;
}

}  // namespace

WilkinsonSpec w_recurrence(unsigned m, std::size_t steps, const WilkinsonOptions& opt) {
  WilkinsonSpec ws = start(m, opt);
  for (std::size_t k = 0; k < steps; ++k) {
    ws.w_trail.push_back(next_w2(m, ws.w_trail.back(), opt));
    push_eps(ws, ws.w_trail.back(), opt.sqrt_prec);
  }
  return ws;
}

WilkinsonSpec w_recurrence_until(unsigned m, const Rat& delta, std::size_t max_steps,
                                 const WilkinsonOptions& opt) {
  WilkinsonSpec ws = start(m, opt);
  while (ws.eps_upper.back() >= delta && ws.w_trail.size() <= max_steps) {
    ws.w_trail.push_back(next_w2(m, ws.w_trail.back(), opt));
    push_eps(ws, ws.w_trail.back(), opt.sqrt_prec);
  }
  return ws;
}

std::pair<Rat, Rat> rate_bounds(unsigned m, const Rat& eps) {
  if (m < 3) throw Error(Errc::TooFewRoots, "rate bounds are defined for m >= 3");
  if (eps <= 0 || eps >= 1) throw Error(Errc::BadEpsilon, "eps must lie in (0, 1)");
  return {4 * eps / (7 * m - 4), ratio(1, m - 1)};
}

std::vector<StepCheck> check_rate_bounds(const WilkinsonSpec& ws) {
  std::vector<StepCheck> out;
  for (std::size_t k = 0; k + 1 < ws.w_trail.size(); ++k) {
    StepCheck c;
    c.k = k;
    c.increment = w_increment(ws.m, ws.w_trail[k]);
    Rat eps = ws.eps_lower[k];
    if (eps <= 0) eps = 0;
    c.lower = 4 * eps / (7 * ws.m - 4);
    c.upper = ratio(1, ws.m - 1);
    c.ok = c.lower < c.increment && c.increment < c.upper;
    out.push_back(std::move(c));
  }
  return out;
}

Rat contraction_ratio(unsigned m) { return ratio(7 * m - 6, 7 * m - 4); }

std::pair<Rat, Rat> eps0_bounds(unsigned m, const Rat& rel_prec) {
  const Rat w2 = w0_squared(m);
  return {1 - rational_sqrt_upper(w2, rel_prec), 1 - rational_sqrt_lower(w2, rel_prec)};
}

std::size_t predicted_iterations(unsigned m, const Rat& delta) {
  if (m < 3) throw Error(Errc::TooFewRoots, "forecast is defined for m >= 3");
  if (delta <= 0) throw Error(Errc::InvalidArgument, "delta must be positive");
  const Rat half_span(ratio(7 * m - 4, 2));
  auto forecast = [&](const Rat& eps0) -> Int {
    if (delta >= eps0) return 0;
    return ceil(half_span * (1 - delta / eps0));
  };
  Rat prec = pow2(-32);
  for (int round = 0; round < 6; ++round) {
    const auto [lo, hi] = eps0_bounds(m, prec);
    const Int a = forecast(lo), b = forecast(hi);
    if (a == b) return a.get_ui();
    prec *= prec;
  }
  // Only an exact integer boundary can keep the bracket split; report the
  // larger (safe) forecast.
  return forecast(eps0_bounds(m, prec).second).get_ui();
}

std::size_t majorant_iterations(unsigned m, const Rat& delta) {
  if (m < 3) throw Error(Errc::TooFewRoots, "majorant is defined for m >= 3");
  if (delta <= 0) throw Error(Errc::InvalidArgument, "delta must be positive");
  const Rat q = contraction_ratio(m);
  Rat bound = eps0_bounds(m, pow2(-64)).second;
  std::size_t k = 0;
  while (bound >= delta) {
    bound *= q;
    ++k;
  }
  return k;
}

std::optional<std::size_t> observed_iterations(const WilkinsonSpec& ws, const Rat& delta) {
  for (std::size_t k = 0; k < ws.eps_upper.size(); ++k)
    if (ws.eps_upper[k] < delta) return k;
  return std::nullopt;
}

}  // namespace hgap
