#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hgap/poly.hpp"

namespace hgap {

/// Generalised Wilkinson polynomial prod_{l=0}^{m-1} (x - mu l).
Poly wilkinson_poly(unsigned m, const Rat& mu);

/// w_0^2(m) = (sum_{l=1}^{m-1} (m - l) / l^2)^{-1}.
///
/// The closed form [m pi^2/6 - m psi'(m) - gamma - psi(m)]^{-1} reduces to
/// this sum at integer m because psi(m) + gamma = H_{m-1} and
/// pi^2/6 - psi'(m) = H^{(2)}_{m-1}; see w0_squared_harmonic().
Rat w0_squared(unsigned m);

/// The same value assembled as (m H^{(2)}_{m-1} - H_{m-1})^{-1}.
Rat w0_squared_harmonic(unsigned m);

/// H_n = sum_{l=1}^n 1/l and H^{(2)}_n = sum_{l=1}^n 1/l^2.
Rat harmonic(unsigned n);
Rat harmonic2(unsigned n);

/// (sum_{l=1}^{m-1} (m - l) / (l^2 - w2))^{-1}: one step of the normalised
/// recurrence w_{k+1}^2 = w_k^2 + increment.
Rat w_increment(unsigned m, const Rat& w2);

struct WilkinsonOptions {
  std::optional<Int> denom_cap = Int(1) << 128;  // rounding is downward
  Rat sqrt_prec = pow2(-64);
};

struct WilkinsonSpec {
  unsigned m = 0;
  Rat mu = 1;
  std::vector<Rat> w_trail;  // w_k^2
  /// eps_k = 1 - w_k bracketed through rational square roots of w_k^2.
  std::vector<Rat> eps_lower;
  std::vector<Rat> eps_upper;
};

WilkinsonSpec w_recurrence(unsigned m, std::size_t steps, const WilkinsonOptions& opt = {});

/// Iterates until the certified eps_upper drops below delta (or max_steps).
WilkinsonSpec w_recurrence_until(unsigned m, const Rat& delta, std::size_t max_steps,
                                 const WilkinsonOptions& opt = {});

/// (4 eps / (7m - 4), 1 / (m - 1)): bracket on w_{k+1}^2 - w_k^2 when w_k = 1 - eps.
std::pair<Rat, Rat> rate_bounds(unsigned m, const Rat& eps);

/// Per-step check of the increment bracket; the lower bound uses the
/// smallest admissible eps so the check never asserts more than is known.
struct StepCheck {
  std::size_t k = 0;
  Rat increment;
  Rat lower;
  Rat upper;
  bool ok = false;
};
std::vector<StepCheck> check_rate_bounds(const WilkinsonSpec& ws);

/// q(m) = (7m - 6) / (7m - 4), the contraction of the geometric majorant.
Rat contraction_ratio(unsigned m);

/// Bracket on eps_0(m) = 1 - w_0(m).
std::pair<Rat, Rat> eps0_bounds(unsigned m, const Rat& rel_prec);

/// ceil((7m - 4)/2 * (1 - delta / eps_0)), 0 once delta >= eps_0.
/// This is the linearised forecast; it can undercount for m >= 4, see
/// majorant_iterations() for a guaranteed bound.
std::size_t predicted_iterations(unsigned m, const Rat& delta);

/// Smallest k with eps_0 q(m)^k < delta (eps_0 bounded from above).
std::size_t majorant_iterations(unsigned m, const Rat& delta);

/// First k with eps_upper[k] < delta, if the trail reaches it.
std::optional<std::size_t> observed_iterations(const WilkinsonSpec& ws, const Rat& delta);

}  // namespace hgap
