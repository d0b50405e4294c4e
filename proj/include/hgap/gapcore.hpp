#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "hgap/poly.hpp"

namespace hgap {

/// Delta(y) = prod_{i<j} (y - (p_i - p_j)^2), repeated gaps kept.
struct GapPolynomial {
  Poly delta;
  unsigned m = 0;  // distinct roots of the polynomial it came from
};

enum class SequenceKind { MinGap, MaxGap, Radius, EndpointMin };
enum class StopReason { ToleranceReached, MaxIterations, ClosedForm };

std::string_view name(SequenceKind k) noexcept;
std::string_view name(StopReason r) noexcept;

struct IterationOptions {
  Rat tol = pow2(-40);  // stop once |x_{k+1} - x_k| < tol * |x_k|
  std::size_t max_iter = 10000;
  /// Outward rounding of every iterate to this denominator bound; nullopt
  /// keeps the exact rational chain.
  std::optional<Int> denom_cap = Int(1) << 128;
};

/// Squared iterates of one monotone recurrence
///   x_{k+1} = x_k + 1 / S(x_k),  S(t) = sum_l 1 / (q_l - t).
struct GapSequence {
  SequenceKind kind = SequenceKind::MinGap;
  std::vector<Rat> iterates;
  StopReason stop = StopReason::MaxIterations;
  unsigned m = 0;
  /// MinGap only: first step whose relative growth fell below 4/(3m).
  std::optional<std::size_t> regime_step;

  const Rat& last() const { return iterates.back(); }
  std::size_t steps() const { return iterates.size() - 1; }
  bool increasing() const {
    return kind == SequenceKind::MinGap || kind == SequenceKind::EndpointMin;
  }
};

/// Runs the recurrence on the roots of q from `seed`. Increasing kinds
/// round iterates down, decreasing kinds round up, so every iterate stays a
/// strict bound on the limit. Reaching a root of q exactly ends the
/// sequence with ClosedForm.
GapSequence run_recurrence(SequenceKind kind, const Poly& q, const Rat& seed, unsigned m,
                           const IterationOptions& opt);

GapPolynomial gap_polynomial(const Poly& p_min);

/// S(t) = sum_{i<j} 1 / ((p_i - p_j)^2 - t) = -Delta'(t) / Delta(t).
Rat pair_sum(const GapPolynomial& gp, const Rat& t);

/// Z(eps) = -m / (2 eps) + eps S(eps^2).
Rat z_function(const GapPolynomial& gp, const Rat& eps);

/// mu_0^2 = 1 / S(0); a strict lower bound on the squared minimal gap.
Rat mu_seed(const GapPolynomial& gp);

/// M_0^2 = s_0 s_2 - s_1^2 = sum_{i<j} (p_j - p_i)^2 from power sums of p_min.
Rat max_gap_seed(const Poly& p_min);

GapSequence iterate_min_gap(const GapPolynomial& gp, const IterationOptions& opt = {});
GapSequence iterate_max_gap(const GapPolynomial& gp, const Poly& p_min,
                            const IterationOptions& opt = {});

struct GrowthDiagnostic {
  Rat growth;        // mu_{k+1}^2 / mu_k^2 - 1
  bool in_regime;    // growth < 4 / (3m)
  bool above_floor;  // growth > 4 / (3m^2)
};

GrowthDiagnostic stop_rule_min(unsigned m, const Rat& prev, const Rat& next);

/// Bracket (2 delta / ((m+1)(m-2)), (1 + 2/((m+1)(m-2))) delta) on the
/// relative decrease 1 - M_{k+1}^2 / M_k^2 once iteration is at precision delta.
std::pair<Rat, Rat> stop_rule_max(unsigned m, const Rat& delta);

}  // namespace hgap
