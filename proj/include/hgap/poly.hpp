#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "hgap/rat.hpp"

namespace hgap {

/// Dense univariate polynomial over Rat. coeffs()[k] multiplies x^k; the
/// zero polynomial has no coefficients and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const Rat& c);
  static Poly monomial(const Rat& c, std::size_t k);
  /// x - r
  static Poly linear_root(const Rat& r);

  bool is_zero() const noexcept { return c_.empty(); }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rat>& coeffs() const noexcept { return c_; }
  /// Coefficient of x^k, zero past the degree.
  Rat coeff(std::size_t k) const;
  const Rat& leading() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }

  Poly monic() const;

  /// Horner evaluation.
  Rat operator()(const Rat& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly&, const Poly&) = default;

  /// "x^3 - 4x^2 + 3x"; non-integer coefficients are parenthesised.
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rat> c_;
};

struct DivMod {
  Poly quot;
  Poly rem;
};

DivMod divmod(const Poly& num, const Poly& den);
/// Exact quotient; throws InternalInvariant when the remainder is nonzero.
Poly exact_div(const Poly& num, const Poly& den);

Rat eval(const Poly& p, const Rat& x);
Poly derivative(const Poly& p);
Poly pow(const Poly& p, unsigned e);

/// Monic product of (x - roots[i])^mults[i]; roots must be pairwise distinct.
Poly poly_from_roots(std::span<const Rat> roots, std::span<const unsigned> mults);
Poly poly_from_roots(std::span<const Rat> roots);

/// q(x) = p(x + c).
Poly taylor_shift(const Poly& p, const Rat& c);

/// Monic gcd by the Euclidean remainder sequence over Q.
Poly gcd(const Poly& p, const Poly& q);

/// p / gcd(p, p'), monic.
Poly square_free_part(const Poly& p);

/// R(z) = Res_x(p(x), p(x + z)) / z^m = prod_{i<j} (z^2 - (p_i - p_j)^2)
/// for monic square-free p of degree m >= 2. The resultant is interpolated
/// from m^2 + 1 integer samples, each a Sylvester determinant.
Poly difference_resultant(const Poly& p);

/// q with q(z^2) = p(z); p must have zero odd coefficients.
Poly even_substitute(const Poly& p);

struct EvenOdd {
  Poly even;  // E with p(x) = E(x^2) + x O(x^2)
  Poly odd;   // O
};
EvenOdd split_even_odd(const Poly& p);

/// Newton-form interpolation through (xs[i], ys[i]); the xs must be distinct.
Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

/// Sum over the roots q_l of p (with multiplicity) of 1 / (q_l - t),
/// i.e. -p'(t) / p(t). Throws PoleHit when p(t) == 0.
Rat root_reciprocal_sum(const Poly& p, const Rat& t);
Rat root_reciprocal_sum(const Poly& p, const Poly& dp, const Rat& t);

}  // namespace hgap
