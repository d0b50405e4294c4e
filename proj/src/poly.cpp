#include "hgap/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hgap/error.hpp"
#include "hgap/linalg.hpp"

namespace hgap {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t k) {
  std::vector<Rat> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Rat& r) { return Poly(std::vector<Rat>{-r, 1}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

const Rat& Poly::leading() const {
  if (c_.empty()) throw Error(Errc::ZeroPolynomial, "zero polynomial has no leading coefficient");
  return c_.back();
}

Poly Poly::monic() const {
  if (is_zero()) throw Error(Errc::ZeroPolynomial, "cannot normalise the zero polynomial");
  Poly r = *this;
  const Rat lc = leading();
  for (auto& a : r.c_) a /= lc;
  return r;
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& a : r.c_) a = -a;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& a : c_) a *= s;
  return *this;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rat& a = c_[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    Rat mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1 && k > 0;
    if (!unit) {
      if (mag.get_den() == 1 || k == 0)
        os << to_display(mag);
      else
        os << "(" << to_display(mag) << ")";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

DivMod divmod(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(Errc::ZeroPolynomial, "polynomial division by zero");
  if (num.degree() < den.degree()) return {Poly{}, num};
  std::vector<Rat> r = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dn = d.size() - 1;
  std::vector<Rat> q(r.size() - dn);
  const Rat& lc = d.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rat f = r[k + dn] / lc;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) r[k + j] -= f * d[j];
  }
  r.resize(dn);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& num, const Poly& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero())
    throw Error(Errc::InternalInvariant, "inexact polynomial division: " + num.to_string() +
                                             " / " + den.to_string());
  return q;
}

Rat eval(const Poly& p, const Rat& x) { return p(x); }

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return {};
  std::vector<Rat> d(p.coeffs().size() - 1);
  for (std::size_t k = 1; k < p.coeffs().size(); ++k)
    d[k - 1] = p.coeffs()[k] * static_cast<unsigned long>(k);
  return Poly(std::move(d));
}

Poly pow(const Poly& p, unsigned e) {
  Poly r = Poly::constant(1);
  Poly b = p;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

Poly poly_from_roots(std::span<const Rat> roots, std::span<const unsigned> mults) {
  if (roots.size() != mults.size())
    throw Error(Errc::InvalidArgument, "roots and multiplicities differ in length");
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (roots[i] == roots[j])
        throw Error(Errc::DuplicateRoot, "duplicate root " + to_display(roots[i]));
  Poly p = Poly::constant(1);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (mults[i] == 0) throw Error(Errc::InvalidArgument, "multiplicity must be positive");
    p *= pow(Poly::linear_root(roots[i]), mults[i]);
  }
  return p;
}

Poly poly_from_roots(std::span<const Rat> roots) {
  std::vector<unsigned> ones(roots.size(), 1);
  return poly_from_roots(roots, ones);
}

Poly taylor_shift(const Poly& p, const Rat& c) {
  std::vector<Rat> a = p.coeffs();
  const std::size_t n = a.size();
  if (n < 2 || c == 0) return p;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j-- > i;) a[j] += c * a[j + 1];
  return Poly(std::move(a));
}

Poly gcd(const Poly& p, const Poly& q) {
  if (p.is_zero() && q.is_zero())
    throw Error(Errc::ZeroPolynomial, "gcd of two zero polynomials");
  Poly a = p, b = q;
  while (!b.is_zero()) {
    Poly r = divmod(a, b).rem;
    a = std::move(b);
    b = r.is_zero() ? r : r.monic();
  }
  return a.monic();
}

Poly square_free_part(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "square-free part of the zero polynomial");
  if (p.degree() == 0) return Poly::constant(1);
  return exact_div(p, gcd(p, derivative(p))).monic();
}

Poly difference_resultant(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "difference resultant of zero");
  if (p.degree() < 2)
    throw Error(Errc::TooFewRoots, "difference resultant needs degree >= 2");
  const Poly f = p.monic();
  const auto m = static_cast<std::size_t>(f.degree());
  const std::size_t samples = m * m + 1;

  std::vector<Rat> zs, vals;
  zs.reserve(samples);
  vals.reserve(samples);
  const long half = static_cast<long>(samples / 2);
  for (std::size_t i = 0; i < samples; ++i) {
    Rat z(static_cast<long>(i) - half);
    zs.push_back(z);
    vals.push_back(resultant(f, taylor_shift(f, z)));
  }
  const Poly full = interpolate(zs, vals);

  const auto& c = full.coeffs();
  for (std::size_t k = 0; k < m && k < c.size(); ++k)
    if (c[k] != 0)
      throw Error(Errc::InternalInvariant, "difference resultant lacks the z^m factor");
  if (c.size() <= m || c[m] == 0)
    throw Error(Errc::NotSquareFree, "polynomial is not square-free: " + p.to_string());
  return Poly(std::vector<Rat>(c.begin() + static_cast<long>(m), c.end()));
}

Poly even_substitute(const Poly& p) {
  const auto& c = p.coeffs();
  std::vector<Rat> q;
  q.reserve(c.size() / 2 + 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % 2 == 1) {
      if (c[k] != 0)
        throw Error(Errc::NotEven, "odd coefficient of degree " + std::to_string(k) + " is nonzero");
    } else {
      q.push_back(c[k]);
    }
  }
  return Poly(std::move(q));
}

EvenOdd split_even_odd(const Poly& p) {
  std::vector<Rat> e, o;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) (k % 2 == 0 ? e : o).push_back(c[k]);
  return {Poly(std::move(e)), Poly(std::move(o))};
}

Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys) {
  if (xs.size() != ys.size())
    throw Error(Errc::InvalidArgument, "interpolation needs matching sample counts");
  const std::size_t n = xs.size();
  std::vector<Rat> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      const Rat dx = xs[i] - xs[i - j];
      if (dx == 0) throw Error(Errc::InvalidArgument, "interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
      if (i == j) break;
    }
  // Horner on the Newton basis, innermost node first.
  Poly r;
  for (std::size_t i = n; i-- > 0;) {
    r *= Poly::linear_root(xs[i]);
    r += Poly::constant(dd[i]);
  }
  return r;
}

Rat root_reciprocal_sum(const Poly& p, const Poly& dp, const Rat& t) {
  const Rat v = p(t);
  if (v == 0) throw Error(Errc::PoleHit, "evaluation point " + to_string(t) + " is a root");
  return -dp(t) / v;
}

Rat root_reciprocal_sum(const Poly& p, const Rat& t) {
  return root_reciprocal_sum(p, derivative(p), t);
}

}  // namespace hgap
