#include "hgap/hankel.hpp"

#include "hgap/error.hpp"

namespace hgap {

PowerSums power_sums_from_coeffs(const Poly& p, std::size_t count) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "power sums of the zero polynomial");
  const Poly q = p.monic();
  const auto n = static_cast<std::size_t>(q.degree());
  // a[j] is the coefficient of x^(n-j).
  std::vector<Rat> a(n + 1);
  for (std::size_t j = 0; j <= n; ++j) a[j] = q.coeff(n - j);

  PowerSums s;
  s.n = static_cast<unsigned>(n);
  s.t.resize(count);
  if (count == 0) return s;
  s.t[0] = static_cast<unsigned long>(n);
  for (std::size_t k = 1; k < count; ++k) {
    Rat acc = 0;
    for (std::size_t j = 1; j <= std::min(k, n); ++j)
      acc += j == k ? Rat(a[j] * static_cast<unsigned long>(k)) : Rat(a[j] * s.t[k - j]);
    s.t[k] = -acc;
  }
  return s;
}

PowerSums power_sums_from_hermitian(const Matrix& a, std::size_t count) {
  if (!a.square()) throw Error(Errc::NotHermitian, "matrix is not square");
  if (!a.symmetric()) throw Error(Errc::NotHermitian, "matrix is not symmetric");
  PowerSums s;
  s.n = static_cast<unsigned>(a.rows());
  s.t.reserve(count);
  Matrix power = Matrix::identity(a.rows());
  for (std::size_t k = 0; k < count; ++k) {
    s.t.push_back(power.trace());
    if (k + 1 < count) power = power * a;
  }
  return s;
}

Matrix embed_complex_hermitian(const Matrix& re, const Matrix& im) {
  if (!re.square() || !im.square() || re.rows() != im.rows())
    throw Error(Errc::NotHermitian, "real and imaginary parts must be square and equal-sized");
  const std::size_t n = re.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (re(i, j) != re(j, i))
        throw Error(Errc::NotHermitian, "real part is not symmetric");
      if (im(i, j) != -im(j, i))
        throw Error(Errc::NotHermitian, "imaginary part is not antisymmetric");
    }
  Matrix e(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      e(i, j) = re(i, j);
      e(i, n + j) = -im(i, j);
      e(n + i, j) = im(i, j);
      e(n + i, n + j) = re(i, j);
    }
  return e;
}

PowerSums power_sums_from_complex_hermitian(const Matrix& re, const Matrix& im,
                                            std::size_t count) {
  PowerSums s = power_sums_from_hermitian(embed_complex_hermitian(re, im), count);
  for (auto& v : s.t) v /= 2;
  s.n /= 2;
  return s;
}

Poly poly_from_power_sums(const PowerSums& sums, unsigned n) {
  if (sums.t.size() <= n)
    throw Error(Errc::NotEnoughSums, "need t_1..t_" + std::to_string(n));
  std::vector<Rat> a(n + 1);
  a[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    Rat acc = sums.t[k];
    for (unsigned j = 1; j < k; ++j) acc += a[j] * sums.t[k - j];
    a[k] = -acc / k;
  }
  std::vector<Rat> c(n + 1);
  for (unsigned j = 0; j <= n; ++j) c[n - j] = a[j];
  return Poly(std::move(c));
}

Matrix hankel_matrix(const PowerSums& sums, std::size_t k) {
  if (k > 0 && sums.t.size() < 2 * k - 1)
    throw Error(Errc::NotEnoughSums, "H_" + std::to_string(k) + " needs t_0..t_" +
                                         std::to_string(2 * k - 2));
  Matrix h(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) h(i, j) = sums.t[i + j];
  return h;
}

std::vector<Rat> hankel_determinants(const PowerSums& sums, std::size_t n) {
  if (n == 0) return {};
  return leading_principal_minors(hankel_matrix(sums, n));
}

unsigned distinct_root_count(std::span<const Rat> dets) {
  if (dets.empty()) throw Error(Errc::InvalidArgument, "empty determinant ladder");
  std::size_t m = 0;
  while (m < dets.size() && dets[m] != 0) {
    if (dets[m] < 0)
      throw Error(Errc::NotRealRooted, "not real-rooted: D_" + std::to_string(m + 1) + " = " +
                                           to_string(dets[m]) + " < 0");
    ++m;
  }
  for (std::size_t k = m; k < dets.size(); ++k)
    if (dets[k] != 0)
      throw Error(Errc::NotRealRooted, "not real-rooted: D_" + std::to_string(m + 1) +
                                           " = 0 but D_" + std::to_string(k + 1) + " = " +
                                           to_string(dets[k]));
  if (m == 0) throw Error(Errc::InconsistentRank, "D_1 vanishes: no roots");
  return static_cast<unsigned>(m);
}

MinimalPolynomial minimal_polynomial(const PowerSums& sums, unsigned m) {
  if (m == 0) throw Error(Errc::InvalidArgument, "minimal polynomial needs m >= 1");
  if (sums.t.size() < 2 * static_cast<std::size_t>(m))
    throw Error(Errc::NotEnoughSums, "minimal polynomial needs t_0..t_" + std::to_string(2 * m - 1));

  // Top m rows of the bordered matrix: [t_{i+j}], j = 0..m.
  Matrix top(m, m + 1);
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j <= m; ++j) top(i, j) = sums.t[i + j];

  std::vector<std::size_t> rows(m);
  for (unsigned i = 0; i < m; ++i) rows[i] = i;
  std::vector<Rat> minors(m + 1);
  for (unsigned skip = 0; skip <= m; ++skip) {
    std::vector<std::size_t> cols;
    cols.reserve(m);
    for (unsigned j = 0; j <= m; ++j)
      if (j != skip) cols.push_back(j);
    minors[skip] = determinant(top.select(rows, cols));
  }
  const Rat& dm = minors[m];
  if (dm == 0) throw Error(Errc::InconsistentRank, "D_" + std::to_string(m) + " vanishes");

  std::vector<Rat> coeffs(m + 1);
  for (unsigned j = 0; j <= m; ++j) {
    coeffs[j] = minors[j] / dm;
    if ((m + j) % 2 == 1) coeffs[j] = -coeffs[j];
  }
  MinimalPolynomial out{Poly(std::move(coeffs)), std::vector<Rat>(m)};
  for (unsigned k = 1; k <= m; ++k) out.sigma[k - 1] = minors[m - k] / dm;
  return out;
}

namespace {

HankelReport ladder(PowerSums sums, Poly characteristic) {
  HankelReport r;
  r.dets = hankel_determinants(sums, sums.n);
  r.m = distinct_root_count(r.dets);
  auto mp = minimal_polynomial(sums, r.m);
  const Poly sqf = square_free_part(characteristic);
  if (mp.poly != sqf)
    throw Error(Errc::InternalInvariant, "Hankel minimal polynomial " + mp.poly.to_string() +
                                             " differs from square-free part " + sqf.to_string());
  r.sums = std::move(sums);
  r.minimal = std::move(mp.poly);
  r.sigma = std::move(mp.sigma);
  r.characteristic = std::move(characteristic);
  return r;
}

}  // namespace

HankelReport analyze_polynomial(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "input polynomial is zero");
  if (p.degree() < 1) throw Error(Errc::BadDegree, "input polynomial is constant");
  const Poly q = p.monic();
  return ladder(power_sums_from_coeffs(q, 2 * static_cast<std::size_t>(q.degree())), q);
}

HankelReport analyze_power_sums(const PowerSums& sums) {
  if (sums.n == 0) throw Error(Errc::BadDegree, "empty spectrum");
  if (sums.t.size() < 2 * static_cast<std::size_t>(sums.n))
    throw Error(Errc::NotEnoughSums, "need 2n power sums");
  return ladder(sums, poly_from_power_sums(sums, sums.n));
}

namespace {

std::vector<Rat> moment_row(const Rat& x, std::size_t m) {
  std::vector<Rat> row(m);
  Rat v = 1;
  for (std::size_t k = 0; k < m; ++k) {
    row[k] = v;
    v *= x;
  }
  return row;
}

Rat quadratic_form(const Rat& xi, const Rat& xj, const Matrix& hm) {
  if (!hm.square()) throw Error(Errc::InvalidArgument, "Hankel matrix must be square");
  const std::size_t m = hm.rows();
  auto rhs = moment_row(xj, m);
  auto y = solve(hm, rhs);
  if (!y) throw Error(Errc::SingularHankel, "H_m is singular");
  const auto lhs = moment_row(xi, m);
  Rat acc = 0;
  for (std::size_t k = 0; k < m; ++k) acc += lhs[k] * (*y)[k];
  return acc;
}

}  // namespace

Rat gram_orthogonality(const Rat& pi, const Rat& pj, const Matrix& hm) {
  return quadratic_form(pi, pj, hm);
}

MultiplicityResult multiplicity(const RootEnclosure& enclosure, const Poly& minimal,
                                const Matrix& hm, const Rat& tol, unsigned max_refinements) {
  RootEnclosure enc = enclosure;
  for (unsigned it = 0; it <= max_refinements; ++it) {
    const Rat fhi = minimal(enc.hi);
    const bool exact = fhi == 0;
    const Rat x = exact ? enc.hi : enc.midpoint();
    const Rat value = quadratic_form(x, x, hm);
    if (value > 0) {
      Int r = floor(1 / value + Rat(1, 2));
      if (r < 1) r = 1;
      const Rat target(Int(1), r);
      if (abs(value - target) < tol)
        return {static_cast<unsigned>(r.get_ui()), x, value, enc};
    }
    if (exact) break;
    const Rat mid = enc.midpoint();
    const Rat fm = minimal(mid);
    if (fm == 0) {
      enc.hi = mid;
    } else if ((fm > 0) == (fhi > 0)) {
      enc.hi = mid;
    } else {
      enc.lo = mid;
    }
  }
  throw Error(Errc::MultiplicityUnresolved,
              "no integer multiplicity within tolerance near " + to_string(enc.midpoint()));
}

}  // namespace hgap
