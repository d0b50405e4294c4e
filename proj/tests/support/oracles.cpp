#include "support/oracles.hpp"

#include <algorithm>
#include <set>

namespace hgap::testing {

unsigned RootSet::degree() const {
  unsigned d = 0;
  for (unsigned r : mults) d += r;
  return d;
}

std::vector<Rat> RootSet::with_multiplicity() const {
  std::vector<Rat> out;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (unsigned k = 0; k < mults[i]; ++k) out.push_back(roots[i]);
  return out;
}

Poly expand_via_vieta(const std::vector<Rat>& r) {
  const std::size_t n = r.size();
  std::vector<Rat> e(n + 1);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    Rat prod = 1;
    std::size_t bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) {
        prod *= r[i];
        ++bits;
      }
    e[bits] += prod;
  }
  std::vector<Rat> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) c[n - k] = (k % 2 ? Rat(-e[k]) : e[k]);
  return Poly(std::move(c));
}

Rat cofactor_determinant(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Rat det = 0;
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    const Rat minor = cofactor_determinant(a.select(rows, cols));
    det += (j % 2 ? Rat(-1) : Rat(1)) * a(0, j) * minor;
  }
  return det;
}

std::vector<Rat> brute_power_sums(const RootSet& rs, std::size_t count) {
  std::vector<Rat> t(count);
  for (std::size_t k = 0; k < count; ++k)
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
      Rat p = 1;
      for (std::size_t e = 0; e < k; ++e) p *= rs.roots[i];
      t[k] += rs.mults[i] * p;
    }
  return t;
}

Rat brute_pair_sum(const std::vector<Rat>& roots, const Rat& t) {
  Rat s = 0;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const Rat d = roots[i] - roots[j];
      s += 1 / (d * d - t);
    }
  return s;
}

Rat brute_pair_step(const std::vector<Rat>& roots, const Rat& x) {
  return 1 / brute_pair_sum(roots, x) + x;
}

Rat brute_point_step(const std::vector<Rat>& roots, const Rat& c, const Rat& x) {
  Rat s = 0;
  for (const auto& p : roots) {
    const Rat d = p - c;
    s += 1 / (d * d - x);
  }
  return 1 / s + x;
}

Rat min_gap(const std::vector<Rat>& roots) {
  Rat best = -1;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const Rat d = abs(roots[i] - roots[j]);
      if (best < 0 || d < best) best = d;
    }
  return best;
}

Rat max_gap(const std::vector<Rat>& roots) {
  Rat best = 0;
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      const Rat d = abs(roots[i] - roots[j]);
      if (d > best) best = d;
    }
  return best;
}

RootSet random_roots(std::mt19937& rng, int lo, int hi, unsigned min_distinct,
                     unsigned max_distinct, unsigned max_mult, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> count(min_distinct, max_distinct);
  std::uniform_int_distribution<int> value(lo, hi);
  std::uniform_int_distribution<unsigned> mult(1, max_mult);
  const unsigned k = count(rng);
  std::set<int> picked;
  while (picked.size() < k) picked.insert(value(rng));
  RootSet rs;
  unsigned deg = 0;
  for (int v : picked) {
    rs.roots.emplace_back(v);
    rs.mults.push_back(1);
    ++deg;
  }
  // Spend the remaining degree budget on extra multiplicity.
  for (std::size_t i = 0; i < rs.mults.size() && deg < max_degree; ++i) {
    unsigned want = mult(rng);
    while (rs.mults[i] < want && deg < max_degree) {
      ++rs.mults[i];
      ++deg;
    }
  }
  return rs;
}

}  // namespace hgap::testing
