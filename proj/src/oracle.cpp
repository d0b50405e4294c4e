#include "hgap/oracle.hpp"

#include <algorithm>

#include "hgap/error.hpp"

namespace hgap::oracle {

std::vector<Poly> sturm_sequence(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "Sturm sequence of zero");
  std::vector<Poly> seq{p, derivative(p)};
  while (!seq.back().is_zero()) {
    Poly r = -divmod(seq[seq.size() - 2], seq.back()).rem;
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

unsigned sign_changes(std::span<const Poly> seq, const Rat& x) {
  unsigned changes = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

unsigned count_roots(std::span<const Poly> seq, const Rat& lo, const Rat& hi) {
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

Rat cauchy_bound(const Poly& p) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "Cauchy bound of zero");
  Rat m = 0;
  const Rat lc = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) {
    Rat v = abs(p.coeffs()[static_cast<std::size_t>(k)]) / lc;
    if (v > m) m = v;
  }
  return 1 + m;
}

std::vector<RootEnclosure> isolate_real_roots(const Poly& p, const Rat& width) {
  if (width <= 0) throw Error(Errc::InvalidArgument, "enclosure width must be positive");
  const Poly q = square_free_part(p);
  if (q.degree() < 1) return {};
  const auto seq = sturm_sequence(q);
  const Rat bound = cauchy_bound(q);

  std::vector<RootEnclosure> out;
  // Depth-first, right half pushed first so roots come out ascending.
  std::vector<RootEnclosure> stack{{-bound, bound, 0}};
  while (!stack.empty()) {
    RootEnclosure iv = stack.back();
    stack.pop_back();
    const unsigned c = count_roots(seq, iv.lo, iv.hi);
    if (c == 0) continue;
    if (c == 1) {
      iv.sign_change_count = 1;
      out.push_back(iv);
      continue;
    }
    const Rat mid = iv.midpoint();
    stack.push_back({mid, iv.hi, 0});
    stack.push_back({iv.lo, mid, 0});
  }
  for (auto& iv : out) {
    while (iv.width() > width) {
      const Rat mid = iv.midpoint();
      if (count_roots(seq, iv.lo, mid) == 1)
        iv.hi = mid;
      else
        iv.lo = mid;
    }
  }
  return out;
}

BruteForceGaps brute_force_gaps(std::span<const RootEnclosure> encl) {
  if (encl.size() < 2) throw Error(Errc::TooFewRoots, "gaps need at least two roots");
  BruteForceGaps g;
  for (std::size_t i = 0; i + 1 < encl.size(); ++i) {
    const Rat lo = encl[i + 1].lo - encl[i].hi;
    const Rat hi = encl[i + 1].hi - encl[i].lo;
    if (i == 0 || lo < g.min_gap.lo) g.min_gap.lo = lo;
    if (i == 0 || hi < g.min_gap.hi) g.min_gap.hi = hi;
  }
  if (g.min_gap.lo < 0) g.min_gap.lo = 0;
  g.max_gap = {encl.back().lo - encl.front().hi, encl.back().hi - encl.front().lo};
  return g;
}

std::vector<RootMultiplicity> multiplicities_via_gcd(const Poly& p, const Rat& width) {
  if (p.is_zero()) throw Error(Errc::ZeroPolynomial, "multiplicities of zero");
  // chain[k]: roots of multiplicity > k, each with multiplicity reduced by k.
  std::vector<Poly> chain{p.monic()};
  while (chain.back().degree() > 0) {
    const Poly& g = chain.back();
    chain.push_back(gcd(g, derivative(g)));
  }
  // heads[k] = chain[k] / chain[k+1]: square-free, roots of multiplicity > k.
  std::vector<Poly> heads;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    heads.push_back(exact_div(chain[k], chain[k + 1]));

  std::vector<RootMultiplicity> out;
  for (std::size_t k = 0; k < heads.size(); ++k) {
    const Poly exact = k + 1 < heads.size() ? exact_div(heads[k], heads[k + 1]) : heads[k];
    for (const auto& e : isolate_real_roots(exact, width))
      out.push_back({e, static_cast<unsigned>(k + 1)});
  }
  std::sort(out.begin(), out.end(),
            [](const RootMultiplicity& a, const RootMultiplicity& b) { return a.where.hi < b.where.hi; });
  return out;
}

}  // namespace hgap::oracle
